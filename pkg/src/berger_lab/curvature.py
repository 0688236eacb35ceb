"""Algebraic curvature tensors of type g.

A curvature tensor is a linear map from bivectors to a Lie algebra g
satisfying the cyclic first Bianchi identity; the space of all of them is
computed exactly as the kernel of the Bianchi map.  Also here: the
distinguished tensors R0 (the quaternionic projective model, nonzero
scalar) and R1 (the generator for the h0 block algebra), Ricci and scalar
contractions, the natural g-action on tensors, vanishing checks on
degenerate pairs, and the space of curvature derivatives allowed by the
second Bianchi identity.

Coefficient layout: bivectors (a, b) with a < b are ordered
lexicographically over the realified basis; a tensor is stored as one
coefficient vector over the algebra basis per bivector, flattened
bivector-major.  Kernel bases are canonical RREF rows of that coefficient
space, so each basis tensor has its first nonzero coefficient equal to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .exactlin import (RealMatrix, Subspace, canonical_rows, rat_from_str,
                       rat_to_str, span_of, sparse_nullspace)
from .liealg import LieAlgebra, build_h0, build_sp, build_sp1, direct_sum
from .quatspace import QuaternionicSpace

__all__ = [
    "CurvatureElement",
    "CurvatureSpace",
    "DegenerateReport",
    "bianchi_kernel",
    "build_r0",
    "build_r1",
    "ricci",
    "scalar",
    "act",
    "restrict_check_degenerate",
    "derivative_space",
    "pair_symmetry_holds",
    "pair_symmetry_all",
    "coefficients_over",
    "element_over",
    "bivector_pairs",
]


def bivector_pairs(n: int) -> list[tuple[int, int]]:
    """Lexicographic (a, b), a < b, over n basis vectors."""
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


class CurvatureElement:
    """A curvature tensor with values in a fixed algebra.

    `coeffs[biv][k]` is the coefficient of algebra basis element k in
    R(e_a, e_b) for the biv-th bivector (a, b); R(e_b, e_a) = -R(e_a, e_b)
    by construction.
    """

    __slots__ = ("space", "algebra", "coeffs")

    def __init__(self, space: QuaternionicSpace, algebra: LieAlgebra, coeffs):
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coeffs",
                           tuple(tuple(Fraction(c) for c in row) for row in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CurvatureElement is immutable")

    @classmethod
    def from_sparse(cls, space, algebra, vec: dict) -> "CurvatureElement":
        nb = len(bivector_pairs(space.real_dim))
        dimg = algebra.dim
        coeffs = [[Fraction(0)] * dimg for _ in range(nb)]
        for key, v in vec.items():
            ib, k = divmod(key, dimg)
            coeffs[ib][k] = Fraction(v)
        return cls(space, algebra, coeffs)

    def sparse_vector(self) -> dict:
        dimg = self.algebra.dim
        out = {}
        for ib, row in enumerate(self.coeffs):
            base = ib * dimg
            for k, v in enumerate(row):
                if v:
                    out[base + k] = v
        return out

    def is_zero(self) -> bool:
        return all(not any(row) for row in self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, CurvatureElement)
                and self.algebra.name == other.algebra.name
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"CurvatureElement(algebra={self.algebra.name!r})"

    def scaled(self, c) -> "CurvatureElement":
        c = Fraction(c)
        return CurvatureElement(self.space, self.algebra,
                                [[c * v for v in row] for row in self.coeffs])

    def __add__(self, other: "CurvatureElement") -> "CurvatureElement":
        if self.algebra is not other.algebra and self.algebra.name != other.algebra.name:
            raise ValueError("elements over different algebras")
        return CurvatureElement(
            self.space, self.algebra,
            [[a + b for a, b in zip(r1, r2)]
             for r1, r2 in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CurvatureElement") -> "CurvatureElement":
        return self + other.scaled(-1)

    def value(self, a: int, b: int) -> RealMatrix:
        """R(e_a, e_b) as a matrix (antisymmetric in a, b)."""
        n = self.space.real_dim
        if a == b:
            return RealMatrix.zeros(n, n)
        sign = 1
        if a > b:
            a, b, sign = b, a, -1
        ib = _biv_index(n, a, b)
        out = [Fraction(0)] * (n * n)
        for k, c in enumerate(self.coeffs[ib]):
            if c:
                c = sign * c
                for pos, v in self.algebra.basis[k].flatten_sparse().items():
                    out[pos] += c * v
        return RealMatrix(n, n, out)

    def value_column(self, a: int, b: int, col: int) -> list:
        """Column `col` of R(e_a, e_b), cheaper than the full matrix."""
        n = self.space.real_dim
        out = [Fraction(0)] * n
        if a == b:
            return out
        sign = 1
        if a > b:
            a, b, sign = b, a, -1
        ib = _biv_index(n, a, b)
        for k, c in enumerate(self.coeffs[ib]):
            if c:
                c = sign * c
                basis_k = self.algebra.basis[k]
                for d in range(n):
                    v = basis_k[d, col]
                    if v:
                        out[d] += c * v
        return out

    def to_json(self) -> list:
        return [[rat_to_str(v) for v in row] for row in self.coeffs]


def _biv_index(n: int, a: int, b: int) -> int:
    # position of (a, b), a < b, in lexicographic order
    return a * n - a * (a + 1) // 2 + (b - a - 1)


class CurvatureSpace:
    """Basis of the kernel of the first-Bianchi map into a given algebra."""

    __slots__ = ("space", "algebra", "basis", "dim")

    def __init__(self, space, algebra, basis):
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "dim", len(self.basis))

    def __setattr__(self, name, value):
        raise AttributeError("CurvatureSpace is immutable")

    def __repr__(self):
        return f"CurvatureSpace(algebra={self.algebra.name!r}, dim={self.dim})"

    def coefficient_subspace(self) -> Subspace:
        nb = len(bivector_pairs(self.space.real_dim))
        ambient = nb * self.algebra.dim
        return span_of([el.sparse_vector() for el in self.basis], ambient)

    def contains(self, element: CurvatureElement) -> bool:
        if element.algebra.name != self.algebra.name:
            raise ValueError("element lives over a different algebra")
        return self.coefficient_subspace().contains_vector(element.sparse_vector())

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.name,
            "r": self.space.r,
            "s": self.space.s,
            "t": self.space.t,
            "dim": self.dim,
            "basis": [el.to_json() for el in self.basis],
        }

    @classmethod
    def from_json(cls, space, algebra, data: dict) -> "CurvatureSpace":
        basis = [
            CurvatureElement(space, algebra,
                             [[rat_from_str(v) for v in row] for row in el])
            for el in data["basis"]
        ]
        return cls(space, algebra, basis)


def _column_maps(algebra: LieAlgebra):
    """col_map[k][c] = {row d: value} of basis element k, denominators cleared
    per matrix (scaling a basis element does not change kernels)."""
    n = algebra.space.real_dim
    maps = []
    for bmat in algebra.basis:
        den = 1
        for v in bmat.entries:
            den = lcm(den, v.denominator)
        cols = [dict() for _ in range(n)]
        for pos, v in bmat.flatten_sparse().items():
            d, c = divmod(pos, n)
            cols[c][d] = int(v * den)
        maps.append(cols)
    return maps


def _bianchi_rows(algebra: LieAlgebra):
    """Integer equation rows of the first-Bianchi map, streamed."""
    n = algebra.space.real_dim
    dimg = algebra.dim
    col_maps = _column_maps(algebra)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                # R(a,b)e_c + R(b,c)e_a - R(a,c)e_b = 0, one row per coordinate
                by_coord: dict[int, dict] = {}
                for pair, col, sign in (((a, b), c, 1), ((b, c), a, 1), ((a, c), b, -1)):
                    base = _biv_index(n, *pair) * dimg
                    for k in range(dimg):
                        for d, v in col_maps[k][col].items():
                            row = by_coord.setdefault(d, {})
                            key = base + k
                            nv = row.get(key, 0) + sign * v
                            if nv:
                                row[key] = nv
                            else:
                                del row[key]
                for d in sorted(by_coord):
                    if by_coord[d]:
                        yield by_coord[d]


def bianchi_kernel(algebra: LieAlgebra) -> CurvatureSpace:
    """The space of algebraic curvature tensors with values in `algebra`,
    i.e. the exact kernel of the first-Bianchi map on Hom(Lambda^2, g)."""
    n = algebra.space.real_dim
    ncols = len(bivector_pairs(n)) * algebra.dim
    raw = sparse_nullspace(_bianchi_rows(algebra), ncols)
    rows = canonical_rows(raw)
    basis = [CurvatureElement.from_sparse(algebra.space, algebra, r) for r in rows]
    return CurvatureSpace(algebra.space, algebra, basis)


# ---------------------------------------------------------------------------
# the model tensor R0 and the h0 generator R1
# ---------------------------------------------------------------------------

def _wedge_matrix(space, u, v) -> list:
    """(u ^ v) Z = eta(v, Z) u - eta(u, Z) v, returned as a flat n x n list.

    This orientation of the wedge is the unique one under which the model
    tensor below satisfies the first Bianchi identity (the opposite sign
    fails; see the conformance tests).
    """
    n = space.real_dim
    eta = space.eta
    eta_u = eta.apply(u)
    eta_v = eta.apply(v)
    out = [Fraction(0)] * (n * n)
    for d in range(n):
        ud, vd = u[d], v[d]
        if ud or vd:
            base = d * n
            for z in range(n):
                val = eta_v[z] * ud - eta_u[z] * vd
                if val:
                    out[base + z] = val
    return out


def r0_value_matrix(space: QuaternionicSpace, a: int, b: int) -> RealMatrix:
    """Value on (e_a, e_b) of the curvature tensor of the quaternionic
    projective model:

        R0(X, Y) = 1/2 sum_a eta(X, I_a Y) I_a
                   + 1/4 (X ^ Y + sum_a I_a X ^ I_a Y)
    """
    n = space.real_dim
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    ea = [Fraction(0)] * n
    ea[a] = Fraction(1)
    eb = [Fraction(0)] * n
    eb[b] = Fraction(1)
    out = [Fraction(0)] * (n * n)
    for ialpha in space.I:
        coef = (space.eta * ialpha)[a, b]
        if coef:
            coef *= half
            for pos, v in ialpha.flatten_sparse().items():
                out[pos] += coef * v
    for w in (_wedge_matrix(space, ea, eb),
              *(_wedge_matrix(space, list(ialpha.column(a)), list(ialpha.column(b)))
                for ialpha in space.I)):
        for pos, v in enumerate(w):
            if v:
                out[pos] += quarter * v
    return RealMatrix(n, n, out)


def build_r0(space: QuaternionicSpace,
             algebra: LieAlgebra | None = None) -> CurvatureElement:
    """R0 expressed over the basis of sp(1) + sp(r, s)."""
    if algebra is None:
        algebra = direct_sum(build_sp1(space), build_sp(space))
    n = space.real_dim
    coeffs = []
    for a, b in bivector_pairs(n):
        coords = algebra.coordinates_of(r0_value_matrix(space, a, b))
        if coords is None:
            raise ValueError("R0 value escapes the algebra span")
        coeffs.append(coords)
    return CurvatureElement(space, algebra, coeffs)


def build_r1(space: QuaternionicSpace,
             curvature: CurvatureSpace | None = None) -> CurvatureElement:
    """The generator of the 1-dimensional curvature space of h0, normalized
    so its first nonzero coefficient (canonical ordering) equals 1."""
    if curvature is None:
        curvature = bianchi_kernel(build_h0(space))
    if curvature.dim != 1:
        raise ValueError(
            f"unexpected curvature space dimension {curvature.dim} for h0")
    return curvature.basis[0]  # canonical rows already lead with 1


# ---------------------------------------------------------------------------
# contractions
# ---------------------------------------------------------------------------

def ricci(element: CurvatureElement) -> RealMatrix:
    """Ric(Y, Z) = trace(X -> R(X, Y) Z)."""
    n = element.space.real_dim
    ric = [[Fraction(0)] * n for _ in range(n)]
    for a, b in bivector_pairs(n):
        m = element.value(a, b)
        row_a = m.row(a)
        row_b = m.row(b)
        for z in range(n):
            if row_a[z]:
                ric[b][z] += row_a[z]
            if row_b[z]:
                ric[a][z] -= row_b[z]
    return RealMatrix.from_rows(ric)


def scalar(element: CurvatureElement) -> Fraction:
    """Trace of the Ricci tensor raised by the inverse metric."""
    ric = ricci(element)
    inv = element.space.eta_inverse()
    n = element.space.real_dim
    total = Fraction(0)
    for b in range(n):
        for c in range(n):
            v = inv[b, c]
            if v:
                total += v * ric[c, b]
    return total


# ---------------------------------------------------------------------------
# the algebra action on curvature tensors
# ---------------------------------------------------------------------------

def act(a_mat: RealMatrix, element: CurvatureElement) -> CurvatureElement:
    """(A . R)(X, Y) = [A, R(X, Y)] - R(AX, Y) - R(X, AY) on basis bivectors.

    Requires [A, B_k] to stay in the element's algebra (true whenever A
    belongs to it, or more generally normalizes it).
    """
    algebra = element.algebra
    space = element.space
    n = space.real_dim
    dimg = algebra.dim
    ad_a = []
    for bmat in algebra.basis:
        coords = algebra.coordinates_of(a_mat.commutator(bmat))
        if coords is None:
            raise ValueError("bracket with A leaves the algebra span")
        ad_a.append(coords)
    pairs = bivector_pairs(n)

    def signed_coeffs(x, y):
        if x == y:
            return None, 0
        if x < y:
            return element.coeffs[_biv_index(n, x, y)], 1
        return element.coeffs[_biv_index(n, y, x)], -1

    new_coeffs = []
    for a, b in pairs:
        row = [Fraction(0)] * dimg
        for k, c in enumerate(element.coeffs[_biv_index(n, a, b)]):
            if c:
                adk = ad_a[k]
                for k2 in range(dimg):
                    if adk[k2]:
                        row[k2] += c * adk[k2]
        for col, other, first_slot in ((a, b, True), (b, a, False)):
            acol = a_mat.column(col)
            for d in range(n):
                coef = acol[d]
                if not coef:
                    continue
                cc, sg = signed_coeffs(d, other) if first_slot else signed_coeffs(other, d)
                if cc is None:
                    continue
                f = coef * sg
                for k2 in range(dimg):
                    if cc[k2]:
                        row[k2] -= f * cc[k2]
        new_coeffs.append(row)
    return CurvatureElement(space, algebra, new_coeffs)


# ---------------------------------------------------------------------------
# degenerate-pair vanishing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegenerateReport:
    """Outcome of the vanishing checks R(p, X) = 0 and R(X, Y)|_W = 0 for
    p in W and X, Y in the non-degenerate complement E."""

    status: str  # "pass" | "fail" | "vacuous"
    checked_elements: int = 0
    witnesses: tuple = ()

    def passed(self) -> bool:
        return self.status in ("pass", "vacuous")


def restrict_check_degenerate(curvature: CurvatureSpace) -> DegenerateReport:
    space = curvature.space
    if space.t < 1:
        raise ValueError("degenerate-pair check requires t >= 1")
    w_idx = list(space.w_indices())
    e_idx = list(space.e_indices())
    if not e_idx:
        return DegenerateReport(status="vacuous", checked_elements=curvature.dim)
    witnesses = []
    for i, el in enumerate(curvature.basis):
        for p in w_idx:
            for x in e_idx:
                if not el.value(p, x).is_zero():
                    witnesses.append((i, "R(p,X) != 0", (p, x)))
        for x in e_idx:
            for y in e_idx:
                if x >= y:
                    continue
                for p in w_idx:
                    col = el.value_column(x, y, p)
                    if any(col):
                        witnesses.append((i, "R(X,Y)p != 0", (x, y, p)))
    status = "pass" if not witnesses else "fail"
    return DegenerateReport(status=status, checked_elements=curvature.dim,
                            witnesses=tuple(witnesses))


# ---------------------------------------------------------------------------
# second Bianchi: the space of candidate curvature derivatives
# ---------------------------------------------------------------------------

def derivative_space(curvature: CurvatureSpace) -> Subspace:
    """Maps T: R^n -> R(g) with cyclic sum T(X)(Y,Z) + T(Y)(Z,X) + T(Z)(X,Y)
    zero on all basis triples, as a subspace of R^{n * dim R(g)}."""
    space = curvature.space
    n = space.real_dim
    kdim = curvature.dim
    if kdim == 0:
        return Subspace.zero(0)
    dimg = curvature.algebra.dim

    def coeff(i, x, y, k):
        if x == y:
            return Fraction(0)
        if x < y:
            return curvature.basis[i].coeffs[_biv_index(n, x, y)][k]
        return -curvature.basis[i].coeffs[_biv_index(n, y, x)][k]

    def rows():
        for x in range(n):
            for y in range(x + 1, n):
                for z in range(y + 1, n):
                    for k in range(dimg):
                        row = {}
                        for i in range(kdim):
                            total_x = coeff(i, y, z, k)
                            if total_x:
                                row[x * kdim + i] = row.get(x * kdim + i, Fraction(0)) + total_x
                            total_y = coeff(i, z, x, k)
                            if total_y:
                                row[y * kdim + i] = row.get(y * kdim + i, Fraction(0)) + total_y
                            total_z = coeff(i, x, y, k)
                            if total_z:
                                row[z * kdim + i] = row.get(z * kdim + i, Fraction(0)) + total_z
                        row = {key: v for key, v in row.items() if v}
                        if row:
                            den = 1
                            for v in row.values():
                                den = lcm(den, v.denominator)
                            yield {key: int(v * den) for key, v in row.items()}

    raw = sparse_nullspace(rows(), n * kdim)
    return Subspace(n * kdim, canonical_rows(raw))


# ---------------------------------------------------------------------------
# pair symmetry eta(R(X,Y)Z, U) = eta(R(Z,U)X, Y)
# ---------------------------------------------------------------------------

def _pairing_table(algebra: LieAlgebra):
    """table[k][biv] = eta(B_k e_c, e_d) for the biv-th bivector (c, d)."""
    space = algebra.space
    n = space.real_dim
    pairs = bivector_pairs(n)
    table = []
    for bmat in algebra.basis:
        eb = space.eta * bmat
        table.append([eb[d, c] for (c, d) in pairs])
    return table


def _pair_symmetry_single(element: CurvatureElement, table) -> bool:
    n = element.space.real_dim
    pairs = bivector_pairs(n)
    nb = len(pairs)
    dimg = element.algebra.dim
    # P[i][j] = eta(R(pair_i) e_c, e_d) for pair_j = (c, d); values in the
    # metric algebra make the full quadruple check equivalent to P symmetric
    p = [[Fraction(0)] * nb for _ in range(nb)]
    for ib, row in enumerate(element.coeffs):
        target = p[ib]
        for k, c in enumerate(row):
            if c:
                tk = table[k]
                for jb in range(nb):
                    if tk[jb]:
                        target[jb] += c * tk[jb]
    for i in range(nb):
        pi = p[i]
        for j in range(i + 1, nb):
            if pi[j] != p[j][i]:
                return False
    return True


def pair_symmetry_holds(element: CurvatureElement) -> bool:
    """Check eta(R(X,Y)Z, U) = eta(R(Z,U)X, Y) on all basis quadruples."""
    return _pair_symmetry_single(element, _pairing_table(element.algebra))


def pair_symmetry_all(curvature: CurvatureSpace) -> bool:
    """Pair symmetry for every basis element, sharing the pairing table."""
    if curvature.dim == 0:
        return True
    table = _pairing_table(curvature.algebra)
    return all(_pair_symmetry_single(el, table) for el in curvature.basis)


# ---------------------------------------------------------------------------
# comparisons across algebras
# ---------------------------------------------------------------------------

def element_over(element: CurvatureElement, target: LieAlgebra) -> dict:
    """The element's coefficient vector re-expressed over `target`'s basis
    (sparse, bivector-major).  Requires the element's algebra to sit inside
    `target` as a subspace."""
    mapped = []
    for bmat in element.algebra.basis:
        coords = target.coordinates_of(bmat)
        if coords is None:
            raise ValueError(
                f"{element.algebra.name} does not embed in {target.name}")
        mapped.append(coords)
    dim_t = target.dim
    out: dict[int, Fraction] = {}
    for ib, row in enumerate(element.coeffs):
        base = ib * dim_t
        for k, c in enumerate(row):
            if c:
                for k2, v in enumerate(mapped[k]):
                    if v:
                        key = base + k2
                        nv = out.get(key, Fraction(0)) + c * v
                        if nv:
                            out[key] = nv
                        else:
                            del out[key]
    return out


def coefficients_over(curvature: CurvatureSpace, target: LieAlgebra) -> Subspace:
    """The curvature space as a canonical subspace of the coefficient space
    over a larger algebra (for monotonicity and equality comparisons)."""
    nb = len(bivector_pairs(curvature.space.real_dim))
    vectors = [element_over(el, target) for el in curvature.basis]
    return span_of(vectors, nb * target.dim)
