"""Matrix Lie algebras on a realified quaternionic space.

Every algebra is stored as an explicit basis of real 4m x 4m matrices in
the Witt basis of its space.  Construction follows the block
parametrization

    [ C   -(E0 conj(X))^t   B  ]      C in Mat(t,H), B,D anti-Hermitian,
    [ Y          A          X  ]      A in sp(r0,s0),
    [ D   -(E0 conj(Y))^t  -conj(C)^t ]   X,Y in Mat(r0+s0, t, H)

with E0 = diag(-1 x r0, +1 x s0).  Basis enumeration order is fixed
(C-block entries in row-major quaternion-component order, then B, then A,
then X; the full algebra appends Y, then D) so reports are reproducible.

Algebra equality means equality of matrix spans, not basis lists.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .exactlin import RealMatrix, SpanSolver, Subspace, span_of, sparse_nullspace
from .quatspace import QuatMatrix, Quaternion, QuaternionicSpace, realify

__all__ = [
    "LieAlgebra",
    "build_sp",
    "build_sp1",
    "build_sp_parabolic",
    "build_glq",
    "build_h0",
    "direct_sum",
    "preserves_subspace",
    "algebra_by_name",
    "ALGEBRA_NAMES",
    "sp_dimension",
    "sp_parabolic_dimension",
]

_COMPONENTS = (Quaternion.one(), Quaternion.i(), Quaternion.j(), Quaternion.k())
_IMAGINARY = (Quaternion.i(), Quaternion.j(), Quaternion.k())


def sp_dimension(r: int, s: int) -> int:
    m = r + s
    return m * (2 * m + 1)


def sp_parabolic_dimension(r: int, s: int, t: int) -> int:
    n0 = r + s - 2 * t
    return 4 * t * t + (2 * t * t + t) + n0 * (2 * n0 + 1) + 4 * n0 * t


class LieAlgebra:
    """A linearly independent list of real matrices spanning a subalgebra
    of gl(4m, R), with provenance metadata."""

    __slots__ = ("name", "space", "basis", "dim", "metric_compatible", "_span")

    def __init__(self, name: str, space: QuaternionicSpace, basis,
                 metric_compatible: bool = True):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "dim", len(self.basis))
        object.__setattr__(self, "metric_compatible", metric_compatible)
        object.__setattr__(self, "_span", None)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim})"

    def _span_solver(self) -> SpanSolver:
        span = self._span
        if span is None:
            n = self.space.real_dim
            span = SpanSolver(n * n)
            for b in self.basis:
                if not span.add(b.flatten_sparse()):
                    raise ValueError(f"basis of {self.name} is linearly dependent")
            object.__setattr__(self, "_span", span)
        return span

    def coordinates_of(self, m: RealMatrix):
        """Coefficients of `m` over the basis, or None if outside the span."""
        return self._span_solver().coordinates(m.flatten_sparse())

    def contains_matrix(self, m: RealMatrix) -> bool:
        return self._span_solver().contains(m.flatten_sparse())

    def span_subspace(self) -> Subspace:
        """Canonical subspace of flattened matrices (for algebra equality)."""
        n = self.space.real_dim
        return span_of([b.flatten_sparse() for b in self.basis], n * n)

    def check_closure(self) -> bool:
        """[B_i, B_j] lies in the span for all basis pairs."""
        for i, a in enumerate(self.basis):
            for b in self.basis[i + 1:]:
                if not self.contains_matrix(a.commutator(b)):
                    return False
        return True

    def check_metric_compatibility(self) -> bool:
        """eta*B + B^t*eta = 0 for every basis element."""
        eta = self.space.eta
        return all((eta * b + b.transpose() * eta).is_zero() for b in self.basis)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": [b.to_json() for b in self.basis],
        }


def _witt_index_maps(space: QuaternionicSpace):
    t, n0 = space.t, space.m - 2 * space.t
    p = lambda i: i
    e = lambda i: t + i
    q = lambda i: t + n0 + i
    return p, e, q


def _e0_signs(space: QuaternionicSpace) -> list[int]:
    r0 = space.r - space.t
    s0 = space.s - space.t
    return [-1] * r0 + [1] * s0


def _c_family(space):
    """C in Mat(t,H) paired with -conj(C)^t in the opposite corner."""
    t = space.t
    p, _, q = _witt_index_maps(space)
    for i in range(t):
        for j in range(t):
            for c in _COMPONENTS:
                yield {(p(i), p(j)): c, (q(j), q(i)): -c.conjugate()}


def _anti_hermitian_family(space, row_of, col_of):
    """S(t,H) = {B : conj(B)^t = -B} placed at (row_of, col_of) corners."""
    t = space.t
    for i in range(t):
        for c in _IMAGINARY:
            yield {(row_of(i), col_of(i)): c}
        for j in range(i + 1, t):
            for c in _COMPONENTS:
                yield {(row_of(i), col_of(j)): c,
                       (row_of(j), col_of(i)): -c.conjugate()}


def _a_family(space):
    """sp(r0, s0) block on the e-basis."""
    _, e, _ = _witt_index_maps(space)
    eps = _e0_signs(space)
    n0 = len(eps)
    for i in range(n0):
        for c in _IMAGINARY:
            yield {(e(i), e(i)): c}
        for j in range(i + 1, n0):
            for c in _COMPONENTS:
                yield {(e(i), e(j)): c,
                       (e(j), e(i)): -Fraction(eps[i] * eps[j]) * c.conjugate()}


def _x_family(space):
    """X in Mat(r0+s0, t, H) with the forced -(E0 conj(X))^t partner."""
    p, e, q = _witt_index_maps(space)
    eps = _e0_signs(space)
    for i in range(len(eps)):
        for j in range(space.t):
            for c in _COMPONENTS:
                yield {(e(i), q(j)): c,
                       (p(j), e(i)): -Fraction(eps[i]) * c.conjugate()}


def _y_family(space):
    p, e, q = _witt_index_maps(space)
    eps = _e0_signs(space)
    for i in range(len(eps)):
        for j in range(space.t):
            for c in _COMPONENTS:
                yield {(e(i), p(j)): c,
                       (q(j), e(i)): -Fraction(eps[i]) * c.conjugate()}


def _realified(space, sparse_entries) -> RealMatrix:
    return realify(QuatMatrix.from_entries(space.m, space.m, sparse_entries))


def build_sp(space: QuaternionicSpace) -> LieAlgebra:
    """Realification of sp(r, s): all H-linear maps skew-Hermitian for the
    quaternionic form; dim = (r+s)(2(r+s)+1)."""
    p, _, q = _witt_index_maps(space)
    fams = []
    fams.extend(_c_family(space))
    fams.extend(_anti_hermitian_family(space, p, q))   # B block
    fams.extend(_a_family(space))
    fams.extend(_x_family(space))
    fams.extend(_y_family(space))
    fams.extend(_anti_hermitian_family(space, q, p))   # D block
    basis = [_realified(space, f) for f in fams]
    alg = LieAlgebra(f"sp({space.r},{space.s})", space, basis)
    assert alg.dim == sp_dimension(space.r, space.s)
    return alg


def build_sp_parabolic(space: QuaternionicSpace) -> LieAlgebra:
    """The maximal subalgebra of sp(r, s) preserving the isotropic part W:
    blocks C, B, A, X with the lower-left corner zero."""
    if space.t < 1:
        raise ValueError("parabolic subalgebra requires t >= 1")
    p, _, q = _witt_index_maps(space)
    fams = []
    fams.extend(_c_family(space))
    fams.extend(_anti_hermitian_family(space, p, q))
    fams.extend(_a_family(space))
    fams.extend(_x_family(space))
    basis = [_realified(space, f) for f in fams]
    alg = LieAlgebra(f"sp({space.r},{space.s})_W", space, basis)
    assert alg.dim == sp_parabolic_dimension(space.r, space.s, space.t)
    return alg


def build_sp1(space: QuaternionicSpace) -> LieAlgebra:
    """The 3-dimensional algebra spanned by the structure triple; commutes
    elementwise with every realified left-matrix action."""
    return LieAlgebra("sp(1)", space, space.I)


def build_glq(space: QuaternionicSpace) -> LieAlgebra:
    """gl(r, H) embedded as diag(C, -conj(C)^t); requires r = s = t."""
    if not (space.r == space.s == space.t >= 1):
        raise ValueError("gl(r,H) block algebra requires r = s = t >= 1")
    basis = [_realified(space, f) for f in _c_family(space)]
    alg = LieAlgebra(f"gl({space.r},H)", space, basis)
    assert alg.dim == 4 * space.r * space.r
    return alg


def direct_sum(a: LieAlgebra, b: LieAlgebra, name: str | None = None) -> LieAlgebra:
    """Concatenated basis of two commuting subalgebras with trivial
    intersection; raises "not a direct sum" otherwise."""
    if a.space is not b.space:
        raise ValueError("summands live on different spaces")
    for x in a.basis:
        for y in b.basis:
            if not x.commutator(y).is_zero():
                raise ValueError("not a direct sum: summands do not commute")
    span = SpanSolver(a.space.real_dim ** 2)
    for x in a.basis:
        span.add(x.flatten_sparse())
    for y in b.basis:
        if not span.add(y.flatten_sparse()):
            raise ValueError("not a direct sum: spans overlap")
    return LieAlgebra(
        name or f"{a.name}+{b.name}", a.space, a.basis + b.basis,
        metric_compatible=a.metric_compatible and b.metric_compatible,
    )


def build_h0(space: QuaternionicSpace) -> LieAlgebra:
    """sp(1) + gl(r,H) block algebra; dim 3 + 4r^2.  Requires r = s = t."""
    return direct_sum(build_sp1(space), build_glq(space), name="h0")


def preserves_subspace(g: LieAlgebra, v: Subspace) -> bool:
    """True iff B*x lies in V for every basis element B and x in V."""
    if v.ambient_dim != g.space.real_dim:
        raise ValueError("ambient dimension mismatch")
    for b in g.basis:
        for vec in v.basis:
            if not v.contains_vector(b.apply(vec)):
                return False
    return True


def stabilizer_of_subspace(g: LieAlgebra, v: Subspace) -> Subspace:
    """{A in span(g) : A*V <= V} as a subspace of flattened matrices."""
    if v.ambient_dim != g.space.real_dim:
        raise ValueError("ambient dimension mismatch")
    n = g.space.real_dim
    vbasis = v.basis
    rows = []
    # coefficient vector x over g.basis; constraint: residue of sum x_k B_k u
    # after reduction against V vanishes, for every u in V's basis
    for u in vbasis:
        residues = [v.reduce_vector(b.apply(u)) for b in g.basis]
        coords = set()
        for res in residues:
            coords.update(res)
        for c in sorted(coords):
            row = {}
            for k, res in enumerate(residues):
                val = res.get(c)
                if val:
                    row[k] = val
            if row:
                den = 1
                for val in row.values():
                    den = lcm(den, val.denominator)
                rows.append({k: int(val * den) for k, val in row.items()})
    kernel = sparse_nullspace(rows, g.dim)
    mats = []
    for vec in kernel:
        m = RealMatrix.zeros(n, n)
        for k, coef in vec.items():
            m = m + g.basis[k].scaled(coef)
        mats.append(m.flatten_sparse())
    return span_of(mats, n * n)


ALGEBRA_NAMES = ("sp", "sp_w", "sp1", "glq", "h0", "sp1+sp", "sp1+sp_w")


def algebra_by_name(name: str, space: QuaternionicSpace) -> LieAlgebra:
    """Construct a registry algebra on `space`; KeyError for unknown names."""
    builders = {
        "sp": build_sp,
        "sp_w": build_sp_parabolic,
        "sp1": build_sp1,
        "glq": build_glq,
        "h0": build_h0,
        "sp1+sp": lambda sp: direct_sum(build_sp1(sp), build_sp(sp)),
        "sp1+sp_w": lambda sp: direct_sum(build_sp1(sp), build_sp_parabolic(sp)),
    }
    if name not in builders:
        raise KeyError(f"unknown algebra {name!r}; known: {', '.join(ALGEBRA_NAMES)}")
    return builders[name](space)
