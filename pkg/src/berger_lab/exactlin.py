"""Exact rational linear algebra.

All scalars are arbitrary-precision `fractions.Fraction`; every result is
exact.  Elimination is deterministic (leftmost-pivot, first nonzero row),
so echelon forms are unique and subspace bases are canonical: two
subspaces are equal iff their stored bases are entrywise equal.

Internally the heavy eliminations run on sparse rows of primitive
integers (fraction-free, per-row gcd normalization).  That is an
optimization only; observable results are identical to naive
Fraction-based Gauss-Jordan.

All values are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "RealMatrix",
    "Subspace",
    "SpanSolver",
    "rat_from_str",
    "rat_to_str",
    "rref",
    "rank",
    "nullspace",
    "span_of",
    "subspace_equal",
    "subspace_contains",
    "symmetric_signature",
    "sparse_nullspace",
    "canonical_rows",
]


def rat_to_str(x: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(x)


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


# ---------------------------------------------------------------------------
# dense matrices
# ---------------------------------------------------------------------------

class RealMatrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        ent = tuple(Fraction(e) for e in entries)
        if len(ent) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(ent)}")
        object.__setattr__(self, "entries", ent)

    def __setattr__(self, name, value):
        raise AttributeError("RealMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RealMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        flat = []
        for r in rows:
            if len(r) != nc:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(nr, nc, flat)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RealMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RealMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_lists(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, RealMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"RealMatrix({self.rows}x{self.cols})"

    def __add__(self, other: "RealMatrix") -> "RealMatrix":
        self._check_same_shape(other)
        return RealMatrix(self.rows, self.cols,
                          [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "RealMatrix") -> "RealMatrix":
        self._check_same_shape(other)
        return RealMatrix(self.rows, self.cols,
                          [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "RealMatrix":
        return RealMatrix(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, RealMatrix):
            return self._matmul(other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def scaled(self, c) -> "RealMatrix":
        c = Fraction(c)
        return RealMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def _matmul(self, other: "RealMatrix") -> "RealMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch for matrix product")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [Fraction(0)] * (n * m)
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            orow = i * m
            for t in range(k):
                v = arow[t]
                if v:
                    brow = t * m
                    for j in range(m):
                        w = b[brow + j]
                        if w:
                            out[orow + j] += v * w
        return RealMatrix(n, m, out)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for i in range(self.rows):
            s = Fraction(0)
            base = i * self.cols
            for j, v in enumerate(vec):
                if v:
                    e = self.entries[base + j]
                    if e:
                        s += e * v
            out.append(s)
        return tuple(out)

    def transpose(self) -> "RealMatrix":
        return RealMatrix(self.cols, self.rows,
                          [self.entries[i * self.cols + j]
                           for j in range(self.cols) for i in range(self.rows)])

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def inverse(self) -> "RealMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [Fraction(1) if j == i else Fraction(0)
                                    for j in range(n)] for i in range(n)]
        red, piv = _dense_rref(aug)
        if len(piv) != n or piv != list(range(n)):
            raise ValueError("matrix is singular")
        return RealMatrix(n, n, [red[i][n + j] for i in range(n) for j in range(n)])

    def commutator(self, other: "RealMatrix") -> "RealMatrix":
        return self * other - other * self

    def flatten_sparse(self) -> dict:
        """Nonzero entries as {row*cols+col: value}."""
        return {i: v for i, v in enumerate(self.entries) if v}

    def to_json(self) -> list:
        return [[rat_to_str(v) for v in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "RealMatrix":
        return cls.from_rows([[rat_from_str(v) for v in row] for row in data])

    def _check_same_shape(self, other: "RealMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


# ---------------------------------------------------------------------------
# sparse integer elimination engine
# ---------------------------------------------------------------------------
#
# Rows are dicts {column: int}, kept primitive (gcd 1).  Pivot rows carry a
# positive leading entry.  `Echelon` builds an echelon basis incrementally;
# `full_reduce` turns it into the reduced form (zeros above pivots), from
# which the unique leading-1 RREF is obtained by dividing each row by its
# pivot.

def _normalize_row(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for k in row:
            row[k] //= g
    return row


def _combine(row: dict, a: int, b: int, pivot_row: dict) -> None:
    """row := (b/g)*row - (a/g)*pivot_row, g = gcd(a, b).  Drops zeros."""
    g = gcd(a, b)
    mb = b // g
    ma = a // g
    if mb != 1:
        for k in row:
            row[k] *= mb
    for k, v in pivot_row.items():
        nv = row.get(k, 0) - ma * v
        if nv:
            row[k] = nv
        else:
            row.pop(k, None)


class Echelon:
    """Incremental sparse echelon form over the integers."""

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict[int, dict] = {}  # pivot column -> primitive row

    def insert(self, row: dict) -> int | None:
        """Reduce `row` against the current basis; adopt it if independent.

        Returns the new pivot column, or None if the row reduced to zero.
        The input dict is consumed.
        """
        piv = self.pivots
        while row:
            c = min(row)
            p = piv.get(c)
            if p is None:
                if row[c] < 0:
                    for k in row:
                        row[k] = -row[k]
                _normalize_row(row)
                piv[c] = row
                return c
            _combine(row, row[c], p[c], p)
        return None

    def insert_fraction_row(self, row: dict) -> int | None:
        """Insert a row of Fractions (cleared to a primitive integer row)."""
        den = 1
        for v in row.values():
            den = lcm(den, Fraction(v).denominator)
        return self.insert({k: int(v * den) for k, v in row.items() if v})

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def full_reduce(self) -> None:
        """Zero out entries above every pivot (descending pivot sweep)."""
        piv = self.pivots
        for c in sorted(piv, reverse=True):
            r = piv[c]
            for k in sorted(k for k in r if k != c and k in piv):
                if k in r:
                    _combine(r, r[k], piv[k][k], piv[k])
            if r[c] < 0:
                for k in r:
                    r[k] = -r[k]
            _normalize_row(r)

    def canonical_rows(self) -> list[dict]:
        """Leading-1 RREF rows (Fractions), sorted by pivot column.

        Call only after `full_reduce`.
        """
        out = []
        for c in sorted(self.pivots):
            r = self.pivots[c]
            pv = r[c]
            out.append({k: Fraction(v, pv) for k, v in sorted(r.items())})
        return out

    def reduce_vector(self, vec: dict) -> dict:
        """Remainder of a Fraction vector after reduction (fully reduced basis)."""
        v = {k: Fraction(x) for k, x in vec.items() if x}
        for c in sorted(self.pivots):
            coef = v.get(c)
            if coef:
                r = self.pivots[c]
                f = coef / r[c]
                for k, x in r.items():
                    nv = v.get(k, Fraction(0)) - f * x
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        return v


def sparse_nullspace(rows: Iterable[dict], ncols: int) -> list[dict]:
    """Kernel basis (free-column parametrization) of a sparse integer system.

    `rows` is an iterable of {col: int} equations; it is consumed lazily so
    the equation set never has to be materialized.  Returns one Fraction
    vector per free column, in free-column order (not canonicalized).
    """
    ech = Echelon()
    for row in rows:
        ech.insert(dict(row))
    ech.full_reduce()
    piv = ech.pivots
    pivcols = sorted(piv)
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        vec = {f: Fraction(1)}
        for c in pivcols:
            r = piv[c]
            if f in r:
                vec[c] = Fraction(-r[f], r[c])
        basis.append(vec)
    return basis


def canonical_rows(vectors: Iterable[dict]) -> list[dict]:
    """Canonical RREF basis (sparse leading-1 rows) of the span of `vectors`."""
    ech = Echelon()
    for v in vectors:
        ech.insert_fraction_row(v)
    ech.full_reduce()
    return ech.canonical_rows()


# ---------------------------------------------------------------------------
# dense RREF (the public, externally contracted form)
# ---------------------------------------------------------------------------

def _dense_rref(matrix: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    pivots = []
    pr = 0
    for pc in range(ncols):
        pivot_row = None
        for i in range(pr, nrows):
            if matrix[i][pc] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        matrix[pr], matrix[pivot_row] = matrix[pivot_row], matrix[pr]
        pv = matrix[pr][pc]
        if pv != 1:
            matrix[pr] = [x / pv for x in matrix[pr]]
        for i in range(nrows):
            if i != pr and matrix[i][pc] != 0:
                f = matrix[i][pc]
                matrix[i] = [a - f * b for a, b in zip(matrix[i], matrix[pr])]
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return matrix, pivots


def rref(m: RealMatrix) -> tuple[RealMatrix, list[int]]:
    """Unique reduced row echelon form and its pivot columns.

    Pivot selection: first nonzero entry, scanning columns left to right.
    """
    red, pivots = _dense_rref(m.to_lists())
    return RealMatrix.from_rows(red) if red else RealMatrix.zeros(0, m.cols), pivots


def rank(m: RealMatrix) -> int:
    return len(rref(m)[1])


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A linear subspace of Q^n with a canonical (RREF) basis.

    Canonical form makes equality syntactic: two subspaces coincide iff
    their stored bases are entrywise equal.  Rows are kept sparse; dense
    export is available through `basis`.
    """

    __slots__ = ("ambient_dim", "_rows")

    def __init__(self, ambient_dim: int, canonical_sparse_rows: Sequence[dict]):
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "_rows", tuple(canonical_sparse_rows))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @property
    def dim(self) -> int:
        return len(self._rows)

    def is_zero(self) -> bool:
        return not self._rows

    @property
    def basis(self) -> tuple:
        """Dense canonical basis vectors (leading-1 RREF rows)."""
        out = []
        for r in self._rows:
            v = [Fraction(0)] * self.ambient_dim
            for k, x in r.items():
                v[k] = x
            out.append(tuple(v))
        return tuple(out)

    def sparse_rows(self) -> tuple:
        return self._rows

    def pivot_columns(self) -> list[int]:
        return [min(r) for r in self._rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return self._rows == other._rows

    def __hash__(self):
        return hash((self.ambient_dim,
                     tuple(tuple(sorted(r.items())) for r in self._rows)))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def reduce_vector(self, vec) -> dict:
        """Remainder of `vec` after reduction against the basis."""
        if isinstance(vec, dict):
            v = {k: Fraction(x) for k, x in vec.items() if x}
        else:
            if len(vec) != self.ambient_dim:
                raise ValueError("ambient dimension mismatch")
            v = {k: Fraction(x) for k, x in enumerate(vec) if x}
        # basis rows are fully reduced, so one ascending pass suffices
        for r in self._rows:
            c = min(r)
            coef = v.get(c)
            if coef:
                for k, x in r.items():
                    nv = v.get(k, Fraction(0)) - coef * x
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        return v

    def contains_vector(self, vec) -> bool:
        return not self.reduce_vector(vec)

    def contains(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if other.dim > self.dim:
            return False
        return all(self.contains_vector(r) for r in other._rows)

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "dim": self.dim,
            "basis": [[rat_to_str(v) for v in row] for row in self.basis],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Subspace":
        vecs = [[rat_from_str(v) for v in row] for row in data["basis"]]
        return span_of(vecs, data["ambient_dim"])


def span_of(vectors: Iterable, ambient_dim: int) -> Subspace:
    """Canonical subspace equal to the linear span of `vectors`.

    Vectors may be dense sequences of length `ambient_dim` or sparse dicts.
    """
    sparse = []
    for v in vectors:
        if isinstance(v, dict):
            if v and max(v) >= ambient_dim:
                raise ValueError("vector exceeds ambient dimension")
            sparse.append(v)
        else:
            if len(v) != ambient_dim:
                raise ValueError("vector length must equal ambient dimension")
            sparse.append({i: x for i, x in enumerate(v) if x})
    return Subspace(ambient_dim, canonical_rows(sparse))


def nullspace(m: RealMatrix) -> Subspace:
    """ker(m) with canonical basis; dim = cols - rank(m)."""
    rows = []
    for i in range(m.rows):
        r = m.row(i)
        den = 1
        for v in r:
            den = lcm(den, v.denominator)
        row = {j: int(v * den) for j, v in enumerate(r) if v}
        if row:
            rows.append(row)
    raw = sparse_nullspace(rows, m.cols)
    return Subspace(m.cols, canonical_rows(raw))


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    return a == b


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """True iff span(b) is contained in span(a)."""
    return a.contains(b)


def symmetric_signature(m: RealMatrix) -> tuple[int, int]:
    """Sign count (negatives, positives) of a symmetric matrix.

    Computed by congruent diagonalization; raises if the matrix is not
    symmetric.  Zero diagonal entries after diagonalization are counted in
    neither slot (degenerate directions).
    """
    if not m.is_symmetric():
        raise ValueError("matrix is not symmetric")
    a = m.to_lists()
    n = m.rows
    neg = pos = 0
    for i in range(n):
        if a[i][i] == 0:
            # bring a nonzero onto the diagonal: row/col i += row/col j
            for j in range(i + 1, n):
                if a[i][j] != 0:
                    for c in range(n):
                        a[i][c] += a[j][c]
                    for r in range(n):
                        a[r][i] += a[r][j]
                    break
        pv = a[i][i]
        if pv == 0:
            continue
        if pv > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            if a[j][i] != 0:
                f = a[j][i] / pv
                for c in range(n):
                    a[j][c] -= f * a[i][c]
                for r in range(n):
                    a[r][j] -= f * a[r][i]
    return neg, pos


# ---------------------------------------------------------------------------
# span with coordinate recovery
# ---------------------------------------------------------------------------

class SpanSolver:
    """Incremental span of vectors with coordinate recovery.

    Vectors are added one at a time; `coordinates` expresses an arbitrary
    vector as a combination of the *added* vectors (by their insertion
    index), or returns None if it lies outside the span.
    """

    __slots__ = ("ambient_dim", "_rows", "_count")

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        # list of (reduced sparse row, combo dict {added-index: Fraction})
        self._rows: list[tuple[dict, dict]] = []
        self._count = 0

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: dict) -> tuple[dict, dict]:
        v = {k: Fraction(x) for k, x in vec.items() if x}
        combo: dict[int, Fraction] = {}
        for row, rcombo in self._rows:
            c = min(row)
            coef = v.get(c)
            if coef:
                f = coef / row[c]
                for k, x in row.items():
                    nv = v.get(k, Fraction(0)) - f * x
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
                for k, x in rcombo.items():
                    nv = combo.get(k, Fraction(0)) - f * x
                    if nv:
                        combo[k] = nv
                    else:
                        combo.pop(k, None)
        return v, combo

    def add(self, vec) -> bool:
        """Add a vector (dense sequence or sparse dict); True if independent."""
        if not isinstance(vec, dict):
            vec = {i: x for i, x in enumerate(vec) if x}
        idx = self._count
        self._count += 1
        v, combo = self._reduce(vec)
        if not v:
            return False
        combo[idx] = combo.get(idx, Fraction(0)) + Fraction(1)
        # keep rows ordered by pivot column so reduction is a single pass
        self._rows.append((v, combo))
        self._rows.sort(key=lambda rc: min(rc[0]))
        return True

    def coordinates(self, vec) -> list | None:
        """Coefficients over the added vectors, or None if not in the span."""
        if not isinstance(vec, dict):
            vec = {i: x for i, x in enumerate(vec) if x}
        v, combo = self._reduce(vec)
        if v:
            return None
        out = [Fraction(0)] * self._count
        for k, x in combo.items():
            out[k] = -x
        return out

    def contains(self, vec) -> bool:
        if not isinstance(vec, dict):
            vec = {i: x for i, x in enumerate(vec) if x}
        v, _ = self._reduce(vec)
        return not v
