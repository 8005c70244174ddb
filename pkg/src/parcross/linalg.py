"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`; matrices are tuples of
row tuples.  A linear map ``V -> W`` is stored as a ``dim W x dim V`` matrix
acting on column vectors.

Subspaces are kept in reduced row echelon form, so equal subspaces have equal
representations and the coordinates of a member vector with respect to the
echelon basis are simply its entries at the pivot columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadShape, DimMismatch, MembershipBreach

Vector = tuple
Matrix = tuple

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero(n: int) -> Vector:
    return (ZERO,) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero(v: Sequence) -> bool:
    return not any(v)


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                if x:
                    out[k] += c * x
    return tuple(out)


# -- matrices ---------------------------------------------------------------

def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(basis_vector(n, i) for i in range(n))


def zero_matrix(rows: int, cols: int) -> Matrix:
    return tuple(zero(cols) for _ in range(rows))


def shape(M: Matrix, cols: int | None = None) -> tuple[int, int]:
    # a 0-row matrix carries no column count, so callers pass it explicitly
    if M:
        return len(M), len(M[0])
    return 0, cols or 0


def transpose(M: Matrix, cols: int | None = None) -> Matrix:
    r, c = shape(M, cols)
    return tuple(tuple(M[i][j] for i in range(r)) for j in range(c))


def apply(M: Matrix, v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in M)


def matmul(M: Matrix, N: Matrix, inner: int | None = None, cols: int | None = None) -> Matrix:
    if not M:
        return ()
    ncols = len(N[0]) if N else (cols or 0)
    Nt = transpose(N, ncols) if N else tuple(() for _ in range(ncols))
    return tuple(tuple(dot(row, col) for col in Nt) for row in M)


def columns_to_matrix(cols: Sequence[Sequence], nrows: int) -> Matrix:
    """Matrix whose j-th column is ``cols[j]``."""
    return tuple(tuple(c[i] for c in cols) for i in range(nrows))


# -- elimination ------------------------------------------------------------

def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    A = [list(map(Fraction, r)) for r in rows]
    for r in A:
        if len(r) != ncols:
            raise BadShape(f"row of length {len(r)} in a {ncols}-column system")
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(A)) if A[i][col]), None)
        if piv is None:
            continue
        A[top], A[piv] = A[piv], A[top]
        prow = A[top]
        inv = 1 / prow[col]
        if inv != 1:
            for k in range(col, ncols):
                if prow[k]:
                    prow[k] *= inv
        nz = [k for k in range(col, ncols) if prow[k]]
        for i in range(len(A)):
            if i != top:
                f = A[i][col]
                if f:
                    row = A[i]
                    for k in nz:
                        row[k] -= f * prow[k]
        pivots.append(col)
        top += 1
        if top == len(A):
            break
    return A[:top], pivots


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of ``{x : row . x = 0 for every row}``."""
    R, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [ZERO] * ncols
        x[free] = ONE
        for row, p in zip(R, pivots):
            x[p] = -row[free]
        basis.append(tuple(x))
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int) -> Vector | None:
    """One solution of ``rows . x = rhs`` or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    return tuple(x)


def inverse(M: Matrix) -> Matrix | None:
    n = len(M)
    aug = [list(M[i]) + list(basis_vector(n, i)) for i in range(n)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return tuple(tuple(R[i][n:]) for i in range(n))


# -- subspaces --------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^ambient_dim`` held by its reduced echelon basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...] = field(compare=False, repr=False, default=())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence) -> Vector:
        """Canonical residue of ``v`` modulo this subspace."""
        if len(v) != self.ambient_dim:
            raise DimMismatch(f"vector of length {len(v)} in ambient dim {self.ambient_dim}")
        out = list(v)
        for p, row in zip(self.pivots, self.basis):
            c = out[p]
            if c:
                for k, x in enumerate(row):
                    if x:
                        out[k] -= c * x
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return is_zero(self.reduce(v))

    def coords(self, v: Sequence) -> Vector:
        """Coordinates of a member vector with respect to the echelon basis."""
        if not self.contains(v):
            raise MembershipBreach(f"vector {fmt_vector(v)} is not in the subspace", witness=tuple(v))
        return tuple(Fraction(v[p]) for p in self.pivots)

    def from_coords(self, c: Sequence) -> Vector:
        if len(c) != self.dim:
            raise DimMismatch(f"{len(c)} coordinates for a {self.dim}-dimensional subspace")
        return lincomb(c, self.basis, self.ambient_dim)

    def includes(self, other: "Subspace") -> bool:
        _check_same_ambient(self, other)
        return all(self.contains(b) for b in other.basis)

    def complement_indices(self) -> tuple[int, ...]:
        ps = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in ps)

    def __str__(self):
        return "span{" + ", ".join(fmt_vector(b) for b in self.basis) + "}"


def _make(ambient_dim: int, rows: list, pivots: list) -> Subspace:
    return Subspace(ambient_dim, tuple(tuple(r) for r in rows), tuple(pivots))


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    rows, pivots = rref(vectors, ambient_dim)
    return _make(ambient_dim, rows, pivots)


def full_space(n: int) -> Subspace:
    return Subspace(n, identity(n), tuple(range(n)))


def zero_space(n: int) -> Subspace:
    return Subspace(n, (), ())


def _check_same_ambient(U: Subspace, W: Subspace):
    if U.ambient_dim != W.ambient_dim:
        raise DimMismatch(f"ambient dimensions {U.ambient_dim} and {W.ambient_dim} differ")


def subspace_sum(U: Subspace, W: Subspace) -> Subspace:
    _check_same_ambient(U, W)
    return span(U.basis + W.basis, U.ambient_dim)


def annihilator(U: Subspace) -> Subspace:
    return span(nullspace(U.basis, U.ambient_dim), U.ambient_dim)


def intersect(U: Subspace, W: Subspace) -> Subspace:
    _check_same_ambient(U, W)
    n = U.ambient_dim
    if U.dim == n:
        return W
    if W.dim == n:
        return U
    # U cap W = ann(ann U + ann W)
    both = nullspace(U.basis, n) + nullspace(W.basis, n)
    return span(nullspace(both, n), n)


def subspace_arith(op: str, *args):
    """Dispatch on ``op`` in {span, sum, intersect, contains}."""
    if op == "span":
        vectors, n = args
        return span(vectors, n)
    if op == "sum":
        return subspace_sum(*args)
    if op == "intersect":
        return intersect(*args)
    if op == "contains":
        U, x = args
        if isinstance(x, Subspace):
            return U.includes(x)
        return U.contains(x)
    raise ValueError(f"unknown subspace operation {op!r}")


class Echelon:
    """Incrementally maintained reduced echelon basis."""

    def __init__(self, n: int):
        self.n = n
        self.rows: dict[int, list] = {}

    def reduce(self, v: Sequence) -> list:
        out = list(v)
        for p, row in self.rows.items():
            c = out[p]
            if c:
                for k, x in enumerate(row):
                    if x:
                        out[k] -= c * x
        return out

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; returns True when the span grew."""
        r = self.reduce(v)
        p = next((k for k, x in enumerate(r) if x), None)
        if p is None:
            return False
        inv = 1 / r[p]
        r = [x * inv for x in r]
        for row in self.rows.values():
            c = row[p]
            if c:
                for k, x in enumerate(r):
                    if x:
                        row[k] -= c * x
        self.rows[p] = r
        return True

    def contains(self, v: Sequence) -> bool:
        return is_zero(self.reduce(v))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def subspace(self) -> Subspace:
        pivots = sorted(self.rows)
        return _make(self.n, [self.rows[p] for p in pivots], pivots)


# -- formatting -------------------------------------------------------------

def fmt_scalar(x) -> str:
    return str(Fraction(x))


def fmt_vector(v: Sequence) -> str:
    return "(" + " ".join(fmt_scalar(x) for x in v) + ")"
