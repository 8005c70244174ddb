"""Finite-dimensional algebras over Q given by structure constants.

The algebras need be neither unital nor associative: the formal-sum algebra
of a crossed product is built before anyone knows whether it associates, so
only the operations that really need associativity ask for it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from . import linalg as la
from .errors import BadShape, NotAnIdeal, NotAssociative, NotClosed, NotUnit
from .linalg import ZERO, Matrix, Subspace, Vector

VERIFIED, REFUTED, UNCHECKED = "verified", "refuted", "unchecked"

# sparse structure constants: table[i][j] = ((k, c), ...) with e_i e_j = sum c e_k
SparseTable = tuple


@dataclass(frozen=True)
class StructureAlgebra:
    dim: int
    table: SparseTable
    unit: Vector | None = None
    associative_flag: str = UNCHECKED
    name: str = ""

    def product(self, i: int, j: int) -> Vector:
        out = [ZERO] * self.dim
        for k, c in self.table[i][j]:
            out[k] = c
        return tuple(out)

    def constants(self) -> list[list[Vector]]:
        return [[self.product(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        return elem_mul(self, x, y)

    def basis(self, i: int) -> Vector:
        return la.basis_vector(self.dim, i)

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<StructureAlgebra{tag} dim={self.dim} {self.associative_flag}>"


def _sparse(v: Sequence) -> tuple:
    return tuple((k, Fraction(c)) for k, c in enumerate(v) if c)


def algebra_from_constants(dim: int, constants, unit: Sequence | None = None,
                           name: str = "", associative_flag: str = UNCHECKED) -> StructureAlgebra:
    """``constants`` is either a dim x dim nested list of coordinate vectors or a
    mapping ``(i, j) -> vector`` (missing pairs are zero)."""
    if dim < 0:
        raise BadShape("negative dimension")
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if isinstance(constants, Mapping):
                v = constants.get((i, j))
                v = la.zero(dim) if v is None else v
            else:
                try:
                    v = constants[i][j]
                except (IndexError, TypeError) as exc:
                    raise BadShape(f"missing structure constant for ({i},{j})") from exc
            if len(v) != dim:
                raise BadShape(f"e_{i} e_{j} has {len(v)} coordinates, expected {dim}", witness=(i, j))
            row.append(_sparse(v))
        rows.append(tuple(row))
    if not isinstance(constants, Mapping) and len(constants) != dim:
        raise BadShape(f"{len(constants)} rows of constants for dim {dim}")
    A = StructureAlgebra(dim, tuple(rows), None, associative_flag, name)
    if unit is not None:
        unit = la.vec(unit)
        if len(unit) != dim:
            raise BadShape(f"unit has {len(unit)} coordinates, expected {dim}")
        for i in range(dim):
            e = la.basis_vector(dim, i)
            if elem_mul(A, unit, e) != e or elem_mul(A, e, unit) != e:
                raise NotUnit(f"supplied unit fails on basis element {i}", witness=i)
        A = replace(A, unit=unit)
    return A


def elem_mul(A: StructureAlgebra, x: Sequence, y: Sequence) -> Vector:
    if len(x) != A.dim or len(y) != A.dim:
        raise BadShape(f"operands of length {len(x)}, {len(y)} in an algebra of dim {A.dim}")
    out = [ZERO] * A.dim
    table = A.table
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = table[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, v in row[j]:
                out[k] += c * v
    return tuple(out)


def _mul_sparse_right(A: StructureAlgebra, v: tuple, k: int) -> dict:
    # (sum v_m e_m) e_k with v sparse
    out: dict = {}
    for m, c in v:
        for r, w in A.table[m][k]:
            out[r] = out.get(r, ZERO) + c * w
    return {r: x for r, x in out.items() if x}


def _mul_sparse_left(A: StructureAlgebra, i: int, v: tuple) -> dict:
    out: dict = {}
    for m, c in v:
        for r, w in A.table[i][m]:
            out[r] = out.get(r, ZERO) + c * w
    return {r: x for r, x in out.items() if x}


def check_associative(A: StructureAlgebra) -> tuple[bool, tuple[int, int, int] | None]:
    """Exhaustive basis-triple check; returns (ok, first failing (i, j, k))."""
    for i, j, k in product(range(A.dim), repeat=3):
        if _mul_sparse_right(A, A.table[i][j], k) != _mul_sparse_left(A, i, A.table[j][k]):
            return False, (i, j, k)
    return True, None


def with_associativity(A: StructureAlgebra) -> StructureAlgebra:
    """Copy of ``A`` with the associativity flag settled."""
    if A.associative_flag != UNCHECKED:
        return A
    ok, _ = check_associative(A)
    return replace(A, associative_flag=VERIFIED if ok else REFUTED)


def require_associative(A: StructureAlgebra) -> StructureAlgebra:
    A = with_associativity(A)
    if A.associative_flag != VERIFIED:
        _, w = check_associative(A)
        raise NotAssociative(f"algebra is not associative, witness triple {w}", witness=w)
    return A


# -- ideals, subalgebras, quotients -----------------------------------------

def _check_vectors(A: StructureAlgebra, vectors):
    for v in vectors:
        if len(v) != A.dim:
            raise BadShape(f"vector of length {len(v)} in an algebra of dim {A.dim}")


def ideal_closure(A: StructureAlgebra, generators: Sequence[Sequence]) -> Subspace:
    """Smallest subspace containing ``generators`` with A*X and X*A inside X.

    Works without associativity: every new spanning vector is multiplied on
    both sides by every basis element until nothing new appears.
    """
    _check_vectors(A, generators)
    ech = la.Echelon(A.dim)
    todo = [tuple(g) for g in generators if ech.add(g)]
    basis = [A.basis(k) for k in range(A.dim)]
    while todo:
        v = todo.pop()
        for e in basis:
            for w in (elem_mul(A, e, v), elem_mul(A, v, e)):
                if ech.add(w):
                    todo.append(w)
    return ech.subspace()


def find_ideal_escape(A: StructureAlgebra, X: Subspace):
    """First (side, basis index, vector index) with a product leaving X, or None."""
    for vi, v in enumerate(X.basis):
        for k in range(A.dim):
            e = A.basis(k)
            if not X.contains(elem_mul(A, e, v)):
                return ("left", k, vi)
            if not X.contains(elem_mul(A, v, e)):
                return ("right", k, vi)
    return None


def is_ideal(A: StructureAlgebra, X: Subspace) -> bool:
    return find_ideal_escape(A, X) is None


def require_ideal(A: StructureAlgebra, X: Subspace):
    if X.ambient_dim != A.dim:
        raise BadShape(f"subspace of Q^{X.ambient_dim} in an algebra of dim {A.dim}")
    w = find_ideal_escape(A, X)
    if w is not None:
        raise NotAnIdeal(f"product escapes the subspace: {w}", witness=w)


def is_closed(A: StructureAlgebra, X: Subspace) -> bool:
    return all(X.contains(elem_mul(A, a, b)) for a in X.basis for b in X.basis)


def require_closed(A: StructureAlgebra, X: Subspace):
    for i, a in enumerate(X.basis):
        for j, b in enumerate(X.basis):
            if not X.contains(elem_mul(A, a, b)):
                raise NotClosed(f"product of basis vectors {i},{j} leaves the subspace", witness=(i, j))


@dataclass(frozen=True)
class Embedding:
    """Inclusion of a subalgebra; coordinates are with respect to ``space``'s echelon basis."""

    space: Subspace
    algebra: StructureAlgebra

    def apply(self, c: Sequence) -> Vector:
        return self.space.from_coords(c)

    def coords(self, v: Sequence) -> Vector:
        return self.space.coords(v)

    def matrix(self) -> Matrix:
        return la.columns_to_matrix(self.space.basis, self.space.ambient_dim)


def subspace_algebra(A: StructureAlgebra, X: Subspace, name: str = "") -> StructureAlgebra:
    """X with the induced multiplication, in echelon coordinates."""
    require_closed(A, X)
    consts = [[X.coords(elem_mul(A, a, b)) for b in X.basis] for a in X.basis]
    flag = VERIFIED if A.associative_flag == VERIFIED else UNCHECKED
    B = algebra_from_constants(X.dim, consts, name=name, associative_flag=flag)
    u = unit_of(A, X)
    if u is not None:
        B = replace(B, unit=X.coords(u))
    return B


def subalgebra_generated(A: StructureAlgebra, generators: Sequence[Sequence]) -> tuple[StructureAlgebra, Embedding]:
    _check_vectors(A, generators)
    ech = la.Echelon(A.dim)
    spanning: list = []
    todo = []
    for g in generators:
        if ech.add(g):
            todo.append(tuple(g))
    while todo:
        v = todo.pop()
        spanning.append(v)
        for w in list(spanning):
            for p in (elem_mul(A, v, w), elem_mul(A, w, v)):
                if ech.add(p):
                    todo.append(p)
    X = ech.subspace()
    B = subspace_algebra(A, X)
    return B, Embedding(X, B)


@dataclass(frozen=True)
class QuotientMap:
    """Canonical surjection onto A/I; quotient basis = the non-pivot coordinates of I."""

    source: StructureAlgebra
    ideal: Subspace
    algebra: StructureAlgebra
    reps: tuple[int, ...]

    def project(self, v: Sequence) -> Vector:
        r = self.ideal.reduce(v)
        return tuple(r[i] for i in self.reps)

    def lift(self, q: Sequence) -> Vector:
        out = [ZERO] * self.source.dim
        for i, c in zip(self.reps, q):
            out[i] = Fraction(c)
        return tuple(out)

    def matrix(self) -> Matrix:
        cols = [self.project(self.source.basis(k)) for k in range(self.source.dim)]
        return la.columns_to_matrix(cols, len(self.reps))


def quotient_algebra(A: StructureAlgebra, I: Subspace, name: str = "") -> tuple[StructureAlgebra, QuotientMap]:
    require_ideal(A, I)
    reps = I.complement_indices()
    consts = []
    for i in reps:
        row = []
        for j in reps:
            r = I.reduce(A.product(i, j))
            row.append(tuple(r[k] for k in reps))
        consts.append(row)
    flag = VERIFIED if A.associative_flag == VERIFIED else UNCHECKED
    Q = algebra_from_constants(len(reps), consts, name=name, associative_flag=flag)
    qm = QuotientMap(A, I, Q, reps)
    if A.unit is not None:
        Q = replace(Q, unit=qm.project(A.unit))
        qm = replace(qm, algebra=Q)
    return Q, qm


def spot_check_quotient(qm: QuotientMap, rounds: int = 8, seed: int = 0) -> tuple[bool, object]:
    """Products of randomly shifted representatives must project to the quotient product."""
    rng = random.Random(seed)
    A, I, Q = qm.source, qm.ideal, qm.algebra
    if I.dim == 0 or Q.dim == 0:
        return True, None
    for _ in range(rounds):
        i, j = rng.randrange(Q.dim), rng.randrange(Q.dim)
        shift = [I.from_coords([Fraction(rng.randint(-3, 3)) for _ in range(I.dim)]) for _ in range(2)]
        x = la.add(qm.lift(Q.basis(i)), shift[0])
        y = la.add(qm.lift(Q.basis(j)), shift[1])
        if qm.project(elem_mul(A, x, y)) != Q.product(i, j):
            return False, (i, j)
    return True, None


# -- units, diagnostics -----------------------------------------------------

def unit_of(A: StructureAlgebra, X: Subspace | None = None) -> Vector | None:
    """The unit of the (closed) subspace X, or None when X has none."""
    if X is None:
        if A.unit is not None:
            return A.unit
        X = la.full_space(A.dim)
    require_closed(A, X)
    k = X.dim
    if k == 0:
        return la.zero(A.dim)
    # u = sum c_i x_i with u x_j = x_j = x_j u
    rows, rhs = [], []
    left = [[elem_mul(A, xi, xj) for xi in X.basis] for xj in X.basis]
    right = [[elem_mul(A, xj, xi) for xi in X.basis] for xj in X.basis]
    for j, xj in enumerate(X.basis):
        for m in range(A.dim):
            rows.append([left[j][i][m] for i in range(k)])
            rhs.append(xj[m])
            rows.append([right[j][i][m] for i in range(k)])
            rhs.append(xj[m])
    c = la.solve(rows, rhs, k)
    if c is None:
        return None
    return X.from_coords(c)


def find_unit(A: StructureAlgebra) -> Vector | None:
    return unit_of(A, None)


def ideal_diagnostics(A: StructureAlgebra, X: Subspace) -> dict[str, bool]:
    require_ideal(A, X)
    if X.dim == 0:
        return {"idempotent": True, "nondegenerate": True}
    squares = la.span([elem_mul(A, a, b) for a in X.basis for b in X.basis], A.dim)
    idempotent = squares == X
    k = X.dim
    # a = sum c_i x_i with a x_j = 0 for all j  (resp. x_j a = 0)
    left_rows, right_rows = [], []
    for xj in X.basis:
        lp = [elem_mul(A, xi, xj) for xi in X.basis]
        rp = [elem_mul(A, xj, xi) for xi in X.basis]
        for m in range(A.dim):
            left_rows.append([lp[i][m] for i in range(k)])
            right_rows.append([rp[i][m] for i in range(k)])
    nondeg = not la.nullspace(left_rows, k) and not la.nullspace(right_rows, k)
    return {"idempotent": idempotent, "nondegenerate": nondeg}


@dataclass(frozen=True)
class MultiplierPair:
    L: Matrix
    R: Matrix


def multiplier_space(X: StructureAlgebra) -> list[MultiplierPair]:
    """Basis of all pairs (L, R) with L(ab) = L(a)b, R(ab) = aR(b), R(a)b = aL(b)."""
    k = X.dim
    if k == 0:
        return []
    nL = k * k

    def Lv(r, c):
        return r * k + c

    def Rv(r, c):
        return nL + r * k + c

    prods = [[X.product(i, j) for j in range(k)] for i in range(k)]
    eqs = []
    for i, j in product(range(k), repeat=2):
        p = prods[i][j]
        for m in range(k):
            # L(e_i e_j) - L(e_i) e_j
            row = [ZERO] * (2 * nL)
            for c in range(k):
                if p[c]:
                    row[Lv(m, c)] += p[c]
            for r in range(k):
                if prods[r][j][m]:
                    row[Lv(r, i)] -= prods[r][j][m]
            eqs.append(row)
            # R(e_i e_j) - e_i R(e_j)
            row = [ZERO] * (2 * nL)
            for c in range(k):
                if p[c]:
                    row[Rv(m, c)] += p[c]
            for r in range(k):
                if prods[i][r][m]:
                    row[Rv(r, j)] -= prods[i][r][m]
            eqs.append(row)
            # R(e_i) e_j - e_i L(e_j)
            row = [ZERO] * (2 * nL)
            for r in range(k):
                if prods[r][j][m]:
                    row[Rv(r, i)] += prods[r][j][m]
                if prods[i][r][m]:
                    row[Lv(r, j)] -= prods[i][r][m]
            eqs.append(row)
    eqs = [r for r in eqs if any(r)]
    out = []
    for sol in la.nullspace(eqs, 2 * nL):
        L = tuple(tuple(sol[Lv(r, c)] for c in range(k)) for r in range(k))
        R = tuple(tuple(sol[Rv(r, c)] for c in range(k)) for r in range(k))
        out.append(MultiplierPair(L, R))
    return out


def lr_witness(X: StructureAlgebra):
    """First pair of basis multipliers (i, j) with L_i R_j != R_j L_i, or None."""
    pairs = multiplier_space(X)
    for i, p in enumerate(pairs):
        for j, q in enumerate(pairs):
            if la.matmul(p.L, q.R) != la.matmul(q.R, p.L):
                return (i, j)
    return None


def is_LR_associative(X: StructureAlgebra) -> bool:
    return lr_witness(X) is None


def left_mult_matrix(A: StructureAlgebra, x: Sequence) -> Matrix:
    cols = [elem_mul(A, x, A.basis(j)) for j in range(A.dim)]
    return la.columns_to_matrix(cols, A.dim)


def unitization(A: StructureAlgebra) -> StructureAlgebra:
    """A + Q1 with the new unit as the last basis vector."""
    n = A.dim
    consts = {}
    for i, j in product(range(n), repeat=2):
        consts[(i, j)] = A.product(i, j) + (ZERO,)
    for i in range(n + 1):
        e = la.basis_vector(n + 1, i)
        consts[(n, i)] = e
        consts[(i, n)] = e
    return algebra_from_constants(n + 1, consts, unit=la.basis_vector(n + 1, n),
                                  associative_flag=A.associative_flag)


def radical(A: StructureAlgebra) -> Subspace:
    """Jacobson radical via the kernel of the trace form (characteristic 0)."""
    A = require_associative(A)
    n = A.dim
    B = A if find_unit(A) is not None else unitization(A)
    Ls = [left_mult_matrix(B, B.basis(i)) for i in range(B.dim)]
    gram = [[sum((la.matmul(Li, Lj)[d][d] for d in range(B.dim)), ZERO) for Lj in Ls] for Li in Ls]
    rad = la.span(la.nullspace(gram, B.dim), B.dim)
    if B is A:
        return rad
    inside = la.span([la.basis_vector(B.dim, i) for i in range(n)], B.dim)
    both = la.intersect(rad, inside)
    return la.span([v[:n] for v in both.basis], n)


def is_semiprime(A: StructureAlgebra) -> bool:
    return radical(A).dim == 0


def verify_linear_hom(source: StructureAlgebra, target: StructureAlgebra, M: Matrix,
                      require_bijective: bool = False) -> tuple[bool, object]:
    """Check M(xy) = M(x)M(y) on basis pairs (and bijectivity if asked)."""
    r, c = la.shape(M, source.dim)
    if (r, c) != (target.dim, source.dim) and not (source.dim == 0 or target.dim == 0):
        raise BadShape(f"map of shape {r}x{c}, expected {target.dim}x{source.dim}")
    if target.dim == 0 or source.dim == 0:
        M = la.zero_matrix(target.dim, source.dim)
    images = [tuple(M[t][i] for t in range(target.dim)) for i in range(source.dim)]
    for i, j in product(range(source.dim), repeat=2):
        lhs = la.apply(M, source.product(i, j)) if target.dim else ()
        rhs = elem_mul(target, images[i], images[j])
        if lhs != rhs:
            return False, ("multiplicative", i, j)
    if require_bijective:
        if source.dim != target.dim or la.rank(M, source.dim) != source.dim:
            return False, ("bijective", source.dim, target.dim)
    return True, None


# -- standard algebras ------------------------------------------------------

def product_of_fields(n: int) -> StructureAlgebra:
    consts = {(i, i): la.basis_vector(n, i) for i in range(n)}
    return algebra_from_constants(n, consts, unit=[1] * n, name=f"Q^{n}" if n > 1 else "Q",
                                  associative_flag=VERIFIED)


def field() -> StructureAlgebra:
    return product_of_fields(1)


def dual_numbers() -> StructureAlgebra:
    # basis 1, x with x^2 = 0
    consts = {(0, 0): (1, 0), (0, 1): (0, 1), (1, 0): (0, 1)}
    return algebra_from_constants(2, consts, unit=[1, 0], name="Q[x]/x^2", associative_flag=VERIFIED)


def matrix_algebra(n: int) -> StructureAlgebra:
    """M_n(Q) in the matrix-unit basis, E_ij at index i*n + j."""
    d = n * n
    consts = {}
    for i, j, l in product(range(n), repeat=3):
        consts[(i * n + j, j * n + l)] = la.basis_vector(d, i * n + l)
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return algebra_from_constants(d, consts, unit=unit, name=f"M_{n}", associative_flag=VERIFIED)


def zero_algebra(n: int) -> StructureAlgebra:
    return algebra_from_constants(n, {}, name=f"zero^{n}", associative_flag=VERIFIED)


def upper_triangular(n: int) -> StructureAlgebra:
    """Upper triangular n x n matrices, basis E_ij (i <= j) in row-major order."""
    idx = [(i, j) for i in range(n) for j in range(n) if i <= j]
    pos = {p: k for k, p in enumerate(idx)}
    d = len(idx)
    consts = {}
    for (i, j), (k, l) in product(idx, repeat=2):
        if j == k:
            consts[(pos[(i, j)], pos[(k, l)])] = la.basis_vector(d, pos[(i, l)])
    unit = [1 if i == j else 0 for (i, j) in idx]
    return algebra_from_constants(d, consts, unit=unit, name=f"T_{n}", associative_flag=VERIFIED)


def direct_sum(A: StructureAlgebra, B: StructureAlgebra) -> StructureAlgebra:
    n, m = A.dim, B.dim
    consts = {}
    for i, j in product(range(n), repeat=2):
        consts[(i, j)] = A.product(i, j) + la.zero(m)
    for i, j in product(range(m), repeat=2):
        consts[(n + i, n + j)] = la.zero(n) + B.product(i, j)
    unit = None
    if A.unit is not None and B.unit is not None:
        unit = tuple(A.unit) + tuple(B.unit)
    flag = VERIFIED if VERIFIED == A.associative_flag == B.associative_flag else UNCHECKED
    return algebra_from_constants(n + m, consts, unit=unit, associative_flag=flag,
                                  name=f"{A.name}+{B.name}")
