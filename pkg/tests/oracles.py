"""Independent reference computations used by the tests.

Nothing here calls into the library's linear algebra or enumeration code:
exact ranks come from sympy, words are rewritten naively, and partial
injections are listed from subsets and permutations.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

import sympy


# -- semigroups -------------------------------------------------------------

def brute_partial_injections(n: int) -> set[tuple]:
    """Each partial injection as a frozenset of (x, f(x)) pairs."""
    out = set()
    for k in range(n + 1):
        for dom in combinations(range(n), k):
            for img in permutations(range(n), k):
                out.add(frozenset(zip(dom, img)))
    return out


def is_inverse_semigroup_by_definition(table) -> bool:
    """Associative, and every element has exactly one t with sts = s, tst = t."""
    n = len(table)
    if any(table[table[a][b]][c] != table[a][table[b][c]] for a, b, c in product(range(n), repeat=3)):
        return False
    for s in range(n):
        inverses = [t for t in range(n) if table[table[s][t]][s] == s and table[table[t][s]][t] == t]
        if len(inverses) != 1:
            return False
    return True


# -- Pr(S) by bounded word rewriting ---------------------------------------

class _UF:
    def __init__(self):
        self.p = {}

    def find(self, x):
        self.p.setdefault(x, x)
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.p[max(a, b, key=lambda w: (len(w), w))] = min(a, b, key=lambda w: (len(w), w))


def pr_relations(table, inv):
    n = len(table)
    rels = []
    for s, t in product(range(n), repeat=2):
        rels.append(((inv[s], s, t), (inv[s], table[s][t])))
        rels.append(((s, t, inv[t]), (table[s][t], inv[t])))
    for s in range(n):
        rels.append(((s, inv[s], s), (s,)))
    return rels


def word_closure(table, inv, maxlen: int) -> _UF:
    """Congruence generated by the Pr relations on words of length <= maxlen."""
    n = len(table)
    rels = pr_relations(table, inv)
    rels += [(v, u) for u, v in rels]
    words = [w for L in range(1, maxlen + 1) for w in product(range(n), repeat=L)]
    uf = _UF()
    for w in words:
        uf.find(w)
        for u, v in rels:
            k = len(u)
            for i in range(len(w) - k + 1):
                if w[i:i + k] == u:
                    w2 = w[:i] + v + w[i + k:]
                    if len(w2) <= maxlen:
                        uf.union(w, w2)
    return uf


def pr_classes(table, inv, maxlen: int = 8, probe: int = 4) -> dict[tuple, tuple]:
    """word -> class representative for all words of length <= probe."""
    uf = word_closure(table, inv, maxlen)
    n = len(table)
    return {w: uf.find(w) for L in range(1, probe + 1) for w in product(range(n), repeat=L)}


# -- algebras via sympy -----------------------------------------------------

def sym_mul(consts, x, y):
    d = len(x)
    out = [sympy.Integer(0)] * d
    for i in range(d):
        if x[i] == 0:
            continue
        for j in range(d):
            if y[j] == 0:
                continue
            for k in range(d):
                out[k] += x[i] * y[j] * consts[i][j][k]
    return out


def to_sympy_consts(A):
    return [[[sympy.Rational(c.numerator, c.denominator) for c in A.product(i, j)]
             for j in range(A.dim)] for i in range(A.dim)]


def sym_rank(vectors, d) -> int:
    if not vectors:
        return 0
    return sympy.Matrix(vectors).rank()


def naive_ideal(consts, gens, d) -> list[list]:
    """Spanning set of the two-sided ideal generated by gens (fixpoint on ranks)."""
    basis = [[sympy.Integer(1) if k == i else 0 for k in range(d)] for i in range(d)]
    span = [list(g) for g in gens]
    r = sym_rank(span, d)
    while True:
        new = list(span)
        for v in span:
            for e in basis:
                new.append(sym_mul(consts, e, v))
                new.append(sym_mul(consts, v, e))
        r2 = sym_rank(new, d)
        if r2 == r:
            return span
        M = sympy.Matrix(new)
        span = [list(M.row(i)) for i in range(M.rows)]
        # keep a basis only
        _, piv = M.T.rref()
        span = [list(M.row(i)) for i in piv]
        r = r2


def semiprime_oracle(A) -> bool:
    """No nonzero square-zero ideal generated by a single {-1,0,1}-combination."""
    consts = to_sympy_consts(A)
    d = A.dim
    for coeffs in product((-1, 0, 1), repeat=d):
        if not any(coeffs):
            continue
        X = naive_ideal(consts, [list(map(sympy.Integer, coeffs))], d)
        if all(not any(sym_mul(consts, a, b)) for a in X for b in X):
            return False
    return True


def multiplier_dim_oracle(A) -> int:
    """Dimension of the solution space of the multiplier equations, by sympy."""
    k = A.dim
    consts = to_sympy_consts(A)
    L = sympy.Matrix(k, k, lambda r, c: sympy.Symbol(f"L{r}_{c}"))
    R = sympy.Matrix(k, k, lambda r, c: sympy.Symbol(f"R{r}_{c}"))
    E = [sympy.Matrix([1 if t == i else 0 for t in range(k)]) for i in range(k)]

    def m(x, y):
        return sympy.Matrix(sym_mul(consts, list(x), list(y)))

    eqs = []
    for i, j in product(range(k), repeat=2):
        eqs += list(L * m(E[i], E[j]) - m(L * E[i], E[j]))
        eqs += list(R * m(E[i], E[j]) - m(E[i], R * E[j]))
        eqs += list(m(R * E[i], E[j]) - m(E[i], L * E[j]))
    syms = list(L) + list(R)
    eqs = [e for e in eqs if e != 0]
    if not eqs:
        return len(syms)
    M, _ = sympy.linear_eq_to_matrix(eqs, syms)
    return len(syms) - M.rank()


def is_multiplier_pair(A, Lm, Rm) -> bool:
    k = A.dim
    consts = to_sympy_consts(A)
    L, R = sympy.Matrix(Lm), sympy.Matrix(Rm)
    E = [sympy.Matrix([1 if t == i else 0 for t in range(k)]) for i in range(k)]

    def m(x, y):
        return sympy.Matrix(sym_mul(consts, list(x), list(y)))

    for i, j in product(range(k), repeat=2):
        if L * m(E[i], E[j]) != m(L * E[i], E[j]):
            return False
        if R * m(E[i], E[j]) != m(E[i], R * E[j]):
            return False
        if m(R * E[i], E[j]) != m(E[i], L * E[j]):
            return False
    return True


def kpar_quotient_dim_oracle(S, maxlen: int = 8, probe: int = 4) -> tuple[int, int]:
    """(|Pr(S)|, dim K_par(S)/J) from word classes and sympy ranks."""
    classes = pr_classes(S.mul, S.inv, maxlen, probe)
    reps = sorted(set(classes.values()), key=lambda w: (len(w), w))
    idx = {r: i for i, r in enumerate(reps)}
    n = len(reps)

    def cls(w):
        return idx[classes[w]]

    consts = [[[0] * n for _ in range(n)] for _ in range(n)]
    for a, b in product(reps, repeat=2):
        consts[idx[a]][idx[b]][cls(a + b)] = 1
    gens = []
    for s, t in product(range(S.size), repeat=2):
        if s != t and S.mul[S.mul[s][S.inv[s]]][t] == s:  # s < t
            for a in reps:
                v = [0] * n
                v[cls(a + (s,))] += 1
                v[cls(a + (t,))] -= 1
                if any(v):
                    gens.append(v)
    J = naive_ideal(consts, gens, n) if gens else []
    return n, n - sym_rank(J, n)
