"""The universal semigroup Pr(S), the partial semigroup algebra and Theorem 2.7.

Pr(S) is enumerated by coset enumeration on the right Cayley graph of the
presented monoid (node 0 stands for the empty word).  Every relation is
traced from every live node and the two endpoints are identified; merged
nodes are tracked with union-find.  When a full pass over the graph adds
nothing, each non-empty node is an element and its shortlex-least word,
found by breadth-first search, is the normal form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Sequence

from . import linalg as la
from .algebra import VERIFIED, StructureAlgebra, algebra_from_constants, elem_mul, find_unit, unit_of
from .crossed import CrossedProduct, build_crossed_product
from .errors import CapExceeded, IsoBreach, RelationBreach
from .linalg import Matrix
from .partial_rep import (PartialRep, RepAction, RepQuotient, action_from_rep, phi_hom, rep_from_action,
                          rep_quotient, verify_partial_rep)
from .report import AxiomReport
from .semigroup import InverseSemigroup, from_table

Word = tuple

DEFAULT_CAP = 10_000
COMPLETE, CAP_EXCEEDED = "complete", "cap_exceeded"


@dataclass(frozen=True)
class SemigroupPresentation:
    generator_count: int
    relations: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        for u, v in self.relations:
            for w in (u, v):
                if not w:
                    raise ValueError("relation words must be non-empty")
                for a in w:
                    if not 0 <= a < self.generator_count:
                        raise ValueError(f"letter {a} out of range")


def pr_presentation(S: InverseSemigroup) -> SemigroupPresentation:
    inv, mul = S.inv, S.mul
    rels = []
    for s, t in product(range(S.size), repeat=2):
        rels.append(((inv[s], s, t), (inv[s], mul[s][t])))        # (i)
        rels.append(((s, t, inv[t]), (mul[s][t], inv[t])))        # (ii)
    for s in range(S.size):
        rels.append(((s, inv[s], s), (s,)))                       # (iii)
    seen, out = set(), []
    for u, v in rels:
        if u == v:
            continue
        key = (u, v) if (len(u), u) <= (len(v), v) else (v, u)
        if key not in seen:
            seen.add(key)
            out.append((u, v))
    return SemigroupPresentation(S.size, tuple(out))


@dataclass(frozen=True)
class EnumeratedSemigroup:
    elements: tuple[Word, ...]
    mul: tuple[tuple[int, ...], ...]
    gen_map: tuple[int, ...]
    status: str
    nodes_used: int = field(default=0, compare=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def evaluate(self, word: Sequence[int]) -> int:
        x = self.gen_map[word[0]]
        for a in word[1:]:
            x = self.mul[x][self.gen_map[a]]
        return x


class _CosetGraph:
    def __init__(self, ngens: int):
        self.ngens = ngens
        self.table: list[list[int]] = []
        self.parent: list[int] = []
        self.live = 0
        self.new_node()

    def new_node(self) -> int:
        self.table.append([-1] * self.ngens)
        self.parent.append(len(self.parent))
        self.live += 1
        return len(self.parent) - 1

    def find(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def step(self, c: int, a: int, define: bool) -> int:
        d = self.table[c][a]
        if d < 0:
            if not define:
                return -1
            d = self.new_node()
            self.table[c][a] = d
            return d
        d = self.find(d)
        self.table[c][a] = d
        return d

    def trace(self, c: int, word: Word) -> int:
        for a in word:
            c = self.step(c, a, True)
        return c

    def coincide(self, x: int, y: int) -> bool:
        queue = [(x, y)]
        merged = False
        while queue:
            a, b = queue.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            self.parent[b] = a
            self.live -= 1
            merged = True
            ta, tb = self.table[a], self.table[b]
            for g in range(self.ngens):
                if tb[g] >= 0:
                    if ta[g] >= 0:
                        queue.append((ta[g], tb[g]))
                    else:
                        ta[g] = tb[g]
        return merged


def enumerate_fp_semigroup(P: SemigroupPresentation, cap: int = DEFAULT_CAP,
                           node_budget: int | None = None) -> EnumeratedSemigroup:
    """Enumerate the semigroup presented by P, giving up past ``cap`` elements."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    budget = node_budget if node_budget is not None else 8 * cap + 64
    k = P.generator_count
    g = _CosetGraph(k)
    changed = True
    exceeded = False
    while changed and not exceeded:
        changed = False
        c = 0
        while c < len(g.table):
            if g.find(c) != c:
                c += 1
                continue
            before = len(g.table)
            for u, v in P.relations:
                if g.find(c) != c:
                    break
                if g.coincide(g.trace(c, u), g.trace(c, v)):
                    changed = True
            if g.find(c) == c:
                for a in range(k):
                    g.step(c, a, True)
            if len(g.table) != before:
                changed = True
            if g.live - 1 > budget:
                exceeded = True
                break
            c += 1

    # breadth-first relabelling gives shortlex normal forms
    order: list[int] = []
    words: dict[int, Word] = {0: ()}
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for a in range(k):
            d = g.step(c, a, False)
            if d >= 0 and d not in words:
                words[d] = words[c] + (a,)
                order.append(d)
                queue.append(d)
    if exceeded or len(order) > cap:
        return EnumeratedSemigroup(tuple(words[d] for d in order[:cap]), (), (), CAP_EXCEEDED, len(g.table))

    index = {d: i for i, d in enumerate(order)}
    elements = tuple(words[d] for d in order)

    def follow(node: int, word: Word) -> int:
        for a in word:
            node = g.step(node, a, False)
        return node

    mul = tuple(tuple(index[follow(x, elements[j])] for j in range(len(order))) for x in order)
    gen_map = tuple(index[g.step(0, a, False)] for a in range(k))
    E = EnumeratedSemigroup(elements, mul, gen_map, COMPLETE, len(g.table))
    rep = verify_enumeration(P, E)
    if not rep.ok:
        raise RuntimeError(f"enumeration produced an inconsistent table: {rep.first_failure()}")
    return E


def verify_enumeration(P: SemigroupPresentation, E: EnumeratedSemigroup) -> AxiomReport:
    """Closure, associativity (Light's test on generators), relations, normal forms."""
    rep = AxiomReport()
    n = E.size
    rep.record("closure", [(i, j) for i in range(n) for j in range(n) if not 0 <= E.mul[i][j] < n][:1])
    gens = sorted(set(E.gen_map))
    rep.record("associativity", [
        (x, a, y) for a in gens for x in range(n) for y in range(n)
        if E.mul[E.mul[x][a]][y] != E.mul[x][E.mul[a][y]]
    ][:1])
    rep.record("relations", [(u, v) for u, v in P.relations if E.evaluate(u) != E.evaluate(v)])
    rep.record("normal forms", [i for i, w in enumerate(E.elements) if E.evaluate(w) != i])
    return rep


def enumerated_as_semigroup(E: EnumeratedSemigroup, unit: int | None = None) -> InverseSemigroup:
    """The enumerated table as an InverseSemigroup (validates the inverse axioms)."""
    labels = ["[" + "][".join(map(str, w)) + "]" for w in E.elements]
    return from_table([list(r) for r in E.mul], unit=unit, labels=labels)


@dataclass(frozen=True)
class ParAlgebra:
    semigroup: InverseSemigroup
    base: EnumeratedSemigroup
    presentation: SemigroupPresentation
    algebra: StructureAlgebra

    def iota(self, s: int) -> la.Vector:
        return self.algebra.basis(self.base.gen_map[s])

    def rep(self) -> PartialRep:
        return PartialRep(self.semigroup, self.algebra, tuple(self.iota(s) for s in range(self.semigroup.size)))


def semigroup_algebra(mul: Sequence[Sequence[int]], name: str = "") -> StructureAlgebra:
    n = len(mul)
    consts = {(i, j): la.basis_vector(n, mul[i][j]) for i in range(n) for j in range(n)}
    A = algebra_from_constants(n, consts, name=name)
    u = find_unit(A)
    return replace(A, unit=u)


def kpar(S: InverseSemigroup, cap: int = DEFAULT_CAP) -> ParAlgebra:
    P = pr_presentation(S)
    E = enumerate_fp_semigroup(P, cap)
    if E.status != COMPLETE:
        raise CapExceeded(f"Pr(S) has more than {cap} elements (or the node budget ran out)", witness=cap)
    A = replace(semigroup_algebra(E.mul, name="K_par(S)"), associative_flag=VERIFIED)
    return ParAlgebra(S, E, P, A)


def extend_rep(pa: ParAlgebra, pi: PartialRep) -> tuple[Matrix, AxiomReport]:
    """psi : K_par(S) -> B with psi([s1]...[sk]) = pi(s1)...pi(sk)."""
    B = pi.target
    for u, v in pa.presentation.relations:
        if pi.prod(*u) != pi.prod(*v):
            raise RelationBreach(f"relation {u} = {v} fails in the target", witness=(u, v))
    E = pa.base
    cols = [pi.prod(*w) for w in E.elements]
    M = la.columns_to_matrix(cols, B.dim)
    rep = AxiomReport()
    rep.record("psi multiplicative", [
        (i, j) for i in range(E.size) for j in range(E.size)
        if cols[E.mul[i][j]] != elem_mul(B, cols[i], cols[j])
    ][:1])
    rep.record("psi o iota = pi", [s for s in range(pi.semigroup.size) if cols[E.gen_map[s]] != pi(s)])
    return M, rep


@dataclass
class Theorem27Report:
    semigroup_size: int
    pr_size: int
    dims: dict
    checks: AxiomReport
    phi: Matrix = ()
    psi: Matrix = ()

    @property
    def ok(self) -> bool:
        return self.checks.ok


def _is_identity(M: Matrix, n: int):
    """First basis index not fixed by M, or None."""
    for i in range(n):
        col = tuple(M[r][i] for r in range(n)) if n else ()
        if col != la.basis_vector(n, i):
            return i
    return None


def theorem_2_7_pipeline(S: InverseSemigroup, cap: int = DEFAULT_CAP, strict: bool = True) -> Theorem27Report:
    """Build phi : A x S -> K_par(S)/J and psi back, and check both composites are identities."""
    if S.unit is None:
        raise ValueError("the pipeline needs a unital semigroup")
    checks = AxiomReport()
    pa = kpar(S, cap)
    iota = pa.rep()
    checks.extend(verify_partial_rep(iota), "iota_S ")
    rq: RepQuotient = rep_quotient(iota)
    Q = rq.quotient
    checks.extend(verify_partial_rep(rq.pi_tilde), "iota~ ")
    ra: RepAction = action_from_rep(rq.pi_tilde)
    alpha = ra.action
    A = ra.A
    C: CrossedProduct = build_crossed_product(alpha)
    checks.add("crossed product associative", C.associative, C.assoc_witness)
    pi_alpha, _ = rep_from_action(alpha, C)
    checks.extend(verify_partial_rep(pi_alpha), "pi_alpha ")
    # the unit of X_s is eps~_s
    checks.record("unit of X_s is eps~_s", [
        s for s in range(S.size) if unit_of(A, alpha.ideals[s]) != ra.eps[s]
    ])
    ph = phi_hom(rq, ra, C)
    checks.extend(ph.report, "Proposition 2.5: ")
    phi = ph.matrix

    psi_hat, psi_rep = extend_rep(pa, pi_alpha)
    checks.extend(psi_rep, "Remark 3: ")
    checks.record("psi kills J", [i for i, v in enumerate(rq.J.basis) if any(la.apply(psi_hat, v))]
                  if C.quotient.dim else [])
    if C.quotient.dim and Q.dim:
        psi = la.columns_to_matrix([la.apply(psi_hat, rq.Phi.lift(Q.basis(i))) for i in range(Q.dim)],
                                   C.quotient.dim)
    else:
        psi = la.zero_matrix(C.quotient.dim, Q.dim)
    checks.record("psi([s]) = eps~_s delta_s", [
        s for s in range(S.size)
        if (la.apply(psi, rq.pi_tilde(s)) if C.quotient.dim else ()) != C.coset(s, ra.eps[s])
    ])

    dims = {
        "S": S.size, "Pr(S)": pa.base.size, "J": rq.J.dim, "K_par/J": Q.dim, "A": A.dim,
        "X_s": [X.dim for X in alpha.ideals], "L": C.L.dim, "I": C.I.dim, "A x S": C.quotient.dim,
    }
    checks.add("dim A x S = sum dim X_s - dim I", C.quotient.dim == sum(dims["X_s"]) - C.I.dim)
    checks.add("dim A x S = dim K_par/J", C.quotient.dim == Q.dim, (C.quotient.dim, Q.dim))
    if C.quotient.dim == Q.dim:
        n = Q.dim
        pp = la.matmul(phi, psi, cols=n) if n else ()
        qq = la.matmul(psi, phi, cols=n) if n else ()
        w1, w2 = _is_identity(pp, n), _is_identity(qq, n)
        checks.add("phi o psi = id on K_par/J", w1 is None, w1)
        checks.add("psi o phi = id on A x S", w2 is None, w2)
    report = Theorem27Report(S.size, pa.base.size, dims, checks, phi, psi)
    if strict and not checks.ok:
        f = checks.first_failure()
        raise IsoBreach(f"Theorem 2.7 check failed: {f.name}", witness=f.witness, report=report)
    return report
