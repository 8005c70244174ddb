"""Finite inverse semigroups given by Cayley tables.

Elements are the integers ``0 .. size-1``; the table is the single source of
truth and the inverse map is always recomputed from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import MalformedTable, NotInverseSemigroup, OutOfRange
from .report import AxiomReport


@dataclass(frozen=True)
class InverseSemigroup:
    size: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    unit: int | None = None
    labels: tuple[str, ...] | None = None

    def __call__(self, *elements: int) -> int:
        """Product of the given elements, left to right."""
        r = elements[0]
        for s in elements[1:]:
            r = self.mul[r][s]
        return r

    def label(self, s: int) -> str:
        return self.labels[s] if self.labels else str(s)

    def is_group(self) -> bool:
        return len(idempotents(self)) == 1


def _check_table(table: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    n = len(table)
    if n == 0:
        raise MalformedTable("empty table")
    rows = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise MalformedTable(f"row {i} has {len(row)} entries, expected {n}", witness=i)
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise MalformedTable(f"entry ({i},{j}) = {x!r} out of range", witness=(i, j))
        rows.append(tuple(row))
    return tuple(rows)


def verify_inverse_semigroup(table, unit: int | None = None) -> AxiomReport:
    """Check every inverse-semigroup axiom, one report line per failed witness.

    Accepts either an :class:`InverseSemigroup` or a raw square table.
    """
    if isinstance(table, InverseSemigroup):
        unit = table.unit if unit is None else unit
        table = table.mul
    mul = _check_table(table)
    n = len(mul)
    rep = AxiomReport()

    rep.record("associativity", [
        (s, t, u) for s, t, u in product(range(n), repeat=3)
        if mul[mul[s][t]][u] != mul[s][mul[t][u]]
    ][:1])

    inverses = [
        [t for t in range(n) if mul[mul[s][t]][s] == s and mul[mul[t][s]][t] == t]
        for s in range(n)
    ]
    rep.record("regularity", [s for s in range(n) if not any(mul[mul[s][t]][s] == s for t in range(n))][:1])

    idem = [e for e in range(n) if mul[e][e] == e]
    rep.record("idempotents_commute", [
        (e, f) for e in idem for f in idem if e < f and mul[e][f] != mul[f][e]
    ][:1])
    rep.record("unique_inverses", [(s, tuple(ts)) for s, ts in enumerate(inverses) if len(ts) != 1][:1])

    if all(len(ts) == 1 for ts in inverses):
        inv = [ts[0] for ts in inverses]
        rep.record("involution", [s for s in range(n) if inv[inv[s]] != s][:1])
        rep.record("antimorphism", [
            (s, t) for s, t in product(range(n), repeat=2) if inv[mul[s][t]] != mul[inv[t]][inv[s]]
        ][:1])

    if unit is not None:
        if not 0 <= unit < n:
            rep.add("unit", False, unit)
        else:
            bad = [s for s in range(n) if mul[unit][s] != s or mul[s][unit] != s]
            rep.record("unit", bad[:1])
    return rep


def from_table(table: Sequence[Sequence[int]], unit: int | None = None,
               labels: Sequence[str] | None = None) -> InverseSemigroup:
    mul = _check_table(table)
    rep = verify_inverse_semigroup(mul, unit)
    if not rep.ok:
        first = rep.first_failure()
        raise NotInverseSemigroup(
            f"axiom {first.name!r} fails, witness {first.witness}; failed: {', '.join(rep.failed_axioms())}",
            witness=first.witness, report=rep)
    n = len(mul)
    inv = tuple(next(t for t in range(n) if mul[mul[s][t]][s] == s and mul[mul[t][s]][t] == t)
                for s in range(n))
    return InverseSemigroup(n, mul, inv, unit, tuple(labels) if labels else None)


def _range_check(S: InverseSemigroup, *elements: int):
    for s in elements:
        if not isinstance(s, int) or not 0 <= s < S.size:
            raise OutOfRange(f"element {s!r} not in 0..{S.size - 1}", witness=s)


def inverse_of(S: InverseSemigroup, s: int) -> int:
    _range_check(S, s)
    return S.inv[s]


def natural_leq(S: InverseSemigroup, r: int, t: int) -> bool:
    """r <= t iff r = r r* t."""
    _range_check(S, r, t)
    return S.mul[S.mul[r][S.inv[r]]][t] == r


def idempotents(S: InverseSemigroup) -> tuple[int, ...]:
    return tuple(e for e in range(S.size) if S.mul[e][e] == e)


def strictly_below(S: InverseSemigroup) -> list[tuple[int, int]]:
    """All ordered pairs r < t in the natural order."""
    return [(r, t) for r in range(S.size) for t in range(S.size)
            if r != t and natural_leq(S, r, t)]


# -- families ---------------------------------------------------------------

def cyclic_group(n: int) -> InverseSemigroup:
    if n < 1:
        raise ValueError("n must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["1"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
    return from_table(table, unit=0, labels=labels)


def chain_semilattice(n: int) -> InverseSemigroup:
    """The chain e_0 < e_1 < ... < e_{n-1}; the top element is the unit."""
    if n < 1:
        raise ValueError("n must be >= 1")
    table = [[min(i, j) for j in range(n)] for i in range(n)]
    labels = [f"e{k}" for k in range(n - 1)] + ["1"]
    return from_table(table, unit=n - 1, labels=labels)


def trivial_semigroup() -> InverseSemigroup:
    return from_table([[0]], unit=0, labels=["1"])


def partial_injections(n: int) -> list[tuple[int, ...]]:
    """All partial injections of {0..n-1}; ``f[i] == -1`` means i is outside the domain."""
    out = []
    for f in product(range(-1, n), repeat=n):
        img = [x for x in f if x >= 0]
        if len(img) == len(set(img)):
            out.append(f)
    # identity first, then by domain size descending, then lexicographic
    out.sort(key=lambda f: (f != tuple(range(n)), -sum(x >= 0 for x in f), f))
    return out


def _pinj_label(f: tuple[int, ...]) -> str:
    pairs = [f"{i + 1}->{x + 1}" for i, x in enumerate(f) if x >= 0]
    return "{" + ",".join(pairs) + "}"


def symmetric_inverse_monoid(n: int) -> InverseSemigroup:
    """Partial injections of an n-set under composition, (st)(x) = s(t(x))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    elems = partial_injections(n)
    index = {f: i for i, f in enumerate(elems)}

    def compose(s, t):
        return tuple(-1 if t[x] < 0 else s[t[x]] for x in range(n))

    table = [[index[compose(s, t)] for t in elems] for s in elems]
    return from_table(table, unit=index[tuple(range(n))], labels=[_pinj_label(f) for f in elems])


def direct_product(S: InverseSemigroup, T: InverseSemigroup) -> InverseSemigroup:
    pairs = [(a, b) for a in range(S.size) for b in range(T.size)]
    index = {p: i for i, p in enumerate(pairs)}
    table = [[index[(S.mul[a][c], T.mul[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    unit = None
    if S.unit is not None and T.unit is not None:
        unit = index[(S.unit, T.unit)]
    labels = [f"({S.label(a)},{T.label(b)})" for a, b in pairs]
    return from_table(table, unit=unit, labels=labels)


def construct_semigroup(kind: str, n: int | None = None, table=None, unit=None) -> InverseSemigroup:
    """Build an instance: ``table`` or one of the named families."""
    if kind == "table":
        return from_table(table, unit)
    families = {
        "symmetric_inverse_monoid": symmetric_inverse_monoid,
        "cyclic_group": cyclic_group,
        "chain_semilattice": chain_semilattice,
    }
    if kind not in families:
        raise ValueError(f"unknown semigroup family {kind!r}")
    if n is None or n < 1:
        raise ValueError("n must be >= 1")
    return families[kind](n)
