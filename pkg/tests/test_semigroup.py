from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_partial_injections, is_inverse_semigroup_by_definition
from parcross import semigroup as sg
from parcross.errors import MalformedTable, NotInverseSemigroup, OutOfRange

FAMILY = [sg.cyclic_group(n) for n in range(1, 7)] + [sg.chain_semilattice(n) for n in range(1, 5)] + [
    sg.symmetric_inverse_monoid(1), sg.symmetric_inverse_monoid(2), sg.trivial_semigroup(),
    sg.direct_product(sg.cyclic_group(2), sg.chain_semilattice(2)),
]


def test_cyclic_two():
    S = sg.cyclic_group(2)
    assert S.size == 2 and S.unit == 0 and S.inv == (0, 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_symmetric_inverse_monoid_matches_brute_force(n):
    S = sg.symmetric_inverse_monoid(n)
    elems = sg.partial_injections(n)
    brute = brute_partial_injections(n)
    assert S.size == len(brute)
    assert {frozenset((i, x) for i, x in enumerate(f) if x >= 0) for f in elems} == brute
    # composition (st)(x) = s(t(x)), checked pointwise
    for a, b in product(range(S.size), repeat=2):
        s, t, st = elems[a], elems[b], elems[S.mul[a][b]]
        for x in range(n):
            expect = -1 if t[x] < 0 else s[t[x]]
            assert st[x] == expect


def test_sim2_has_seven_elements_and_identity_first():
    S = sg.symmetric_inverse_monoid(2)
    assert S.size == 7 and S.unit == 0


def test_left_zero_rejected_with_idempotent_witness():
    rep = sg.verify_inverse_semigroup([[0, 0], [1, 1]])
    assert rep.first_failure().name == "idempotents_commute"
    with pytest.raises(NotInverseSemigroup) as ei:
        sg.from_table([[0, 0], [1, 1]])
    assert ei.value.witness is not None


def test_non_associative_table_rejected():
    rep = sg.verify_inverse_semigroup([[1, 0], [0, 0]])
    assert "associativity" in rep.failed_axioms()


def test_malformed_tables():
    with pytest.raises(MalformedTable):
        sg.from_table([[0, 1], [1]])
    with pytest.raises(MalformedTable):
        sg.from_table([[0, 2], [1, 0]])
    with pytest.raises(MalformedTable):
        sg.from_table([])


def test_bad_unit_reported():
    rep = sg.verify_inverse_semigroup(sg.chain_semilattice(2).mul, unit=0)
    assert "unit" in rep.failed_axioms()


def test_inverse_and_order_examples():
    assert sg.inverse_of(sg.cyclic_group(4), 1) == 3
    C = sg.chain_semilattice(2)
    assert sg.natural_leq(C, 0, 1) and not sg.natural_leq(C, 1, 0)
    Z = sg.cyclic_group(2)
    assert not sg.natural_leq(Z, 1, 0)
    assert sg.idempotents(Z) == (0,)
    assert sg.strictly_below(C) == [(0, 1)]
    with pytest.raises(OutOfRange):
        sg.natural_leq(C, 0, 5)


def test_idempotents_of_sim2_are_partial_identities():
    S = sg.symmetric_inverse_monoid(2)
    elems = sg.partial_injections(2)
    idem = {e for e in range(S.size) if all(x in (-1, i) for i, x in enumerate(elems[e]))}
    assert set(sg.idempotents(S)) == idem and len(idem) == 4


@pytest.mark.parametrize("S", FAMILY, ids=lambda S: f"size{S.size}")
def test_natural_order_is_partial_order(S):
    n = S.size
    leq = [[sg.natural_leq(S, a, b) for b in range(n)] for a in range(n)]
    for a in range(n):
        assert leq[a][a]
    for a, b in product(range(n), repeat=2):
        if a != b:
            assert not (leq[a][b] and leq[b][a])
    for a, b, c in product(range(n), repeat=3):
        if leq[a][b] and leq[b][c]:
            assert leq[a][c]
    # compatible with products and inversion
    for a, b, c in product(range(n), repeat=3):
        if leq[a][b]:
            assert leq[S.mul[a][c]][S.mul[b][c]] and leq[S.mul[c][a]][S.mul[c][b]]
            assert leq[S.inv[a]][S.inv[b]]


@pytest.mark.parametrize("S", FAMILY, ids=lambda S: f"size{S.size}")
def test_inverse_laws(S):
    for s in range(S.size):
        t = S.inv[s]
        assert S(s, t, s) == s and S(t, s, t) == t and S.inv[t] == s
    for s, t in product(range(S.size), repeat=2):
        assert S.inv[S.mul[s][t]] == S.mul[S.inv[t]][S.inv[s]]


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=9, max_size=9))
def test_verifier_agrees_with_definition_on_3_element_tables(flat):
    table = [flat[0:3], flat[3:6], flat[6:9]]
    assert sg.verify_inverse_semigroup(table).ok == is_inverse_semigroup_by_definition(table)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FAMILY), st.sampled_from(FAMILY[:8]))
def test_direct_products_are_inverse_semigroups(S, T):
    if S.size * T.size > 24:
        return
    P = sg.direct_product(S, T)
    assert P.size == S.size * T.size
    assert len(sg.idempotents(P)) == len(sg.idempotents(S)) * len(sg.idempotents(T))


def test_construct_semigroup_dispatch():
    assert sg.construct_semigroup("cyclic_group", 3).size == 3
    assert sg.construct_semigroup("table", table=[[0]], unit=0).size == 1
    with pytest.raises(ValueError):
        sg.construct_semigroup("nope", 2)
