from itertools import product

import pytest

from parcross import algebra as alg
from parcross import linalg as la
from parcross import semigroup as sg
from parcross.action import trivial_action, verify_partial_action
from parcross.corpus import SEMIGROUPS, semigroup_by_name
from parcross.crossed import build_crossed_product
from parcross.errors import BadShape, NonUnitalIdeal, NotAssociative, TargetNotUnital
from parcross.expansion import kpar
from parcross.partial_rep import (PartialRep, action_from_rep, lemma_2_3_check, make_rep, phi_hom,
                                  rep_from_action, rep_quotient, verify_partial_rep, verify_rep_equivalence,
                                  wagner_preston)


def _matrix(pi, s):
    n = int(len(pi(s)) ** 0.5)
    return [list(pi(s)[i * n:(i + 1) * n]) for i in range(n)]


@pytest.mark.parametrize("name", SEMIGROUPS)
def test_wagner_preston_is_strict_partial_rep(name):
    S = semigroup_by_name(name)
    pi = wagner_preston(S)
    assert verify_partial_rep(pi).ok
    assert lemma_2_3_check(pi).ok
    for s, t in product(range(S.size), repeat=2):
        assert pi.prod(s, t) == pi(S.mul[s][t])
    for s in range(S.size):
        M = _matrix(pi, s)
        Ms = _matrix(pi, S.inv[s])
        assert Ms == [list(r) for r in zip(*M)]  # pi(s*) is the transpose


def test_wagner_preston_examples():
    Z3 = sg.cyclic_group(3)
    for s in range(3):
        M = _matrix(wagner_preston(Z3), s)
        assert all(sum(r) == 1 for r in M) and all(sum(c) == 1 for c in zip(*M))
    C = sg.chain_semilattice(2)
    pi = wagner_preston(C)
    assert _matrix(pi, 1) == [[1, 0], [0, 1]]
    assert _matrix(pi, 0) == [[1, 0], [0, 0]]
    assert len({wagner_preston(sg.symmetric_inverse_monoid(2))(s) for s in range(7)}) == 7


def test_negative_control_fails_iii():
    S = sg.cyclic_group(2)
    M2 = alg.matrix_algebra(2)
    pi = make_rep(S, M2, [(1, 0, 0, 1), (1, 1, 0, 1)])
    rep = verify_partial_rep(pi)
    assert "(iii) pi(s)pi(s*)pi(s) = pi(s)" in rep.failed_axioms()
    assert any(c.witness == 1 for c in rep.failures())


def test_target_must_be_unital():
    S = sg.trivial_semigroup()
    with pytest.raises(TargetNotUnital):
        verify_partial_rep(make_rep(S, alg.zero_algebra(1), [(0,)]))
    with pytest.raises(BadShape):
        make_rep(S, alg.field(), [(1, 0)])


def test_kpar_iota_is_partial_rep():
    for S in (sg.cyclic_group(2), sg.chain_semilattice(2), sg.cyclic_group(3)):
        pi = kpar(S).rep()
        assert verify_partial_rep(pi).ok and lemma_2_3_check(pi).ok


def test_action_from_rep_examples():
    # strict permutation representation of Z2: eps_g = 1, everything global
    ra = action_from_rep(wagner_preston(sg.cyclic_group(2)))
    assert ra.A.dim == 1 and ra.action.dims() == [1, 1]
    # iota~ of Z2: J = 0, dims A = 2, X_1 = 2, X_g = 1
    rq = rep_quotient(kpar(sg.cyclic_group(2)).rep())
    assert rq.J.dim == 0
    ra = action_from_rep(rq.pi_tilde)
    assert ra.A.dim == 2 and ra.action.dims() == [2, 1]
    # iota~ of chain(2): dim A = 1
    rq = rep_quotient(kpar(sg.chain_semilattice(2)).rep())
    assert rq.J.dim == 1 and rq.quotient.dim == 1
    assert action_from_rep(rq.pi_tilde).A.dim == 1


@pytest.mark.parametrize("name", SEMIGROUPS)
def test_action_from_rep_properties(name):
    S = semigroup_by_name(name)
    ra = action_from_rep(wagner_preston(S))
    alpha = ra.action
    assert verify_partial_action(alpha).ok
    for s in range(S.size):
        assert alpha.apply(s, ra.eps[S.inv[s]]) == ra.eps[s]
        for a in alpha.ideals[s].basis:
            assert alpha.apply(s, alpha.apply(S.inv[s], a)) == a
        assert alg.unit_of(ra.A, alpha.ideals[s]) == ra.eps[s]


def test_rep_from_action_examples():
    C2 = sg.chain_semilattice(2)
    pi, C = rep_from_action(trivial_action(C2, alg.field()))
    assert C.quotient.dim == 1 and pi(0) == pi(1)
    assert verify_partial_rep(pi).ok
    Z2 = sg.cyclic_group(2)
    pi, C = rep_from_action(trivial_action(Z2, alg.field()))
    assert verify_partial_rep(pi).ok
    assert pi.prod(1, 1) == pi(0) == C.quotient.unit
    with pytest.raises(NonUnitalIdeal):
        rep_from_action(trivial_action(C2, alg.zero_algebra(1)))


def test_rep_from_action_refuses_nonassociative():
    alpha = trivial_action(sg.cyclic_group(2), alg.field())
    C = build_crossed_product(alpha)
    broken = type(C)(C.action, C.L, C.lbasis, C.I,
                     alg.with_associativity(alg.algebra_from_constants(2, {(0, 0): (0, 1), (1, 0): (1, 0)})),
                     C.Phi)
    with pytest.raises(NotAssociative):
        rep_from_action(alpha, broken)


def test_lemma_2_1_over_unital_corpus(corpus):
    n = 0
    for inst in corpus:
        alpha = inst.action
        if any(alg.unit_of(alpha.algebra, X) is None for X in alpha.ideals):
            continue
        pi, _ = rep_from_action(alpha)
        assert verify_partial_rep(pi).ok, inst.name
        n += 1
    assert n >= 30


def test_rep_equivalence():
    S = sg.cyclic_group(2)
    pi = wagner_preston(S)
    M2 = pi.target
    assert verify_rep_equivalence(pi, pi, la.identity(4))
    # conjugation by P = [[1,1],[0,1]] acting on the matrix-unit basis
    P = [[1, 1], [0, 1]]
    Pi = [[1, -1], [0, 1]]

    def conj(v):
        X = [[v[0], v[1]], [v[2], v[3]]]
        Y = [[sum(P[i][k] * X[k][l] * Pi[l][j] for k in range(2) for l in range(2)) for j in range(2)]
             for i in range(2)]
        return (Y[0][0], Y[0][1], Y[1][0], Y[1][1])

    phi = la.columns_to_matrix([la.vec(conj(M2.basis(i))) for i in range(4)], 4)
    pi2 = make_rep(S, M2, [conj(pi(s)) for s in range(2)])
    # phi maps the target of pi to the target of pi2 with pi2 = phi o pi
    assert verify_rep_equivalence(pi2, pi, phi)
    assert not verify_rep_equivalence(pi, pi2, phi)  # wrong direction
    other = make_rep(S, alg.product_of_fields(2), [(1, 1), (1, 1)])
    assert not verify_rep_equivalence(pi, other, ((1, 0),) * 4)


def test_rep_quotient_groups_have_zero_J():
    for n in range(1, 5):
        rq = rep_quotient(wagner_preston(sg.cyclic_group(n)))
        assert rq.J.dim == 0
        assert verify_partial_rep(rq.pi_tilde).ok


@pytest.mark.parametrize("S", [sg.cyclic_group(2), sg.chain_semilattice(2), sg.cyclic_group(3),
                               sg.chain_semilattice(3)], ids=["z2", "chain2", "z3", "chain3"])
def test_phi_hom_on_kpar(S):
    rq = rep_quotient(kpar(S).rep())
    ra = action_from_rep(rq.pi_tilde)
    C = build_crossed_product(ra.action)
    ph = phi_hom(rq, ra, C)
    assert ph.report.ok
    # definitional identity phi(coset of a delta_s) = a pi~(s) on every basis element
    for s in range(S.size):
        for a in ra.action.ideals[s].basis:
            lhs = la.apply(ph.matrix, C.coset(s, a)) if rq.quotient.dim else ()
            assert lhs == alg.elem_mul(rq.quotient, ra.inclusion.apply(a), rq.pi_tilde(s))


def test_phi_hom_wagner_preston_sim2_degenerate():
    rq = rep_quotient(wagner_preston(sg.symmetric_inverse_monoid(2)))
    # the matrix algebra is simple, so J is everything
    assert rq.J.dim == rq.pi.target.dim and rq.quotient.dim == 0
    ra = action_from_rep(rq.pi_tilde)
    assert phi_hom(rq, ra).report.ok


def test_partial_rep_prod_and_eps():
    S = sg.chain_semilattice(2)
    pi = PartialRep(S, alg.field(), (la.vec((1,)), la.vec((1,))))
    assert pi.eps(0) == la.vec((1,))
