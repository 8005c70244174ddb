"""Partial representations and the passage between them and partial actions."""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product
from typing import Sequence

from . import linalg as la
from .action import PartialAction, verify_partial_action
from .algebra import (Embedding, QuotientMap, StructureAlgebra, elem_mul, find_unit, ideal_closure,
                      matrix_algebra, quotient_algebra, require_associative, subalgebra_generated, unit_of,
                      verify_linear_hom)
from .crossed import CrossedProduct, build_crossed_product
from .errors import (ActionAxiomFailure, BadShape, HomomorphismBreach, MembershipBreach, NonUnitalIdeal,
                     NotAssociative, TargetNotUnital, WellDefinednessBreach)
from .linalg import Matrix, Subspace, Vector
from .report import AxiomReport
from .semigroup import InverseSemigroup, strictly_below


@dataclass(frozen=True)
class PartialRep:
    semigroup: InverseSemigroup
    target: StructureAlgebra
    images: tuple[Vector, ...]

    def __call__(self, s: int) -> Vector:
        return self.images[s]

    def prod(self, *elements: int) -> Vector:
        """pi(s1) pi(s2) ... evaluated left to right in the target."""
        v = self.images[elements[0]]
        for s in elements[1:]:
            v = elem_mul(self.target, v, self.images[s])
        return v

    def eps(self, s: int) -> Vector:
        return self.prod(s, self.semigroup.inv[s])


def make_rep(S: InverseSemigroup, B: StructureAlgebra, images: Sequence[Sequence]) -> PartialRep:
    if len(images) != S.size:
        raise BadShape(f"{len(images)} images for a semigroup of size {S.size}")
    for v in images:
        if len(v) != B.dim:
            raise BadShape(f"image of length {len(v)} in an algebra of dim {B.dim}")
    return PartialRep(S, B, tuple(la.vec(v) for v in images))


def verify_partial_rep(pi: PartialRep) -> AxiomReport:
    if find_unit(pi.target) is None:
        raise TargetNotUnital("partial representations need a unital target")
    S = pi.semigroup
    n = S.size
    inv, mul = S.inv, S.mul
    rep = AxiomReport()
    rep.record("(i) pi(s*)pi(s)pi(t) = pi(s*)pi(st)", [
        (s, t) for s, t in product(range(n), repeat=2)
        if pi.prod(inv[s], s, t) != pi.prod(inv[s], mul[s][t])
    ])
    rep.record("(ii) pi(s)pi(t)pi(t*) = pi(st)pi(t*)", [
        (s, t) for s, t in product(range(n), repeat=2)
        if pi.prod(s, t, inv[t]) != pi.prod(mul[s][t], inv[t])
    ])
    rep.record("(iii) pi(s)pi(s*)pi(s) = pi(s)", [
        s for s in range(n) if pi.prod(s, inv[s], s) != pi(s)
    ])
    return rep


def lemma_2_3_check(pi: PartialRep) -> AxiomReport:
    S, B = pi.semigroup, pi.target
    n, inv, mul = S.size, S.inv, S.mul
    eps = [pi.eps(s) for s in range(n)]
    rep = AxiomReport()
    rep.record("eps_s idempotent", [s for s in range(n) if elem_mul(B, eps[s], eps[s]) != eps[s]])
    rep.record("eps_s eps_t = eps_t eps_s", [
        (s, t) for s, t in product(range(n), repeat=2)
        if s < t and elem_mul(B, eps[s], eps[t]) != elem_mul(B, eps[t], eps[s])
    ])
    rep.record("pi(s) eps_t = eps_st pi(s)", [
        (s, t) for s, t in product(range(n), repeat=2)
        if elem_mul(B, pi(s), eps[t]) != elem_mul(B, eps[mul[s][t]], pi(s))
    ])
    # eps_s eps_t = pi(ss*t) pi(t*s) pi(s*tt*)
    rep.record("eps_s eps_t = pi(ss*t)pi(t*s)pi(s*tt*)", [
        (s, t) for s, t in product(range(n), repeat=2)
        if elem_mul(B, eps[s], eps[t]) != pi.prod(S(s, inv[s], t), S(inv[t], s), S(inv[s], t, inv[t]))
    ])
    return rep


@dataclass(frozen=True)
class RepAction:
    """The subalgebra A generated by the eps_s and the partial action alpha^pi on it."""

    A: StructureAlgebra
    inclusion: Embedding
    action: PartialAction
    eps: tuple[Vector, ...]  # eps_s in A-coordinates


def action_from_rep(pi: PartialRep, validate: bool = True) -> RepAction:
    S, B = pi.semigroup, pi.target
    require_associative(B)
    n = S.size
    eps_B = [pi.eps(s) for s in range(n)]
    A, inc = subalgebra_generated(B, eps_B)
    eps = tuple(inc.coords(e) for e in eps_B)
    basisA = [A.basis(i) for i in range(A.dim)]
    ideals = tuple(la.span([elem_mul(A, eps[s], a) for a in basisA], A.dim) for s in range(n))
    maps = []
    for s in range(n):
        dom, cod = ideals[S.inv[s]], ideals[s]
        cols = []
        for b in dom.basis:
            img_B = elem_mul(B, elem_mul(B, pi(s), inc.apply(b)), pi(S.inv[s]))
            try:
                cols.append(cod.coords(inc.coords(img_B)))
            except MembershipBreach as exc:
                raise ActionAxiomFailure(f"pi(s) a pi(s*) leaves X_s for s={s}", witness=s) from exc
        maps.append(la.columns_to_matrix(cols, cod.dim))
    alpha = PartialAction(S, A, ideals, tuple(maps))
    if validate:
        rep = verify_partial_action(alpha)
        if not rep.ok:
            f = rep.first_failure()
            raise ActionAxiomFailure(f"alpha^pi is not a partial action: {f.name}", witness=f.witness, report=rep)
    return RepAction(A, inc, alpha, eps)


def rep_from_action(alpha: PartialAction, C: CrossedProduct | None = None) -> tuple[PartialRep, CrossedProduct]:
    """s -> coset of 1_s delta_s in A x_alpha S."""
    A = alpha.algebra
    units = []
    for s, X in enumerate(alpha.ideals):
        u = unit_of(A, X)
        if u is None:
            raise NonUnitalIdeal(f"X_{s} has no unit", witness=s)
        units.append(u)
    if C is None:
        C = build_crossed_product(alpha)
    if not C.associative:
        raise NotAssociative("crossed product is not associative", witness=C.assoc_witness)
    images = tuple(C.coset(s, units[s]) for s in range(alpha.semigroup.size))
    return PartialRep(alpha.semigroup, C.quotient, images), C


def verify_rep_equivalence(pi: PartialRep, pi2: PartialRep, phi: Matrix) -> bool:
    """phi : target(pi2) -> target(pi) an isomorphism with pi(s) = phi(pi2(s))."""
    if pi.semigroup.size != pi2.semigroup.size:
        return False
    B, B2 = pi.target, pi2.target
    if B.dim != B2.dim:
        return False
    if la.shape(phi, B2.dim) != (B.dim, B2.dim):
        raise BadShape(f"phi has shape {la.shape(phi, B2.dim)}, expected {(B.dim, B2.dim)}")
    ok, _ = verify_linear_hom(B2, B, phi, require_bijective=True)
    return ok and all(la.apply(phi, pi2(s)) == pi(s) for s in range(pi.semigroup.size))


@dataclass(frozen=True)
class RepQuotient:
    J: Subspace
    quotient: StructureAlgebra
    Phi: QuotientMap
    pi_tilde: PartialRep
    pi: PartialRep


def rep_quotient(pi: PartialRep) -> RepQuotient:
    """B/J for J generated by a pi(s) - a pi(t) over basis a of B and s < t."""
    S, B = pi.semigroup, pi.target
    gens = []
    for s, t in strictly_below(S):
        for k in range(B.dim):
            a = B.basis(k)
            g = la.sub(elem_mul(B, a, pi(s)), elem_mul(B, a, pi(t)))
            if any(g):
                gens.append(g)
    J = ideal_closure(B, gens)
    Q, Phi = quotient_algebra(B, J, name="B/J")
    if Q.unit is None:
        u = find_unit(B)
        if u is not None:
            Q = replace(Q, unit=Phi.project(u))
            Phi = replace(Phi, algebra=Q)
    tilde = PartialRep(S, Q, tuple(Phi.project(v) for v in pi.images))
    return RepQuotient(J, Q, Phi, tilde, pi)


@dataclass
class PhiHom:
    matrix: Matrix          # A x S (quotient coords) -> B/J
    L_matrix: Matrix        # L -> B/J
    report: AxiomReport


def phi_hom(rq: RepQuotient, ra: RepAction, C: CrossedProduct | None = None, strict: bool = True) -> PhiHom:
    """sum a_s delta_s -> sum a_s pi~(s), checked to be a well-defined homomorphism."""
    Q, pt = rq.quotient, rq.pi_tilde
    alpha = ra.action
    S = alpha.semigroup
    if C is None:
        C = build_crossed_product(alpha)
    lb = C.lbasis
    cols = []
    for k in range(lb.dim):
        s, j = lb.label(k)
        a = ra.inclusion.apply(alpha.ideals[s].basis[j])
        cols.append(elem_mul(Q, a, pt(s)))
    ML = la.columns_to_matrix(cols, Q.dim)
    rep = AxiomReport()
    # kills I
    rep.record("well-defined on L/I", [
        i for i, v in enumerate(C.I.basis) if any(la.apply(ML, v))
    ] if Q.dim else [])
    Lok, Lw = verify_linear_hom(C.L, Q, ML)
    rep.add("multiplicative on L", Lok, Lw)
    M = la.columns_to_matrix([la.apply(ML, C.Phi.lift(C.quotient.basis(i))) for i in range(C.quotient.dim)],
                             Q.dim) if Q.dim else ()
    ok, w = verify_linear_hom(C.quotient, Q, M)
    rep.add("multiplicative on A x S", ok, w)
    # phi(pi_alpha(s)) = pi~(s) with pi_alpha(s) = coset of 1_s delta_s
    bad = []
    for s in range(S.size):
        unit_s = unit_of(alpha.algebra, alpha.ideals[s])
        if unit_s is None:
            bad.append((s, "X_s has no unit"))
            continue
        image = la.apply(M, C.coset(s, unit_s)) if Q.dim else ()
        if image != pt(s):
            bad.append(s)
    rep.record("phi o pi_alpha = pi~", bad)
    if strict and not rep.ok:
        f = rep.first_failure()
        exc = WellDefinednessBreach if f.name.startswith("well") else HomomorphismBreach
        raise exc(f"Proposition 2.5 check failed: {f.name}", witness=f.witness)
    return PhiHom(M, ML, rep)


def wagner_preston(S: InverseSemigroup) -> PartialRep:
    """s -> matrix of the partial bijection x -> sx on {x : s*s x = x}."""
    n = S.size
    B = matrix_algebra(n)
    images = []
    for s in range(n):
        dom_idem = S.mul[S.inv[s]][s]
        v = [0] * (n * n)
        for x in range(n):
            if S.mul[dom_idem][x] == x:
                v[S.mul[s][x] * n + x] = 1
        images.append(v)
    return make_rep(S, B, images)
