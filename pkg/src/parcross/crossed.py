"""Algebraic crossed products A x_alpha S = L / I."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from . import linalg as la
from .action import PartialAction, verify_partial_action
from .algebra import (REFUTED, VERIFIED, QuotientMap, StructureAlgebra, algebra_from_constants,
                      check_associative, elem_mul, ideal_closure, ideal_diagnostics, is_LR_associative,
                      is_semiprime, quotient_algebra, spot_check_quotient, subspace_algebra)
from .errors import MembershipBreach, NotValidated, WellDefinednessBreach
from .linalg import Subspace, Vector
from .report import AxiomReport
from .semigroup import strictly_below


@dataclass(frozen=True)
class FormalSum:
    """sum_s a_s delta_s with each a_s stored in X_s-coordinates; zero terms pruned."""

    support: Mapping[int, Vector]

    @classmethod
    def from_ambient(cls, alpha: PartialAction, terms: Mapping[int, Sequence]) -> "FormalSum":
        sup = {}
        for s, v in terms.items():
            c = alpha.ideals[s].coords(v)
            if any(c):
                sup[s] = c
        return cls(sup)

    def ambient(self, alpha: PartialAction, s: int) -> Vector:
        if s not in self.support:
            return la.zero(alpha.algebra.dim)
        return alpha.ideals[s].from_coords(self.support[s])

    def __add__(self, other: "FormalSum") -> "FormalSum":
        sup = dict(self.support)
        for s, c in other.support.items():
            sup[s] = la.add(sup[s], c) if s in sup else c
        return FormalSum({s: c for s, c in sup.items() if any(c)})


def _delta_product(alpha: PartialAction, s: int, a: Sequence, t: int, b: Sequence) -> Vector:
    """alpha_s(alpha_{s*}(a) b), the coefficient of delta_{st} in (a delta_s)(b delta_t)."""
    A, S = alpha.algebra, alpha.semigroup
    return alpha.apply(s, elem_mul(A, alpha.apply(S.inv[s], a), b))


def mul_L(alpha: PartialAction, x: FormalSum, y: FormalSum) -> FormalSum:
    S = alpha.semigroup
    out: dict[int, Vector] = {}
    for s in x.support:
        a = x.ambient(alpha, s)
        for t in y.support:
            st = S.mul[s][t]
            z = _delta_product(alpha, s, a, t, y.ambient(alpha, t))
            if not alpha.ideals[st].contains(z):
                raise MembershipBreach(f"product lands outside X_{st}", witness=(s, t))
            out[st] = la.add(out[st], z) if st in out else z
    return FormalSum.from_ambient(alpha, out)


@dataclass(frozen=True)
class LBasis:
    """Basis of L: block s holds the echelon basis of X_s."""

    offsets: tuple[int, ...]
    dims: tuple[int, ...]

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def index(self, s: int, j: int) -> int:
        return self.offsets[s] + j

    def label(self, k: int) -> tuple[int, int]:
        for s, (o, d) in enumerate(zip(self.offsets, self.dims)):
            if o <= k < o + d:
                return s, k - o
        raise IndexError(k)

    def embed(self, s: int, coords: Sequence) -> Vector:
        out = [la.ZERO] * self.dim
        for j, c in enumerate(coords):
            out[self.offsets[s] + j] = c
        return tuple(out)

    def to_formal(self, v: Sequence) -> FormalSum:
        sup = {}
        for s, (o, d) in enumerate(zip(self.offsets, self.dims)):
            c = tuple(v[o:o + d])
            if any(c):
                sup[s] = c
        return FormalSum(sup)

    def from_formal(self, x: FormalSum) -> Vector:
        out = [la.ZERO] * self.dim
        for s, c in x.support.items():
            for j, v in enumerate(c):
                out[self.offsets[s] + j] = v
        return tuple(out)


def _lbasis(alpha: PartialAction) -> LBasis:
    dims = tuple(alpha.dims())
    offsets, o = [], 0
    for d in dims:
        offsets.append(o)
        o += d
    return LBasis(tuple(offsets), dims)


def _require_valid(alpha: PartialAction):
    if alpha.semigroup.unit is None:
        raise NotValidated("crossed products need a unital semigroup")
    rep = verify_partial_action(alpha)
    if not rep.ok:
        f = rep.first_failure()
        raise NotValidated(f"not a partial action: {f.name} fails, witness {f.witness}",
                           witness=f.witness, report=rep)


def build_L(alpha: PartialAction, validate: bool = True) -> tuple[StructureAlgebra, LBasis]:
    if validate:
        _require_valid(alpha)
    S = alpha.semigroup
    lb = _lbasis(alpha)
    consts = {}
    for s in range(S.size):
        Xs = alpha.ideals[s]
        for i, a in enumerate(Xs.basis):
            for t in range(S.size):
                st = S.mul[s][t]
                Xst = alpha.ideals[st]
                for j, b in enumerate(alpha.ideals[t].basis):
                    z = _delta_product(alpha, s, a, t, b)
                    if not Xst.contains(z) or not Xs.contains(z):
                        raise WellDefinednessBreach(
                            f"alpha_s(alpha_s*(a) b) not in X_s cap X_st for s={s}, t={t}", witness=(s, t))
                    if any(z):
                        consts[(lb.index(s, i), lb.index(t, j))] = lb.embed(st, Xst.coords(z))
    return algebra_from_constants(lb.dim, consts, name="L"), lb


def ideal_generators(alpha: PartialAction, lb: LBasis) -> list[Vector]:
    """a delta_r - a delta_t for r < t and a running over the basis of X_r."""
    gens = []
    for r, t in strictly_below(alpha.semigroup):
        Xr, Xt = alpha.ideals[r], alpha.ideals[t]
        for a in Xr.basis:
            if not Xt.contains(a):
                raise WellDefinednessBreach(f"X_{r} is not inside X_{t} although {r} <= {t}", witness=(r, t))
            gens.append(la.sub(lb.embed(r, Xr.coords(a)), lb.embed(t, Xt.coords(a))))
    return gens


def build_ideal_I(alpha: PartialAction, L: StructureAlgebra, lb: LBasis) -> Subspace:
    return ideal_closure(L, ideal_generators(alpha, lb))


@dataclass(frozen=True)
class CrossedProduct:
    action: PartialAction
    L: StructureAlgebra
    lbasis: LBasis
    I: Subspace
    quotient: StructureAlgebra
    Phi: QuotientMap
    assoc_witness: tuple | None = field(default=None, compare=False)

    @property
    def associative(self) -> bool:
        return self.quotient.associative_flag == VERIFIED

    def coset(self, s: int, a: Sequence) -> Vector:
        """Phi(a delta_s) for an ambient vector a in X_s."""
        return self.Phi.project(self.lbasis.embed(s, self.action.ideals[s].coords(a)))

    def dims(self) -> dict[str, int]:
        return {"L": self.L.dim, "I": self.I.dim, "quotient": self.quotient.dim}


def build_crossed_product(alpha: PartialAction, validate: bool = True) -> CrossedProduct:
    L, lb = build_L(alpha, validate)
    I = build_ideal_I(alpha, L, lb)
    Q, Phi = quotient_algebra(L, I, name="crossed product")
    ok, w = spot_check_quotient(Phi)
    if not ok:
        raise WellDefinednessBreach("quotient product depends on representatives", witness=w)
    S, A = alpha.semigroup, alpha.algebra
    if A.unit is not None:
        # 1_A delta_1 is the unit of L
        Q = replace(Q, unit=Phi.project(lb.embed(S.unit, alpha.ideals[S.unit].coords(A.unit))))
    assoc, wit = check_associative(Q)
    Q = replace(Q, associative_flag=VERIFIED if assoc else REFUTED)
    Phi = replace(Phi, algebra=Q)
    return CrossedProduct(alpha, L, lb, I, Q, Phi, wit)


def associativity_report(C: StructureAlgebra) -> tuple[bool, tuple | None]:
    return check_associative(C)


@dataclass
class Theorem11Report:
    per_element: list[dict]
    semiprime_A: bool
    dims: dict[str, int]
    conclusion: bool
    witness: tuple | None
    hypothesis: bool
    cor12_hypothesis: bool
    implication_ok: bool
    cor12_ok: bool
    cor14_ok: bool

    def as_report(self) -> AxiomReport:
        rep = AxiomReport()
        rep.add("Theorem 1.1 implication", self.implication_ok,
                None if self.implication_ok else {"witness": self.witness})
        rep.add("Corollary 1.2 implication", self.cor12_ok)
        rep.add("Corollary 1.4 implication", self.cor14_ok)
        return rep


def theorem_1_1_suite(alpha: PartialAction, C: CrossedProduct | None = None) -> Theorem11Report:
    """Hypotheses per X_s, the conclusion, and the implications between them."""
    if C is None:
        C = build_crossed_product(alpha)
    A = alpha.algebra
    per = []
    for s, X in enumerate(alpha.ideals):
        Xalg = subspace_algebra(A, X)
        diag = ideal_diagnostics(A, X)
        per.append({"s": s, "dim": X.dim, "lr_associative": is_LR_associative(Xalg), **diag})
    semiprime = is_semiprime(A)
    conclusion = C.associative
    hyp = all(p["lr_associative"] for p in per)
    hyp12 = all(p["idempotent"] or p["nondegenerate"] for p in per)
    return Theorem11Report(
        per_element=per, semiprime_A=semiprime, dims=C.dims(), conclusion=conclusion,
        witness=C.assoc_witness, hypothesis=hyp, cor12_hypothesis=hyp12,
        implication_ok=(not hyp) or conclusion,
        cor12_ok=(not hyp12) or conclusion,
        cor14_ok=(not semiprime) or conclusion,
    )
