"""Partial actions of inverse semigroups on algebras."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from . import linalg as la
from .algebra import (StructureAlgebra, direct_sum, elem_mul, find_ideal_escape, require_associative,
                      subspace_algebra, verify_linear_hom)
from .errors import BadShape, MembershipBreach, NotAssociative
from .linalg import Matrix, Subspace, Vector
from .report import AxiomReport
from .semigroup import InverseSemigroup, natural_leq


@dataclass(frozen=True)
class PartialAction:
    """Ideals X_s of ``algebra`` and maps alpha_s : X_{s*} -> X_s.

    ``maps[s]`` is a ``dim X_s x dim X_{s*}`` matrix relative to the echelon
    bases of the two ideals.
    """

    semigroup: InverseSemigroup
    algebra: StructureAlgebra
    ideals: tuple[Subspace, ...]
    maps: tuple[Matrix, ...]

    def domain(self, s: int) -> Subspace:
        return self.ideals[self.semigroup.inv[s]]

    def apply(self, s: int, v: Sequence) -> Vector:
        """alpha_s(v) for an ambient vector v in X_{s*}."""
        c = self.domain(s).coords(v)
        return self.ideals[s].from_coords(la.apply(self.maps[s], c))

    def image(self, s: int, W: Subspace) -> Subspace:
        return la.span([self.apply(s, w) for w in W.basis], self.algebra.dim)

    def dims(self) -> list[int]:
        return [X.dim for X in self.ideals]


def action_from_ambient_maps(S: InverseSemigroup, A: StructureAlgebra, ideals: Sequence[Subspace],
                             ambient: Sequence[Matrix | None]) -> PartialAction:
    """Restrict ambient linear maps (None = identity) to X_{s*} -> X_s.

    Raises MembershipBreach if some map does not carry X_{s*} into X_s.
    """
    ideals = tuple(ideals)
    maps = []
    for s in range(S.size):
        dom, cod = ideals[S.inv[s]], ideals[s]
        M = ambient[s]
        cols = []
        for b in dom.basis:
            img = tuple(b) if M is None else la.apply(M, b)
            cols.append(cod.coords(img))
        maps.append(la.columns_to_matrix(cols, cod.dim))
    return PartialAction(S, A, ideals, tuple(maps))


def action_with_ideals(S: InverseSemigroup, A: StructureAlgebra, ideals: Sequence[Subspace]) -> PartialAction:
    """Identity maps on the given ideals (requires X_s = X_{s*})."""
    return action_from_ambient_maps(S, A, ideals, [None] * S.size)


def trivial_action(S: InverseSemigroup, A: StructureAlgebra) -> PartialAction:
    A = require_associative(A)
    return action_with_ideals(S, A, [la.full_space(A.dim)] * S.size)


def verify_partial_action(alpha: PartialAction) -> AxiomReport:
    """Check every partial-action axiom and report all failures."""
    S, A = alpha.semigroup, alpha.algebra
    n = S.size
    rep = AxiomReport()

    shape_bad = []
    if len(alpha.ideals) != n or len(alpha.maps) != n:
        rep.add("shape", False, (len(alpha.ideals), len(alpha.maps), n))
        return rep
    for s in range(n):
        X, D = alpha.ideals[s], alpha.domain(s)
        if X.ambient_dim != A.dim:
            shape_bad.append(("ambient", s))
            continue
        r, c = la.shape(alpha.maps[s], D.dim)
        if (r, c) != (X.dim, D.dim) and not (X.dim == 0 and r == 0):
            shape_bad.append(("map", s, (r, c), (X.dim, D.dim)))
    rep.record("shape", shape_bad)
    if shape_bad:
        return rep

    rep.record("associative_algebra", [] if require_assoc_ok(A) else ["A"])

    rep.record("ideal", [
        (s, w) for s in range(n) for w in [find_ideal_escape(A, alpha.ideals[s])] if w is not None
    ])

    bij = []
    for s in range(n):
        X, D = alpha.ideals[s], alpha.domain(s)
        if X.dim != D.dim or la.rank(alpha.maps[s], D.dim) != X.dim:
            bij.append((s, X.dim, D.dim))
    rep.record("bijective", bij)

    mult = []
    for s in range(n):
        D = alpha.domain(s)
        for (i, a), (j, b) in product(enumerate(D.basis), repeat=2):
            try:
                ok = alpha.apply(s, elem_mul(A, a, b)) == elem_mul(A, alpha.apply(s, a), alpha.apply(s, b))
            except MembershipBreach:
                ok = False
            if not ok:
                mult.append((s, i, j))
                break
    rep.record("multiplicative", mult)

    inv_bad = []
    for s in range(n):
        for i, a in enumerate(alpha.domain(s).basis):
            try:
                back = alpha.apply(S.inv[s], alpha.apply(s, a))
            except MembershipBreach:
                back = None
            if back != a:
                inv_bad.append((s, i))
                break
    rep.record("inverse", inv_bad)

    rng = []
    for s, t in product(range(n), repeat=2):
        lhs = alpha.image(s, la.intersect(alpha.domain(s), alpha.ideals[t]))
        rhs = la.intersect(alpha.ideals[s], alpha.ideals[S.mul[s][t]])
        if lhs != rhs:
            rng.append((s, t, str(lhs), str(rhs)))
    rep.record("range", rng)

    comp = []
    for s, t in product(range(n), repeat=2):
        st = S.mul[s][t]
        # domain alpha_t^{-1}(X_t cap X_{s*}) = alpha_{t*}(X_t cap X_{s*})
        try:
            dom = alpha.image(S.inv[t], la.intersect(alpha.ideals[t], alpha.domain(s)))
        except MembershipBreach:
            comp.append((s, t, "domain"))
            continue
        for a in dom.basis:
            try:
                lhs = alpha.apply(s, alpha.apply(t, a))
                rhs = alpha.apply(st, a)
            except MembershipBreach:
                comp.append((s, t, la.fmt_vector(a)))
                break
            if lhs != rhs:
                comp.append((s, t, la.fmt_vector(a)))
                break
    rep.record("composition", comp)

    if S.unit is not None:
        one = S.unit
        ok = alpha.ideals[one].dim == A.dim and alpha.maps[one] == la.identity(A.dim)
        rep.add("unit", ok, None if ok else one)
    return rep


def require_assoc_ok(A: StructureAlgebra) -> bool:
    try:
        require_associative(A)
    except NotAssociative:
        return False
    return True


def check_order_inclusion(alpha: PartialAction) -> list[tuple[int, int]]:
    """Pairs r <= t with X_r not contained in X_t (should be empty)."""
    S = alpha.semigroup
    return [(r, t) for r, t in product(range(S.size), repeat=2)
            if natural_leq(S, r, t) and not alpha.ideals[t].includes(alpha.ideals[r])]


def verify_action_equivalence(alpha: PartialAction, beta: PartialAction, phi: Matrix) -> tuple[bool, object]:
    """phi : A -> A' an algebra isomorphism with phi(X_s) = X'_s and phi alpha_s = alpha'_s phi."""
    S = alpha.semigroup
    if beta.semigroup.size != S.size:
        return False, ("semigroup", S.size, beta.semigroup.size)
    A, B = alpha.algebra, beta.algebra
    if A.dim != B.dim:
        return False, ("dimension", A.dim, B.dim)
    if la.shape(phi, A.dim) != (B.dim, A.dim):
        raise BadShape(f"phi has shape {la.shape(phi, A.dim)}, expected {(B.dim, A.dim)}")
    ok, w = verify_linear_hom(A, B, phi, require_bijective=True)
    if not ok:
        return False, w
    for s in range(S.size):
        img = la.span([la.apply(phi, v) for v in alpha.ideals[s].basis], B.dim)
        if img != beta.ideals[s]:
            return False, ("ideal", s)
        for a in alpha.domain(s).basis:
            if la.apply(phi, alpha.apply(s, a)) != beta.apply(s, la.apply(phi, a)):
                return False, ("intertwine", s, la.fmt_vector(a))
    return True, None


def restrict_global_action(S: InverseSemigroup, A: StructureAlgebra, ambient: Sequence[Matrix],
                           X: Subspace) -> PartialAction:
    """Partial action induced on an ideal X by a global group action beta:
    X_s = X cap beta_s(X), alpha_s = beta_s on X_{s*}.  Returned in X's own coordinates."""
    n = A.dim
    pieces = [la.intersect(X, la.span([la.apply(ambient[s], v) for v in X.basis], n)) for s in range(S.size)]
    B = subspace_algebra(A, X)
    ideals = [la.span([X.coords(v) for v in P.basis], X.dim) for P in pieces]
    maps = []
    for s in range(S.size):
        dom, cod = ideals[S.inv[s]], ideals[s]
        cols = [cod.coords(X.coords(la.apply(ambient[s], X.from_coords(b)))) for b in dom.basis]
        maps.append(la.columns_to_matrix(cols, cod.dim))
    return PartialAction(S, B, tuple(ideals), tuple(maps))


def direct_sum_action(alpha: PartialAction, beta: PartialAction) -> PartialAction:
    """alpha (+) beta on A (+) B for a common semigroup."""
    S = alpha.semigroup
    A, B = alpha.algebra, beta.algebra
    C = direct_sum(A, B)
    n, m = A.dim, B.dim
    ideals = []
    for s in range(S.size):
        vs = [tuple(v) + la.zero(m) for v in alpha.ideals[s].basis]
        vs += [la.zero(n) + tuple(v) for v in beta.ideals[s].basis]
        ideals.append(la.span(vs, n + m))
    maps = []
    for s in range(S.size):
        dom, cod = ideals[S.inv[s]], ideals[s]
        cols = []
        for b in dom.basis:
            a_part, b_part = b[:n], b[n:]
            img_a = alpha.apply(s, a_part) if any(a_part) else la.zero(n)
            img_b = beta.apply(s, b_part) if any(b_part) else la.zero(m)
            cols.append(cod.coords(tuple(img_a) + tuple(img_b)))
        maps.append(la.columns_to_matrix(cols, cod.dim))
    return PartialAction(S, C, tuple(ideals), tuple(maps))
