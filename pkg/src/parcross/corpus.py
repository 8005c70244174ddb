"""Seeded random corpus of partial actions for the property suites."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import algebra as alg
from . import linalg as la
from . import semigroup as sg
from .action import (PartialAction, action_with_ideals, direct_sum_action, restrict_global_action,
                     trivial_action, verify_partial_action)
from .algebra import StructureAlgebra, ideal_closure
from .partial_rep import action_from_rep, wagner_preston
from .semigroup import InverseSemigroup
from .errors import NotAssociative
from .textio import builtin_algebra, builtin_semigroup

SEMIGROUPS = (
    "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
    "chain:1", "chain:2", "chain:3", "chain:4",
    "sim:1", "sim:2",
    "cyclic:2*chain:2", "chain:2*chain:2", "cyclic:3*chain:2",
)

# the last two are not semiprime and have ideals failing the Theorem 1.1 hypothesis
ALGEBRAS = ("field", "fields:2", "fields:3", "dual", "matrix:2", "zero:2", "upper:2")

KINDS = ("trivial", "padded", "wagner-preston", "shift")
_WEIGHTS = (2, 5, 2, 1)


@dataclass(frozen=True)
class Instance:
    name: str
    kind: str
    semigroup: str
    algebra: str
    action: PartialAction


@lru_cache(maxsize=None)
def semigroup_by_name(name: str) -> InverseSemigroup:
    if "*" in name:
        left, right = name.split("*", 1)
        return sg.direct_product(semigroup_by_name(left), semigroup_by_name(right))
    S = builtin_semigroup(name)
    if S is None:
        raise KeyError(f"unknown semigroup {name!r}")
    return S


@lru_cache(maxsize=None)
def algebra_by_name(name: str) -> StructureAlgebra:
    A = builtin_algebra(name)
    if A is None:
        raise KeyError(f"unknown algebra {name!r}")
    return A


def _support_action(S: InverseSemigroup, A: StructureAlgebra, top: frozenset, mid: frozenset = frozenset(),
                    J: la.Subspace | None = None) -> PartialAction:
    """X_s = A on ``top``, J on ``mid``, 0 elsewhere; identity maps."""
    full, zero = la.full_space(A.dim), la.zero_space(A.dim)
    ideals = [full if s in top else J if s in mid else zero for s in range(S.size)]
    return action_with_ideals(S, A, ideals)


@lru_cache(maxsize=None)
def valid_supports(name: str) -> tuple[frozenset, ...]:
    """Subsets F of S such that X_s = K for s in F, 0 otherwise, is a partial action on the field."""
    S = semigroup_by_name(name)
    K = alg.field()
    others = [s for s in range(S.size) if s != S.unit]
    out = []
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            F = frozenset((S.unit, *extra))
            if any(S.inv[s] not in F for s in F):
                continue
            if verify_partial_action(_support_action(S, K, F)).ok:
                out.append(F)
    return tuple(out)


def proper_ideals(A: StructureAlgebra) -> list[la.Subspace]:
    seen = []
    for i in range(A.dim):
        X = ideal_closure(A, [A.basis(i)])
        if 0 < X.dim < A.dim and X not in seen:
            seen.append(X)
    return seen


def padded_action(rng: random.Random, S_name: str, A: StructureAlgebra) -> tuple[PartialAction, str]:
    """Nested supports top <= outer with a proper ideal on the difference, else a plain support."""
    S = semigroup_by_name(S_name)
    sups = valid_supports(S_name)
    outer = rng.choice(sups)
    inner = [F for F in sups if F <= outer]
    top = rng.choice(inner)
    ideals = proper_ideals(A)
    if ideals and top != outer:
        J = rng.choice(ideals)
        alpha = _support_action(S, A, top, outer - top, J)
        if verify_partial_action(alpha).ok:
            return alpha, f"support {sorted(top)} / {sorted(outer)} on ideal of dim {J.dim}"
    return _support_action(S, A, outer), f"support {sorted(outer)}"


def shift_action(rng: random.Random, n: int) -> tuple[PartialAction, str]:
    """Cyclic shift on K^n restricted to a coordinate ideal."""
    S = sg.cyclic_group(n)
    A = alg.product_of_fields(n)
    ambient = []
    for g in range(n):
        M = [[0] * n for _ in range(n)]
        for i in range(n):
            M[(i + g) % n][i] = 1
        ambient.append(la.mat(M))
    size = rng.randint(1, n)
    coords = sorted(rng.sample(range(n), size))
    X = la.span([la.basis_vector(n, i) for i in coords], n)
    return restrict_global_action(S, A, ambient, X), f"coordinates {coords}"


def _draw(rng: random.Random, fixed: tuple[str, StructureAlgebra] | None) -> Instance:
    kinds = ("trivial", "padded") if fixed else KINDS
    weights = _WEIGHTS[:len(kinds)]
    kind = rng.choices(kinds, weights)[0]
    if kind == "shift":
        n = rng.randint(2, 4)
        alpha, note = shift_action(rng, n)
        return Instance(f"shift cyclic:{n} {note}", kind, f"cyclic:{n}", f"fields:{n}|X", alpha)
    S_name = rng.choice(SEMIGROUPS)
    S = semigroup_by_name(S_name)
    if kind == "wagner-preston":
        alpha = action_from_rep(wagner_preston(S)).action
        return Instance(f"wagner-preston {S_name}", kind, S_name, "eps-subalgebra", alpha)
    if fixed:
        A_name, A = fixed
    else:
        A_name = rng.choice(ALGEBRAS)
        A = algebra_by_name(A_name)
    if kind == "trivial":
        return Instance(f"trivial {S_name} on {A_name}", kind, S_name, A_name, trivial_action(S, A))
    alpha, note = padded_action(rng, S_name, A)
    if fixed is None and A.dim <= 2 and rng.random() < 0.3:
        # second summand with its own support
        B_name = rng.choice([a for a in ALGEBRAS if algebra_by_name(a).dim <= 2])
        beta, note2 = padded_action(rng, S_name, algebra_by_name(B_name))
        alpha = direct_sum_action(alpha, beta)
        A_name = f"{A_name}+{B_name}"
        note = f"{note} (+) {note2}"
    return Instance(f"padded {S_name} on {A_name}: {note}", kind, S_name, A_name, alpha)


def generate_corpus(seed: int = 0, size: int = 50, algebra: str | StructureAlgebra | None = None,
                    label: str | None = None) -> list[Instance]:
    """``size`` valid partial actions drawn deterministically from ``seed``.

    With ``algebra`` set (a built-in name or an associative algebra), every
    instance is a trivial or padded action on that algebra.
    """
    fixed = None
    if isinstance(algebra, str):
        fixed = (algebra, algebra_by_name(algebra))  # fail early on unknown names
    elif algebra is not None:
        if not alg.check_associative(algebra)[0]:
            raise NotAssociative("corpus algebras must be associative")
        fixed = (label or "custom", algebra)
    rng = random.Random(seed)
    out = []
    for i in range(size):
        inst = _draw(rng, fixed)
        out.append(Instance(f"#{i} {inst.name}", inst.kind, inst.semigroup, inst.algebra, inst.action))
    return out
