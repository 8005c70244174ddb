"""Plain-text instance formats.

semigroup::

    n 2
    unit 0
    0 1
    1 0

algebra (sparse structure constants, ``i j k c`` means coordinate k of e_i e_j is c)::

    dim 2
    unit 1 0
    0 0 0 1
    0 1 1 1
    1 0 1 1

action (paths relative to the action file; vectors separated by ``;``)::

    semigroup z2.sg
    algebra q.alg
    ideal 0: 1
    map 0: 1
    ideal 1: 1
    map 1: id

representation::

    semigroup z2.sg
    algebra m2.alg
    rep 0: 1 0 0 1

Wherever a file path is expected, a built-in name such as ``cyclic:3``,
``chain:2``, ``sim:2``, ``trivial`` (semigroups) or ``field``,
``fields:2``, ``dual``, ``matrix:2``, ``zero:2``, ``upper:2`` (algebras) is
accepted too.  ``#`` starts a comment.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction

from . import algebra as alg
from . import linalg as la
from . import semigroup as sg
from .action import PartialAction
from .algebra import StructureAlgebra
from .errors import ConsistencyError, NotUnit, ParseError
from .partial_rep import PartialRep, make_rep
from .semigroup import InverseSemigroup

_BUILTIN_SG = {
    "cyclic": sg.cyclic_group,
    "chain": sg.chain_semilattice,
    "sim": sg.symmetric_inverse_monoid,
}
_BUILTIN_ALG = {
    "fields": alg.product_of_fields,
    "matrix": alg.matrix_algebra,
    "zero": alg.zero_algebra,
    "upper": alg.upper_triangular,
}


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _int(tok: str, no: int, col: int, path) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", no, col, path) from None


def _rat(tok: str, no: int, col: int, path) -> Fraction:
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", tok):
        raise ParseError(f"expected a rational p/q, got {tok!r}", no, col, path)
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {tok!r}", no, col, path) from None


def fmt_rat(x) -> str:
    return str(Fraction(x))


# -- semigroups -------------------------------------------------------------

def parse_semigroup(text: str, path=None) -> InverseSemigroup:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty semigroup file", path=path)
    no, first = lines[0]
    toks = first.split()
    if toks[0] != "n" or len(toks) != 2:
        raise ParseError("first line must be 'n <size>'", no, 1, path)
    n = _int(toks[1], no, 3, path)
    if n < 1:
        raise ParseError("size must be positive", no, 3, path)
    rest = lines[1:]
    unit = None
    if rest and rest[0][1].split()[0] == "unit":
        no, line = rest[0]
        toks = line.split()
        if len(toks) != 2:
            raise ParseError("expected 'unit <idx>'", no, 1, path)
        unit = _int(toks[1], no, 6, path)
        if not 0 <= unit < n:
            raise ParseError(f"unit {unit} out of range", no, 6, path)
        rest = rest[1:]
    for no, line in rest:
        key = line.split()[0]
        if not key.lstrip("-").isdigit():
            raise ParseError(f"unknown key {key!r}", no, 1, path)
    if len(rest) != n:
        raise ParseError(f"expected {n} table rows, found {len(rest)}", rest[-1][0] if rest else no, None, path)
    table = []
    for no, line in rest:
        toks = line.split()
        if len(toks) != n:
            raise ParseError(f"row has {len(toks)} entries, expected {n}", no, None, path)
        row = []
        col = 1
        for tok in toks:
            col = line.index(tok, col - 1) + 1
            v = _int(tok, no, col, path)
            if not 0 <= v < n:
                raise ParseError(f"entry {v} out of range 0..{n - 1}", no, col, path)
            row.append(v)
            col += len(tok)
        table.append(row)
    return sg.from_table(table, unit)


def dump_semigroup(S: InverseSemigroup) -> str:
    out = [f"n {S.size}"]
    if S.unit is not None:
        out.append(f"unit {S.unit}")
    out += [" ".join(map(str, row)) for row in S.mul]
    return "\n".join(out) + "\n"


def builtin_semigroup(name: str) -> InverseSemigroup | None:
    if name == "trivial":
        return sg.trivial_semigroup()
    m = re.fullmatch(r"(\w+):(\d+)", name)
    if m and m.group(1) in _BUILTIN_SG:
        return _BUILTIN_SG[m.group(1)](int(m.group(2)))
    return None


def load_semigroup(ref: str, base: str | None = None) -> InverseSemigroup:
    S = builtin_semigroup(ref)
    if S is not None:
        return S
    path = os.path.join(base, ref) if base and not os.path.isabs(ref) else ref
    with open(path) as fh:
        return parse_semigroup(fh.read(), path)


# -- algebras ---------------------------------------------------------------

def parse_algebra(text: str, path=None) -> StructureAlgebra:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty algebra file", path=path)
    no, first = lines[0]
    toks = first.split()
    if toks[0] != "dim" or len(toks) != 2:
        raise ParseError("first line must be 'dim <d>'", no, 1, path)
    d = _int(toks[1], no, 5, path)
    if d < 0:
        raise ParseError("dimension must be nonnegative", no, 5, path)
    unit = None
    consts: dict = {}
    for no, line in lines[1:]:
        toks = line.split()
        if toks[0] == "unit":
            if unit is not None:
                raise ParseError("duplicate unit line", no, 1, path)
            if len(toks) != d + 1:
                raise ParseError(f"unit needs {d} coordinates", no, None, path)
            unit = [_rat(t, no, None, path) for t in toks[1:]]
            continue
        if not toks[0].isdigit():
            raise ParseError(f"unknown key {toks[0]!r}", no, 1, path)
        if len(toks) != 4:
            raise ParseError("expected 'i j k p/q'", no, None, path)
        i, j, k = (_int(t, no, None, path) for t in toks[:3])
        for idx, v in enumerate((i, j, k)):
            if not 0 <= v < d:
                raise ParseError(f"index {v} out of range 0..{d - 1}", no, 2 * idx + 1, path)
        if (i, j, k) in consts:
            raise ParseError(f"duplicate entry for ({i},{j},{k})", no, 1, path)
        consts[(i, j, k)] = _rat(toks[3], no, None, path)
    table = {}
    for (i, j, k), c in consts.items():
        v = table.setdefault((i, j), [0] * d)
        v[k] = c
    try:
        return alg.algebra_from_constants(d, table, unit=unit)
    except NotUnit as exc:
        raise ConsistencyError(f"{path or 'algebra'}: {exc}") from exc


def dump_algebra(A: StructureAlgebra) -> str:
    out = [f"dim {A.dim}"]
    if A.unit is not None:
        out.append("unit " + " ".join(fmt_rat(x) for x in A.unit))
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in A.table[i][j]:
                out.append(f"{i} {j} {k} {fmt_rat(c)}")
    return "\n".join(out) + "\n"


def builtin_algebra(name: str) -> StructureAlgebra | None:
    if name == "field":
        return alg.field()
    if name == "dual":
        return alg.dual_numbers()
    m = re.fullmatch(r"(\w+):(\d+)", name)
    if m and m.group(1) in _BUILTIN_ALG:
        return _BUILTIN_ALG[m.group(1)](int(m.group(2)))
    return None


def load_algebra(ref: str, base: str | None = None) -> StructureAlgebra:
    A = builtin_algebra(ref)
    if A is not None:
        return A
    path = os.path.join(base, ref) if base and not os.path.isabs(ref) else ref
    with open(path) as fh:
        return parse_algebra(fh.read(), path)


# -- actions and representations --------------------------------------------

def _vectors(body: str, width: int, no: int, path) -> list[tuple]:
    body = body.strip()
    if not body:
        return []
    out = []
    for chunk in body.split(";"):
        toks = chunk.split()
        if len(toks) != width:
            raise ConsistencyError(f"{path or 'file'}:{no}: vector {chunk.strip()!r} has {len(toks)} entries, expected {width}")
        out.append(tuple(_rat(t, no, None, path) for t in toks))
    return out


def _header(lines, path, base):
    S = A = None
    rest = []
    for no, line in lines:
        key, _, val = line.partition(" ")
        if key == "semigroup":
            S = load_semigroup(val.strip(), base)
        elif key == "algebra":
            A = load_algebra(val.strip(), base)
        else:
            rest.append((no, line))
    if S is None or A is None:
        raise ParseError("missing 'semigroup' or 'algebra' line", path=path)
    return S, A, rest


def _indexed(line: str, key: str, n: int, no: int, path) -> tuple[int, str]:
    m = re.fullmatch(rf"{key}\s+(\d+)\s*:(.*)", line)
    if not m:
        raise ParseError(f"expected '{key} <s>: ...'", no, 1, path)
    s = int(m.group(1))
    if not 0 <= s < n:
        raise ParseError(f"element {s} out of range", no, len(key) + 2, path)
    return s, m.group(2)


def parse_action(text: str, path=None) -> PartialAction:
    base = os.path.dirname(path) if path else None
    S, A, rest = _header(_lines(text), path, base)
    n = S.size
    bases: dict[int, list] = {}
    user_maps: dict[int, object] = {}
    for no, line in rest:
        key = line.split()[0].rstrip(":")
        if key == "ideal":
            s, body = _indexed(line, "ideal", n, no, path)
            if s in bases:
                raise ParseError(f"duplicate ideal for {s}", no, 1, path)
            bases[s] = _vectors(body, A.dim, no, path)
        elif key == "map":
            s, body = _indexed(line, "map", n, no, path)
            if s in user_maps:
                raise ParseError(f"duplicate map for {s}", no, 1, path)
            user_maps[s] = "id" if body.strip() == "id" else (no, body)
        else:
            raise ParseError(f"unknown key {key!r}", no, 1, path)
    ideals, P = [], []
    for s in range(n):
        vs = bases.get(s, [])
        X = la.span(vs, A.dim)
        if X.dim != len(vs):
            raise ConsistencyError(f"ideal basis for element {s} is linearly dependent")
        ideals.append(X)
        # user coordinates -> echelon coordinates
        P.append(la.columns_to_matrix([X.coords(v) for v in vs], X.dim))
    maps = []
    for s in range(n):
        X, D = ideals[s], ideals[S.inv[s]]
        entry = user_maps.get(s)
        if entry is None:
            if X.dim or D.dim:
                raise ConsistencyError(f"missing map for element {s}")
            maps.append(())
            continue
        if entry == "id":
            if X != D:
                raise ConsistencyError(f"'map {s}: id' needs X_s = X_s*")
            maps.append(la.identity(X.dim))
            continue
        no, body = entry
        rows = _vectors(body, D.dim, no, path)
        if len(rows) != X.dim:
            raise ConsistencyError(f"map for element {s} has {len(rows)} rows, expected {X.dim}")
        Pinv = la.inverse(P[S.inv[s]]) if D.dim else ()
        M = la.matmul(la.matmul(P[s], tuple(rows), cols=D.dim), Pinv, cols=D.dim) if X.dim else ()
        maps.append(M)
    return PartialAction(S, A, tuple(ideals), tuple(maps))


def dump_action(alpha: PartialAction, semigroup_ref: str, algebra_ref: str) -> str:
    out = [f"semigroup {semigroup_ref}", f"algebra {algebra_ref}"]
    for s, X in enumerate(alpha.ideals):
        if X.dim == 0:
            continue
        out.append(f"ideal {s}: " + "; ".join(" ".join(fmt_rat(x) for x in v) for v in X.basis))
        out.append(f"map {s}: " + "; ".join(" ".join(fmt_rat(x) for x in r) for r in alpha.maps[s]))
    return "\n".join(out) + "\n"


def parse_rep(text: str, path=None) -> PartialRep:
    base = os.path.dirname(path) if path else None
    S, B, rest = _header(_lines(text), path, base)
    images: dict[int, tuple] = {}
    for no, line in rest:
        key = line.split()[0].rstrip(":")
        if key != "rep":
            raise ParseError(f"unknown key {key!r}", no, 1, path)
        s, body = _indexed(line, "rep", S.size, no, path)
        if s in images:
            raise ParseError(f"duplicate rep line for {s}", no, 1, path)
        vs = _vectors(body, B.dim, no, path)
        if len(vs) != 1:
            raise ConsistencyError(f"rep {s} needs exactly one vector")
        images[s] = vs[0]
    return make_rep(S, B, [images.get(s, la.zero(B.dim)) for s in range(S.size)])


def dump_rep(pi: PartialRep, semigroup_ref: str, algebra_ref: str) -> str:
    out = [f"semigroup {semigroup_ref}", f"algebra {algebra_ref}"]
    for s, v in enumerate(pi.images):
        out.append(f"rep {s}: " + " ".join(fmt_rat(x) for x in v))
    return "\n".join(out) + "\n"


def read(path: str, parser):
    with open(path) as fh:
        return parser(fh.read(), path)


def dump_table(mul) -> str:
    """A bare multiplication table (e.g. Pr(S)) in the semigroup format."""
    out = [f"n {len(mul)}"] + [" ".join(map(str, row)) for row in mul]
    return "\n".join(out) + "\n"
