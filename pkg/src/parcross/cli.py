"""Command-line front end: one command per construction or verified statement."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Callable

from . import textio
from .action import verify_partial_action
from .corpus import ALGEBRAS, Instance, generate_corpus
from .crossed import build_crossed_product, theorem_1_1_suite
from .errors import AlgebraError, CapExceeded
from .expansion import (COMPLETE, DEFAULT_CAP, enumerate_fp_semigroup, kpar, pr_presentation,
                        theorem_2_7_pipeline, verify_enumeration)
from .partial_rep import (action_from_rep, lemma_2_3_check, phi_hom, rep_from_action, rep_quotient,
                          verify_partial_rep, wagner_preston)
from .report import AxiomReport, jsonable
from .semigroup import verify_inverse_semigroup

PASS, FAIL, CAP = "pass", "fail", "cap_exceeded"
EXIT = {PASS: 0, FAIL: 1, CAP: 1}


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    checks: list[dict] = field(default_factory=list)
    dims: dict[str, Any] = field(default_factory=dict)
    status: str | None = None

    def absorb(self, rep: AxiomReport, prefix: str = "") -> None:
        for c in rep.checks:
            d = c.as_dict()
            d["name"] = prefix + d["name"]
            self.checks.append(d)

    def check(self, name: str, passed: bool, witness: Any = None) -> None:
        d = {"name": name, "verdict": PASS if passed else FAIL}
        if witness is not None:
            d["witness"] = jsonable(witness)
        self.checks.append(d)

    def note(self, name: str, value: bool) -> None:
        # informational fact, never affects status
        self.checks.append({"name": name, "verdict": "true" if value else "false"})

    def final_status(self) -> str:
        if self.status is not None:
            return self.status
        return FAIL if any(c["verdict"] == FAIL for c in self.checks) else PASS

    def as_dict(self) -> dict:
        return {"command": self.command, "status": self.final_status(), "checks": self.checks,
                "dims": jsonable(self.dims)}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"command: {self.command}", f"status: {self.final_status()}"]
        for c in self.checks:
            w = f"  witness={json.dumps(c['witness'])}" if "witness" in c else ""
            lines.append(f"  [{c['verdict']}] {c['name']}{w}")
        if self.dims:
            lines.append("dims:")
            for k, v in self.dims.items():
                lines.append(f"  {k}: {json.dumps(jsonable(v))}")
        return "\n".join(lines) + "\n"


# -- input helpers ----------------------------------------------------------

def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required for {args.command}")


def _semigroup(args):
    _need(args, "semigroup")
    return textio.load_semigroup(args.semigroup)


def _action(args):
    _need(args, "action")
    return textio.read(args.action, textio.parse_action)


def _rep(args):
    """--rep file, or the Wagner-Preston representation of --semigroup."""
    if args.rep is not None:
        return textio.read(args.rep, textio.parse_rep)
    if args.semigroup is not None:
        return wagner_preston(textio.load_semigroup(args.semigroup))
    raise UsageError(f"{args.command} needs --rep or --semigroup")


def _corpus(args) -> list[Instance]:
    if args.algebra is None or args.algebra in ALGEBRAS:
        return generate_corpus(args.seed, args.corpus_size, args.algebra)
    if not os.path.exists(args.algebra):
        raise UsageError(f"--algebra is an algebra file or one of: {', '.join(ALGEBRAS)}")
    A = textio.read(args.algebra, textio.parse_algebra)
    return generate_corpus(args.seed, args.corpus_size, A, os.path.basename(args.algebra))


def _dump(path: str | None, text: str):
    if path:
        with open(path, "w") as fh:
            fh.write(text)


# -- commands ---------------------------------------------------------------

def cmd_verify_semigroup(args, r: Report):
    S = _semigroup(args)
    r.absorb(verify_inverse_semigroup(S.mul, S.unit))
    r.dims["size"] = S.size


def cmd_verify_action(args, r: Report):
    alpha = _action(args)
    r.absorb(verify_partial_action(alpha))
    r.dims.update({"A": alpha.algebra.dim, "X_s": alpha.dims()})


def cmd_crossed_product(args, r: Report):
    alpha = _action(args)
    C = build_crossed_product(alpha)
    r.check("quotient well-defined", True)
    r.check("associative", C.associative, C.assoc_witness)
    r.dims.update(C.dims())
    _dump(args.dump, textio.dump_algebra(C.quotient))


def _thm11_single(alpha, r: Report, which: str, label: str = ""):
    t = theorem_1_1_suite(alpha)
    tag = f" [{label}]" if label else ""
    if which == "1.1":
        for p in t.per_element:
            r.note(f"X_{p['s']} (L,R)-associative{tag}", p["lr_associative"])
        r.note(f"crossed product associative{tag}", t.conclusion)
        r.check(f"Theorem 1.1 implication{tag}", t.implication_ok, None if t.implication_ok else t.witness)
    elif which == "1.2":
        r.note(f"every X_s idempotent or non-degenerate{tag}", t.cor12_hypothesis)
        r.check(f"Corollary 1.2 implication{tag}", t.cor12_ok, None if t.cor12_ok else t.witness)
    else:
        r.note(f"A semiprime{tag}", t.semiprime_A)
        r.check(f"Corollary 1.4 implication{tag}", t.cor14_ok, None if t.cor14_ok else t.witness)
    return t


def _statement(which: str):
    def run(args, r: Report):
        if args.action is not None:
            t = _thm11_single(_action(args), r, which)
            r.dims.update(t.dims)
            return
        insts = _corpus(args)
        for inst in insts:
            _thm11_single(inst.action, r, which, inst.name)
        r.dims.update({"instances": len(insts), "seed": args.seed})
    return run


def cmd_verify_rep(args, r: Report):
    pi = _rep(args)
    r.absorb(verify_partial_rep(pi))
    r.dims["B"] = pi.target.dim


def cmd_lemma_2_1(args, r: Report):
    alpha = _action(args)
    pi, C = rep_from_action(alpha)
    r.absorb(verify_partial_rep(pi), "pi_alpha ")
    r.dims.update(C.dims())


def cmd_lemma_2_3(args, r: Report):
    pi = _rep(args)
    r.absorb(verify_partial_rep(pi))
    r.absorb(lemma_2_3_check(pi))
    r.dims["B"] = pi.target.dim


def cmd_lemma_2_4(args, r: Report):
    pi = _rep(args)
    r.absorb(verify_partial_rep(pi))
    ra = action_from_rep(pi, validate=False)
    alpha = ra.action
    r.absorb(verify_partial_action(alpha), "alpha^pi ")
    S = pi.semigroup
    bad = [s for s in range(S.size)
           if alpha.apply(s, ra.eps[S.inv[s]]) != ra.eps[s]]
    r.check("alpha_s(eps_s*) = eps_s", not bad, bad or None)
    r.dims.update({"B": pi.target.dim, "A": ra.A.dim, "X_s": alpha.dims()})


def cmd_prop_2_5(args, r: Report):
    pi = _rep(args)
    r.absorb(verify_partial_rep(pi))
    rq = rep_quotient(pi)
    r.absorb(verify_partial_rep(rq.pi_tilde), "pi~ ")
    ra = action_from_rep(rq.pi_tilde)
    C = build_crossed_product(ra.action)
    ph = phi_hom(rq, ra, C, strict=False)
    r.absorb(ph.report)
    r.dims.update({"B": pi.target.dim, "J": rq.J.dim, "B/J": rq.quotient.dim, "A": ra.A.dim,
                   "X_s": ra.action.dims(), **C.dims()})


def cmd_build_pr(args, r: Report):
    S = _semigroup(args)
    P = pr_presentation(S)
    E = enumerate_fp_semigroup(P, args.cap)
    r.dims.update({"generators": P.generator_count, "relations": len(P.relations)})
    if E.status != COMPLETE:
        r.status = CAP
        r.dims["cap"] = args.cap
        return
    r.absorb(verify_enumeration(P, E))
    r.dims["Pr(S)"] = E.size
    _dump(args.dump, textio.dump_table(E.mul))


def cmd_build_kpar(args, r: Report):
    S = _semigroup(args)
    try:
        pa = kpar(S, args.cap)
    except CapExceeded:
        r.status = CAP
        r.dims["cap"] = args.cap
        return
    r.absorb(verify_partial_rep(pa.rep()), "iota_S ")
    r.dims.update({"Pr(S)": pa.base.size, "K_par(S)": pa.algebra.dim})
    _dump(args.dump, textio.dump_algebra(pa.algebra))


def cmd_thm_2_7(args, r: Report):
    S = _semigroup(args)
    try:
        t = theorem_2_7_pipeline(S, args.cap, strict=False)
    except CapExceeded:
        r.status = CAP
        r.dims["cap"] = args.cap
        return
    r.absorb(t.checks)
    r.dims.update(t.dims)


def cmd_corpus(args, r: Report):
    insts = _corpus(args)
    for inst in insts:
        t = theorem_1_1_suite(inst.action)
        r.check(f"Theorem 1.1 implication [{inst.name}]", t.implication_ok, None if t.implication_ok else t.witness)
        r.check(f"Corollary 1.2 implication [{inst.name}]", t.cor12_ok)
        r.check(f"Corollary 1.4 implication [{inst.name}]", t.cor14_ok)
    r.dims.update({"instances": len(insts), "seed": args.seed})
    if args.dump:
        _dump(args.dump, "".join(f"{i.name}\n" for i in insts))


COMMANDS: dict[str, Callable] = {
    "verify-semigroup": cmd_verify_semigroup,
    "verify-action": cmd_verify_action,
    "crossed-product": cmd_crossed_product,
    "check-thm-1.1": _statement("1.1"),
    "check-cor-1.2": _statement("1.2"),
    "check-cor-1.4": _statement("1.4"),
    "verify-rep": cmd_verify_rep,
    "check-lemma-2.1": cmd_lemma_2_1,
    "check-lemma-2.3": cmd_lemma_2_3,
    "check-lemma-2.4": cmd_lemma_2_4,
    "check-prop-2.5": cmd_prop_2_5,
    "build-pr": cmd_build_pr,
    "build-kpar": cmd_build_kpar,
    "check-thm-2.7": cmd_thm_2_7,
    "corpus": cmd_corpus,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="parcross", description="Crossed products by partial actions of inverse semigroups.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--semigroup", help="semigroup file or built-in name (cyclic:n, chain:n, sim:n, trivial)")
    p.add_argument("--algebra", help="algebra file or built-in name restricting the corpus")
    p.add_argument("--action", help="partial action file")
    p.add_argument("--rep", help="partial representation file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element cap for Pr(S)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corpus-size", type=int, default=50)
    p.add_argument("--report", help="also write the JSON report to this path")
    p.add_argument("--dump", help="write the constructed object in its text format")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def run(argv: list[str]) -> tuple[Report | None, int, str]:
    """Execute a command; returns (report, exit code, stdout text)."""
    try:
        args = build_parser().parse_args(argv)
        if args.cap < 1 or args.corpus_size < 0:
            raise UsageError("--cap must be >= 1 and --corpus-size >= 0")
        r = Report(" ".join(["parcross", *argv]))
        try:
            COMMANDS[args.command](args, r)
        except (OSError, AlgebraError) as exc:
            r.check("input", False, f"{type(exc).__name__}: {exc}")
    except UsageError as exc:
        return None, 2, f"usage error: {exc}\n"
    out = r.to_json() if args.format == "json" else r.to_text()
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(r.to_json())
    return r, EXIT[r.final_status()], out


def main(argv: list[str] | None = None) -> int:
    r, code, out = run(sys.argv[1:] if argv is None else argv)
    (sys.stderr if r is None else sys.stdout).write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
