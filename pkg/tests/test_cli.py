import json
import os
import subprocess
import sys

import pytest

from parcross import textio
from parcross.cli import main, run

DATA = os.path.normpath(os.path.join(os.path.dirname(__file__), os.pardir, "data"))


def data(name):
    return os.path.join(DATA, name)


def verdicts(r):
    return [c["verdict"] for c in r.checks]


def test_thm_2_7_on_z2_file():
    r, code, out = run(["check-thm-2.7", "--semigroup", data("z2.sg")])
    assert code == 0 and r.final_status() == "pass"
    assert r.dims["A x S"] == r.dims["K_par/J"] == 3
    assert "status: pass" in out


def test_cor_1_4_matrix_corpus():
    r, code, _ = run(["check-cor-1.4", "--algebra", "matrix:2", "--corpus-size", "20", "--seed", "7"])
    assert code == 0
    assert r.dims["instances"] == 20
    assert verdicts(r).count("pass") == 20 and "fail" not in verdicts(r)


def test_cor_1_4_algebra_file_matches_builtin():
    r, code, _ = run(["check-cor-1.4", "--algebra", data("m2.alg"), "--corpus-size", "20", "--seed", "7"])
    assert code == 0 and verdicts(r).count("pass") == 20
    builtin, _, _ = run(["check-cor-1.4", "--algebra", "matrix:2", "--corpus-size", "20", "--seed", "7"])
    # same draws, only the algebra label in the instance names differs
    assert [c["verdict"] for c in r.checks] == [c["verdict"] for c in builtin.checks]
    assert all("m2.alg" in c["name"] for c in r.checks if c["verdict"] == "pass")


def test_build_pr_cap_exceeded():
    r, code, out = run(["build-pr", "--semigroup", data("z2.sg"), "--cap", "1"])
    assert code == 1 and r.final_status() == "cap_exceeded"
    assert "status: cap_exceeded" in out


@pytest.mark.parametrize("argv", [
    [],
    ["no-such-command"],
    ["build-pr"],
    ["check-lemma-2.1"],
    ["verify-rep"],
    ["corpus", "--algebra", "nonsense"],
    ["build-pr", "--semigroup", "cyclic:2", "--cap", "0"],
    ["corpus", "--format", "xml"],
])
def test_usage_errors_exit_2(argv):
    r, code, out = run(argv)
    assert r is None and code == 2 and out.startswith("usage error")


def test_report_file_schema(tmp_path):
    path = tmp_path / "r.json"
    _, code, out = run(["verify-semigroup", "--semigroup", "sim:2", "--report", str(path), "--format", "json"])
    assert code == 0
    d = json.loads(path.read_text())
    assert set(d) == {"command", "status", "checks", "dims"}
    assert d["status"] == "pass" and d["command"].startswith("parcross verify-semigroup")
    assert all(set(c) <= {"name", "verdict", "witness"} for c in d["checks"])
    assert json.loads(out) == d


@pytest.mark.parametrize("argv, dims", [
    (["verify-semigroup", "--semigroup", "chain:3"], {}),
    (["verify-action", "--action", data("z2_trivial.act")], {}),
    (["crossed-product", "--action", data("z2_trivial.act")], {}),
    (["check-thm-1.1", "--action", data("z2_trivial.act")], {}),
    (["check-cor-1.2", "--corpus-size", "5"], {"instances": 5}),
    (["check-thm-1.1", "--corpus-size", "5", "--seed", "2"], {"instances": 5, "seed": 2}),
    (["verify-rep", "--rep", data("z2_swap.rep")], {"B": 4}),
    (["check-lemma-2.1", "--action", data("z2_trivial.act")], {}),
    (["check-lemma-2.3", "--rep", data("z2_swap.rep")], {"B": 4}),
    (["check-lemma-2.4", "--rep", data("z2_swap.rep")], {"B": 4}),
    (["check-prop-2.5", "--semigroup", "sim:2"], {"B": 49, "B/J": 0}),
    (["check-prop-2.5", "--rep", data("z2_swap.rep")], {"B": 4}),
    (["build-pr", "--semigroup", "sim:2"], {"Pr(S)": 10}),
    (["build-kpar", "--semigroup", "chain:2"], {"Pr(S)": 2, "K_par(S)": 2}),
    (["corpus", "--corpus-size", "5"], {"instances": 5}),
])
def test_every_command_passes(argv, dims):
    r, code, _ = run(argv)
    assert code == 0, r.to_text()
    for k, v in dims.items():
        assert r.dims[k] == v


def test_failing_action_file(tmp_path):
    bad = tmp_path / "neg.act"
    bad.write_text("semigroup cyclic:2\nalgebra field\nideal 0: 1\nmap 0: id\nideal 1: 1\nmap 1: -1\n")
    r, code, out = run(["verify-action", "--action", str(bad)])
    assert code == 1 and "fail" in verdicts(r)
    fails = [c for c in r.checks if c["verdict"] == "fail"]
    assert any(c["name"] == "multiplicative" and "witness" in c for c in fails)


def test_failing_rep_file(tmp_path):
    bad = tmp_path / "bad.rep"
    bad.write_text("semigroup cyclic:2\nalgebra matrix:2\nrep 0: 1 0 0 1\nrep 1: 1 1 0 1\n")
    r, code, _ = run(["verify-rep", "--rep", str(bad)])
    assert code == 1


def test_input_errors_are_reported(tmp_path):
    r, code, out = run(["verify-semigroup", "--semigroup", str(tmp_path / "missing.sg"), "--format", "json"])
    assert code == 1 and json.loads(out)["checks"][0]["name"] == "input"
    broken = tmp_path / "b.sg"
    broken.write_text("n 2\n0 1\n1 7\n")
    r, code, _ = run(["verify-semigroup", "--semigroup", str(broken)])
    assert code == 1 and ":3:3:" in r.checks[0]["witness"]


def test_dumps(tmp_path):
    pr = tmp_path / "pr.sg"
    run(["build-pr", "--semigroup", "cyclic:2", "--dump", str(pr)])
    assert textio.parse_semigroup(pr.read_text()).size == 3
    kp = tmp_path / "kpar.alg"
    run(["build-kpar", "--semigroup", "cyclic:2", "--dump", str(kp)])
    assert textio.parse_algebra(kp.read_text()).dim == 3
    q = tmp_path / "q.alg"
    r, code, _ = run(["crossed-product", "--action", data("z2_trivial.act"), "--dump", str(q)])
    assert code == 0 and textio.parse_algebra(q.read_text()).dim == 2
    names = tmp_path / "names.txt"
    run(["corpus", "--corpus-size", "3", "--dump", str(names)])
    assert len(names.read_text().splitlines()) == 3


def test_main_writes_streams(capsys):
    assert main(["verify-semigroup", "--semigroup", "cyclic:3"]) == 0
    assert "status: pass" in capsys.readouterr().out
    assert main(["bogus"]) == 2
    assert "usage error" in capsys.readouterr().err


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "parcross", "verify-semigroup", "--semigroup", "trivial"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and "status: pass" in p.stdout
