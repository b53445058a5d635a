import io
import json
import math
import subprocess
import sys

import pytest

from photon_invariants import cli, jsonio
from photon_invariants.errors import NumericError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run(*argv, "--json")
    return code, [json.loads(line) for line in out.splitlines()]


def test_invariants_json_schema():
    code, (rep,) = run_json("invariants", "|1,1>")
    assert code == 0 and rep["schema"] == 1
    assert set(rep) >= {"n", "d", "norm", "blocks", "moments"}
    assert rep["blocks"][1]["eigenvalues"] == pytest.approx([2, 2])
    assert rep["moments"][1]["projection_bound"] == 6


def test_invariants_builtin_singlet():
    code, (rep,) = run_json("invariants", "@singlet_lr(1.0, 0.5)", "--kmax-block", "1", "--kmax-moment", "2")
    assert code == 0
    assert rep["moments"][1]["value"] == pytest.approx(17 / 2 - math.cos(2) / 2, abs=1e-9)


def test_json_float_format():
    assert jsonio.dumps({"x": 0.1, "y": 1 / 3, "z": 2.0, "w": [1, 1j]}) == (
        '{"x": 0.10000000000000001,"y": 0.33333333333333331,"z": 2.0,"w": [1,[0.0,1.0]]}')
    assert json.loads(jsonio.dumps({"v": 1 / 3}))["v"] == 1 / 3


def test_zero_state_is_error_json():
    code, (rep,) = run_json("invariants", "|1,0> - |1,0>")
    assert code == 2
    assert rep["error"]["kind"] == "parse" and rep["error"]["column"] == 1


def test_parse_error_exit_code_and_message():
    code, out, err = run("invariants", "|1,1> + |2,0,0>")
    assert code == 2 and out == "" and "column 9" in err


def test_capacity_exit_code():
    code, (rep,) = run_json("simulate", "|2,2,2>", "-k", "4")
    assert code == 3 and rep["error"]["kind"] == "capacity"


def test_numeric_exit_code(monkeypatch):
    def broken(_):
        raise NumericError("no convergence", residual=1.0)
    monkeypatch.setattr("photon_invariants.analysis.block_spectrum", broken)
    code, (rep,) = run_json("invariants", "|1,1>")
    assert code == 4 and rep["error"]["residual"] == 1.0


def test_equiv_verdicts():
    code, (v,) = run_json("equiv", "|1,1>", "1/sqrt(2)*|2,0> - 1/sqrt(2)*|0,2>")
    assert code == 0 and v["verdict"] == "CERTIFIED_EQUIVALENT"
    assert len(v["unitary"]) == 2 and len(v["unitary"][0][0]) == 2
    code, (v,) = run_json("equiv", "|1,1>", "|2,0>")
    assert v["verdict"] == "DISTINGUISHED" and v["witness"]["k"] == 1
    code, (v,) = run_json("equiv", "|1,1>", "|1,1,0>")
    assert v["witness"]["invariant"] == "photon count/modes"
    _, out, _ = run("equiv", "|1,1>", "|2,0>")
    assert out.startswith("DISTINGUISHED: block_spectrum k=1")


def test_simulate_exact_and_shots():
    code, (o,) = run_json("simulate", "|1>", "-k", "2")
    assert o["success_probability"] == pytest.approx(0.5)
    assert o["output"]["terms"] == [{"ket": [2], "amplitude": [1.0, 0.0]}]
    code, (o,) = run_json("simulate", "|1>", "-k", "1")
    assert o["success_probability"] == pytest.approx(1)
    code, lines = run_json("simulate", "|1>", "-k", "2", "--shots", "4", "--seed", "1", "--records")
    assert [r["shot"] for r in lines[:4]] == [0, 1, 2, 3]
    assert lines[4]["successes"] == sum(r["success"] for r in lines[:4])


def test_fuse_and_majorana_and_builtin():
    code, (o,) = run_json("fuse", "|1,0>", "|0,1>")
    assert o["success_probability"] == pytest.approx(0.25)
    _, out, _ = run("majorana", "|1,1>")
    pts = [tuple(float(x) for x in line.strip("()").split(",")) for line in out.splitlines()]
    assert sorted(p[0] for p in pts) == pytest.approx([0, math.pi])
    _, out, _ = run("builtin", "hom_target")
    assert out.strip() == "0.707106781187*|2,0> + -0.707106781187*|0,2>"
    code, _, err = run("builtin", "nope")
    assert code == 2 and "unknown builtin" in err


def test_jacobian_rank_command():
    code, (o,) = run_json("jacobian-rank")
    assert code == 0 and o["rank"] == 4 and len(o["singular_values"]) == 4
    code, (o,) = run_json("jacobian-rank", "--kmax-moments", "0", "--kmax-blocks", "1")
    assert o["rank"] < 4


def test_batch_preserves_order(tmp_path):
    lines = ["|2,0>", "|1,1>", "bad", "@hom_target", "|0,2>"] * 4
    path = tmp_path / "batch.txt"
    path.write_text("\n".join(lines) + "\n# comment\n")
    code, out, _ = run("moments", "--batch", str(path), "--json", "--kmax-moment", "2")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 2 and len(records) == len(lines)
    for text, rec in zip(lines, records):
        if text == "bad":
            assert "error" in rec
        else:
            expected = 6 if text in ("|2,0>", "|0,2>") else 4
            assert rec["moments"][1]["value"] == pytest.approx(expected)


def test_normalize_flag():
    _, (rep,) = run_json("invariants", "|1,0> + |0,1>", "--kmax-block", "0", "--kmax-moment", "1")
    assert rep["norm"] == pytest.approx(math.sqrt(2))
    _, (rep,) = run_json("invariants", "|1,0> + |0,1>", "--normalize", "--kmax-block", "0", "--kmax-moment", "1")
    assert rep["norm"] == pytest.approx(1)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "photon_invariants", "invariants", "|1,1>",
                           "--kmax-block", "1", "--kmax-moment", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and "block k=1 (dim 2): [2, 2]" in proc.stdout
