import json
import subprocess

import pytest

from shiftedschur.cli import parse_yspec, run
from shiftedschur.errors import UsageError
from shiftedschur.polyring import IntSeqWindow, YSpec
from shiftedschur.structconst import dumps_canonical


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---- yspec grammar -------------------------------------------------------------


def test_parse_yspec_grammar():
    assert parse_yspec("symbolic") == YSpec.symbolic()
    assert parse_yspec("zero") == YSpec.zero()
    assert parse_yspec("affine:a=1/2,b=-3") == YSpec.affine("1/2", -3)
    assert parse_yspec("standard:d=-1") == YSpec.standard(-1)
    assert parse_yspec("torus:shift=4") == YSpec.torus(4)
    spec = parse_yspec("circle:d=2,window=-1:5,0,7;tail=1,0")
    assert spec == YSpec.circle(IntSeqWindow(lo=-1, values=(5, 0, 7), tail=(1, 0)), d=2)
    spec = parse_yspec("circle:d=0;tail=1,0")
    assert spec == YSpec.circle(IntSeqWindow(lo=0, values=(), tail=(1, 0)), d=0)


@pytest.mark.parametrize("bad", ["mystery", "standard:q=1", "affine:a=1", "circle:w=3"])
def test_parse_yspec_rejects(bad):
    with pytest.raises(UsageError):
        parse_yspec(bad)


# ---- commands -------------------------------------------------------------------


def test_schur_command(capsys):
    code, out, _ = invoke(capsys, "schur", "--lambda", "1", "--n", "2")
    assert code == 0
    assert out == "-y[1] - y[2] + x1 + x2\n"
    code, out, _ = invoke(
        capsys, "schur", "--lambda", "1", "--n", "2", "--shifted", "--method", "det-ratio"
    )
    assert code == 0
    assert out == "x1 + x2\n"


def test_eval_command(capsys):
    code, out, _ = invoke(capsys, "eval", "--lambda", "1", "--x", "5", "--y", "zero")
    assert code == 0
    assert out == "5\n"


def test_multiply_command_text(capsys):
    code, out, _ = invoke(
        capsys,
        "multiply",
        "--lambda", "1", "--mu", "1", "--y", "standard:d=0", "--n", "3",
        "--format", "text",
    )
    assert code == 0
    assert out == "[1] * [1] -> [1]: u | [2]: 1 | [1,1]: 1\n"


def test_multiply_localize_fallback_on_zero(capsys):
    code, out, err = invoke(
        capsys,
        "multiply",
        "--lambda", "1", "--mu", "1", "--y", "zero", "--n", "3",
        "--method", "localize",
    )
    assert code == 0
    assert "falling back" in err
    assert out == "[1] * [1] -> [2]: 1 | [1,1]: 1\n"


def test_molev_command(capsys):
    code, out, _ = invoke(capsys, "molev", "--lambda", "1", "--mu", "1", "--nu", "1")
    assert code == 0
    assert out == "1\n"


def test_restrict_command(capsys):
    code, out, _ = invoke(
        capsys,
        "restrict",
        "--lambda", "1", "--delta", "1", "--n", "2", "--y", "standard:d=0",
    )
    assert code == 0
    assert out == "u\n"


def test_coproduct_command(capsys):
    code, out, _ = invoke(capsys, "coproduct", "--expr", "p1")
    assert code == 0
    assert out == "(1) (x) (p1) + (p1) (x) (1)\n"


def test_verify_commands(capsys):
    code, out, _ = invoke(
        capsys, "verify", "--suite", "jacobi-trudi", "--max-weight", "2", "--n", "2"
    )
    assert code == 0
    assert out.startswith("PASS (all ")
    code, out, _ = invoke(
        capsys, "verify", "--suite", "primitivity", "--max-k", "2", "--max-l", "3"
    )
    assert code == 0
    assert "k=1 l=2 pass" in out
    assert out.rstrip().endswith("PASS")
    code, out, _ = invoke(capsys, "verify", "--suite", "ring-axioms", "--seed", "7")
    assert code == 0
    code, out, _ = invoke(
        capsys, "verify", "--suite", "denominator", "--n", "3", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_table_json_round_trip(capsys):
    code, out, _ = invoke(
        capsys,
        "table",
        "--max-weight", "1", "--n", "3", "--y", "standard:d=0", "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert dumps_canonical(obj) == out
    assert obj["n"] == 3
    assert obj["yspec"] == {"kind": "standard", "d": 0}
    assert obj["rows"][-1]["terms"][0] == {"nu": [1], "coeff": "u"}


def test_multiply_json(capsys):
    code, out, _ = invoke(
        capsys,
        "multiply",
        "--lambda", "1", "--mu", "1", "--y", "standard:d=0", "--n", "3",
        "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["lambda"] == [1] and obj["mu"] == [1]
    assert {"nu": [1], "coeff": "u"} in obj["terms"]


def test_latex_output(capsys):
    code, out, _ = invoke(
        capsys,
        "multiply",
        "--lambda", "1", "--mu", "1", "--y", "standard:d=0", "--n", "3",
        "--format", "latex",
    )
    assert code == 0
    assert out.startswith("$s^{*}_{(1)} \\cdot s^{*}_{(1)} = ")
    assert "u \\, s^{*}_{(1)}" in out


def test_output_flag(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out, _ = invoke(
        capsys, "molev", "--lambda", "1", "--mu", "1", "--nu", "1",
        "--output", str(target),
    )
    assert code == 0
    assert out == ""
    assert target.read_text() == "1\n"


def test_jobs_byte_identical(tmp_path, capsys):
    paths = []
    for jobs in ("1", "4"):
        p = tmp_path / f"table-{jobs}.json"
        code, _, _ = invoke(
            capsys,
            "table",
            "--max-weight", "1", "--n", "3", "--y", "standard:d=0",
            "--jobs", jobs, "--format", "json", "--output", str(p),
        )
        assert code == 0
        paths.append(p)
    assert paths[0].read_bytes() == paths[1].read_bytes()


# ---- exit codes -----------------------------------------------------------------


def test_usage_errors(capsys):
    code, _, err = invoke(capsys, "multiply", "--lambda", "1", "--mu", "1")
    assert code == 1  # missing --n
    code, _, err = invoke(capsys, "schur", "--lambda", "1,3", "--n", "2")
    assert code == 1
    assert "usage error" in err
    code, _, err = invoke(capsys, "schur", "--lambda", "1", "--n", "2", "--bogus")
    assert code == 1


def test_domain_error_exit_code(capsys):
    code, _, err = invoke(capsys, "schur", "--lambda", "2,1", "--n", "1")
    assert code == 2
    assert "error" in err


def test_verify_failure_exit_code(monkeypatch, capsys):
    import shiftedschur.cli as cli_mod

    class FakeReport:
        passed = False
        seconds = 0.0
        even_rank = odd_rank = 1
        lhs = rhs = "?"

    monkeypatch.setattr(cli_mod, "verify_primitivity", lambda k, l: FakeReport())
    code, out, _ = invoke(
        capsys, "verify", "--suite", "primitivity", "--max-k", "1", "--max-l", "2"
    )
    assert code == 3
    assert "FAIL" in out


def test_console_entry_point():
    proc = subprocess.run(
        ["shiftedschur", "molev", "--lambda", "1", "--mu", "1", "--nu", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1\n"
