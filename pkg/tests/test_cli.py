import csv
import io
import json
import subprocess
import sys

import pytest

from unipotent_sqint.cli import RunConfig, compare, main, render
from unipotent_sqint.nilpotent import parameters
from unipotent_sqint.sqint import verify_case


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_involutions_json_round_trip(capsys):
    code, out, _ = run(capsys, "involutions")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 10
    assert all(r["lift_verified"] for r in rows)
    assert {r["fixed_type"] for r in rows if r["group"] == "E7"} == {"e6+a", "sl8", "so12+sl2"}


def test_parameters_formats(capsys):
    code, out, _ = run(capsys, "parameters", "F4", "--format", "md")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 2 + 4 and lines[0].startswith("| group |")
    code, out, _ = run(capsys, "parameters", "f4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 4 and rows[0]["lambda0"] == "0,0,1,0"
    assert "\r\n" in out


def test_render_escapes_and_missing_values():
    md = render([{"a": None, "b": "x|y"}], "md")
    assert "NA" in md and "x\\|y" in md
    text = render([{"a": [1, 2], "b": 'q"'}], "csv")
    assert list(csv.reader(io.StringIO(text))) == [["a", "b"], ["1,2", 'q"']]
    assert render([], "json") == "[]"


def test_verify_g2(capsys):
    code, out, err = run(capsys, "verify", "G2", "G2(a1)")
    rec = json.loads(out)[0]
    assert code == 0
    assert rec["m"] == -2 and rec["k_bd"] is None and rec["agreement"] == "match"
    assert "block" in err


def test_verify_unsupported_matches_table(capsys):
    code, out, _ = run(capsys, "verify", "E7", "E6(a1)")
    rec = json.loads(out)[0]
    assert code == 0 and not rec["supported"] and rec["m"] is None


def test_usage_errors(capsys):
    assert run(capsys, "verify", "E8", "E8(a7)")[0] == 64       # two fixed subalgebras
    assert run(capsys, "verify", "F4", "F4(zz)")[0] == 64
    assert run(capsys, "parameters", "E9")[0] == 64
    assert run(capsys, "verify", "G2", "G2(a1)", "--workers", "0")[0] == 64
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 64


def test_bad_checkpoint_exit_code(tmp_path, capsys):
    ck = tmp_path / "c.journal"
    ck.write_text("garbage\n")
    code, _, err = run(capsys, "verify", "F4", "F4(a2)", "--checkpoint", str(ck))
    assert code == 74 and "checkpoint" in err


def test_checkpointed_verify(tmp_path, capsys):
    ck = tmp_path / "c.journal"
    first = run(capsys, "verify", "F4", "F4(a3)", "--fixed", "so9", "--checkpoint", str(ck))
    second = run(capsys, "verify", "F4", "F4(a3)", "--fixed", "so9", "--checkpoint", str(ck))
    a, b = json.loads(first[1])[0], json.loads(second[1])[0]
    assert first[0] == second[0] == 0
    assert (a["m"], a["k_bd"]) == (b["m"], b["k_bd"]) == (-6, 1)


def test_compare_states():
    case = parameters("G2")[0]
    v = verify_case(case)
    assert compare(v) == "match"
    v.m = -3
    assert compare(v) == "mismatch"
    v.status = "kmax exhausted"
    assert compare(v) == "soft"


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("verify", fmt="xml")
    with pytest.raises(ValueError):
        RunConfig("verify", kmax=-1)


def test_selftest_subcommand(capsys):
    code, out, _ = run(capsys, "selftest")
    report = json.loads(out)
    assert code == 0 and report["ok"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "unipotent_sqint", "involutions", "G2", "--format", "csv"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.splitlines()[1].startswith("G2,sl2+sl2")
