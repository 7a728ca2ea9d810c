import io
import json
from pathlib import Path

from vknots.cli import run

DATA = Path(__file__).resolve().parent.parent / "data" / "knots.txt"

FIG3 = "U1-O2+U3+O1-O3+U2+"
KNOT_42 = "O1-O2-U1-U2-O3+O4+U3+U4+"


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_writhe_prints_polynomial_first():
    code, text = _run("writhe", KNOT_42)
    assert code == 0
    assert text.splitlines()[0] == "0"


def test_index_table_output():
    code, text = _run("index", FIG3)
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "chord sign RO RU LO LU Ind"
    assert lines[1] == "1 -1 -1 1 -1 1 0"


def test_json_flag_before_or_after_subcommand():
    for argv in (("--json", "writhe", FIG3), ("writhe", FIG3, "--json")):
        code, text = _run(*argv)
        assert code == 0
        body = json.loads(text)
        assert body["w"]["text"] == "-2 + t^-1 + t"
        assert body["odd_writhe"] == 2


def test_alexander_and_vwrithe():
    code, text = _run("alexander", FIG3)
    assert code == 0
    assert "delta0_bar: 1" in text.splitlines()
    code, text = _run("vwrithe", FIG3)
    assert code == 0
    assert text.splitlines() == ["v_rep: 1 - t", "modulus: -2 + t^-1 + t"]


def test_bounds_output():
    code, text = _run("bounds", KNOT_42)
    assert code == 0
    assert "forbidden_one_excluded: yes" in text.splitlines()


def test_verify_passes_on_small_code():
    code, text = _run("verify", FIG3)
    assert code == 0
    assert "FAIL" not in text


def test_parse_errors_exit_with_two():
    assert _run("writhe", "O1+")[0] == 2
    assert _run("index", "O1+U1-")[0] == 2


def test_usage_errors_exit_with_one():
    assert _run()[0] == 1
    assert _run("nonsense")[0] == 1
    assert _run("mutants")[0] == 1
    assert _run("mutants", "--k", "0")[0] == 1
    assert _run("table", "/no/such/file.txt")[0] == 1


def test_mutants_report():
    code, text = _run("mutants", "--k", "1")
    assert code == 0
    lines = text.splitlines()
    assert "W: -3 + 2*t^-1 + t^2" in lines
    assert "V_K: 8 - 4*t^-1 - t - 3*t^2" in lines
    assert "difference is a multiple of W: False" in lines


def test_moves_script(tmp_path):
    script = tmp_path / "moves.json"
    script.write_text(json.dumps([{"kind": "Ib", "pos": 0}]), encoding="utf-8")
    code, text = _run("--json", "moves", FIG3, "--script", str(script))
    assert code == 0
    body = json.loads(text)
    assert body["moves"] == 1
    assert body["w_delta"] == "0"
    assert body["v_delta"] == "2 - t^-1 - t"


def test_moves_script_rejects_bad_spec(tmp_path):
    script = tmp_path / "moves.json"
    script.write_text(json.dumps({"moves": [{"kind": "IIa", "pos": 0}]}), encoding="utf-8")
    assert _run("moves", FIG3, "--script", str(script))[0] == 1


def test_table_check_and_output(tmp_path):
    out = tmp_path / "results.csv"
    code, text = _run("table", str(DATA), "--check", "--out", str(out))
    assert code == 0
    assert "4.2 ok (switch_all)" in text.splitlines()
    assert "3.1 ok (identity, negated V)" in text.splitlines()
    assert out.read_text(encoding="utf-8").startswith("name,code,delta0")


def test_table_mismatch_exits_with_three(tmp_path):
    table = tmp_path / "t.txt"
    table.write_text(f"fig3 {FIG3} t\n", encoding="utf-8")
    assert _run("table", str(table), "--check")[0] == 3
    assert _run("table", str(table))[0] == 0


def test_table_parse_error_exits_with_two(tmp_path):
    table = tmp_path / "t.txt"
    table.write_text("bad O1+O1+\n", encoding="utf-8")
    assert _run("table", str(table), "--check")[0] == 2


def test_selftest_small_run():
    code, text = _run("--seed", "3", "selftest", "--n", "3", "--trials", "5")
    assert code == 0
    assert text.splitlines()[0] == "trials: 5"
    assert "all checks passed" in text
