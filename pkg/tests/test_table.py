import csv
import json
from pathlib import Path

from vknots.laurent import UniLaurent
from vknots.schemas.invariants import ResultRow
from vknots.table import (
    KnotRecord,
    load_table,
    verify_record,
    verify_table,
    write_results,
)

DATA = Path(__file__).resolve().parent.parent / "data" / "knots.txt"


def _write(tmp_path, text):
    path = tmp_path / "table.txt"
    path.write_text(text, encoding="utf-8")
    return path


def test_load_sample_table():
    records = load_table(DATA)
    assert [r.name for r in records] == ["0.1", "3.1", "4.2", "f12"]
    assert records[0].code == ""
    assert records[0].expected_w == UniLaurent()
    assert records[2].expected_v == UniLaurent.parse("2+t^-2-2*t^-1-2*t+t^2")
    assert records[3].expected_v is None
    assert all(r.error is None for r in records)


def test_load_flags_bad_lines(tmp_path):
    path = _write(
        tmp_path,
        "# comment only\n"
        "\n"
        "a O1+U1+ 0\n"
        "a O1+U1+ 0\n"
        "b\n"
        "c O1+U1+ t^^2\n"
        "d O1+U1+ 0 0 0\n",
    )
    records = load_table(path)
    assert [r.name for r in records] == ["a", "a", "b", "c", "d"]
    assert records[0].error is None
    assert records[0].line == 3
    assert records[1].error == "duplicate name"
    assert records[2].error == "missing Gauss code"
    assert records[3].error
    assert records[4].error == "too many fields"


def test_verify_sample_table_with_symmetry_triage():
    report = verify_table(load_table(DATA), workers=1)
    rows = {row.name: row for row in report.rows}
    assert report.ok
    assert rows["0.1"].matched_image == "identity"
    assert rows["3.1"].matched_image == "identity"
    assert rows["3.1"].v_sign == -1
    assert rows["4.2"].matched_image == "switch_all"
    assert rows["4.2"].v_sign == 1
    assert rows["f12"].matched_image == "reverse"
    assert rows["f12"].v_sign is None
    assert rows["f12"].bounds.vc_lower == 4
    assert report.totals == {"ok": 4, "w_mismatch": 0, "v_mismatch": 0, "parse_error": 0}


def test_verify_with_thread_pool_gives_same_rows():
    records = load_table(DATA)
    assert verify_table(records, workers=3).rows == verify_table(records, workers=1).rows


def test_verify_mismatches():
    w_row = verify_record(
        KnotRecord("x", "U1-O2+U3+O1-O3+U2+", expected_w=UniLaurent.parse("t"))
    )
    assert w_row.status == "w_mismatch"
    assert w_row.matched_image is None
    v_row = verify_record(
        KnotRecord(
            "y",
            "O1-O2-U1-U2-O3+O4+U3+U4+",
            expected_w=UniLaurent(),
            expected_v=UniLaurent.parse("1 + t^3"),
        )
    )
    assert v_row.status == "v_mismatch"


def test_verify_reports_parse_errors():
    row = verify_record(KnotRecord("bad", "O1+O1+"))
    assert row.status == "parse_error"
    assert "two O" in row.error
    report = verify_table([KnotRecord("bad", "O1+O1+")], workers=1)
    assert report.totals["parse_error"] == 1
    assert not report.ok


def test_rows_without_expectations_are_ok():
    row = verify_record(KnotRecord("k", "U1-O2+U3+O1-O3+U2+"))
    assert row.status == "ok"
    assert row.w == [[-1, 1], [0, -2], [1, 1]]


def test_write_json_results(tmp_path):
    report = verify_table(load_table(DATA), workers=1)
    out = tmp_path / "results.json"
    write_results(report.rows, "json", out)
    data = json.loads(out.read_text(encoding="utf-8"))
    assert [row["name"] for row in data] == ["0.1", "3.1", "4.2", "f12"]
    assert data[2]["status"] == "ok"
    assert data[2]["w"] == []


def test_write_csv_results(tmp_path):
    report = verify_table(load_table(DATA), workers=1)
    out = tmp_path / "results.csv"
    write_results(report.rows, "csv", out)
    with open(out, newline="", encoding="utf-8") as handle:
        rows = list(csv.DictReader(handle))
    assert rows[0]["name"] == "0.1"
    assert rows[2]["v_rep"] == "-2 - t^-2 + 2*t^-1 + 2*t - t^2"
    assert rows[3]["w"] == "-t^-4 + 2*t^-2 - 2*t^2 + t^4"
    assert json.loads(rows[3]["bounds"])["vc_lower"] == 4


def test_empty_table_and_empty_results(tmp_path):
    assert load_table(_write(tmp_path, "")) == []
    out_json = tmp_path / "empty.json"
    write_results([], "json", out_json)
    assert json.loads(out_json.read_text(encoding="utf-8")) == []
    out_csv = tmp_path / "empty.csv"
    write_results([], "csv", out_csv)
    assert out_csv.read_text(encoding="utf-8").strip() == (
        "name,code,delta0,w,v_rep,bounds,status,matched_image,v_sign"
    )


def test_json_results_reload_as_rows(tmp_path):
    rows = verify_table(load_table(DATA), workers=1).rows
    out = tmp_path / "results.json"
    write_results(rows, "json", out)
    reloaded = [ResultRow.model_validate(item) for item in json.loads(out.read_text())]
    assert reloaded == rows


def test_three_crossing_row_matches_with_negated_v():
    row = verify_record(
        KnotRecord(
            "3.1",
            "O1-O2-U1-O3+U2-U3+",
            expected_w=UniLaurent.parse("1-t^-2+t^-1-t"),
            expected_v=UniLaurent.parse("2-2*t"),
        )
    )
    assert row.status == "ok"
    assert row.matched_image == "identity"
    assert row.v_sign == -1
    assert UniLaurent.from_json(row.v_rep) == UniLaurent.parse("-1 + t^-1 + t - t^-2")
