import csv
import io
import json

from gmet import cli
from gmet.io import group_to_dict, save_json
from gmet.spec import build_group
from gmet.tables import load_expected, mismatches, run_tables, to_csv, to_json


def test_expected_rows_are_complete():
    rows = load_expected()
    assert [r.row for r in rows] == list(range(1, 145))
    assert all(r.order <= 32 for r in rows)
    for r in rows:
        if r.spec:
            assert r.kstar <= r.k


def test_small_orders_match_and_are_deterministic():
    rows = run_tables(max_order=12)
    assert not mismatches(rows)
    assert all(r.result == "match" for r in rows)
    assert to_csv(rows) == to_csv(run_tables(max_order=12))
    data = json.loads(to_json(rows))
    assert data[0]["spec"] == "C1" and data[0]["k"] == 0


def test_wrong_expected_value_is_reported(tmp_path, capsys):
    fields = ["row", "order", "gap_id", "name", "spec", "k", "kstar", "b", "d", "comment", "note"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for r in load_expected():
        rec = {f: getattr(r, f) for f in fields}
        if r.row == 13:
            rec["k"] = 7  # D4 has k = 6
        writer.writerow([rec[f] for f in fields])
    bad = tmp_path / "bad.csv"
    bad.write_text(buf.getvalue())
    code = cli.main(["tables", "--max-order", "8", "--expected", str(bad)])
    err = capsys.readouterr().err
    assert code == cli.EXIT_MISMATCH
    assert "row 13 (D4" in err and "k=6" in err and "expected k=7" in err


def test_data_dir_fills_skipped_rows(tmp_path, capsys):
    # row 115 has no built-in construction; supply any order-32 table for it
    save_json(tmp_path / "row115.json", group_to_dict(build_group("D16")))
    save_json(tmp_path / "extra.json", {**group_to_dict(build_group("S3")), "label": "S3 copy"})
    rows = run_tables(max_order=32, data_dir=tmp_path)
    r115 = next(r for r in rows if r.row == 115)
    assert r115.status == "loaded" and r115.result in ("match", "mismatch")
    extra = [r for r in rows if r.row is None]
    assert len(extra) == 1 and extra[0].name == "S3 copy" and extra[0].result == "unchecked"


def test_tables_command_writes_output(tmp_path, capsys):
    out = tmp_path / "t.csv"
    code = cli.main(["tables", "--max-order", "8", "--output", str(out)])
    assert code == cli.EXIT_OK
    lines = out.read_text().splitlines()
    assert len(lines) == 15 and lines[0].startswith("row,spec,name")
