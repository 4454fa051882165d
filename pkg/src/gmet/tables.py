"""Reproduce the Bell-index listing of all groups of order at most 32.

Expected values live in ``data/expected_tables.csv``; every row with a
construction is built and its (k, k*) compared against the listed
indices.  Rows without a construction are reported as skipped unless a
Cayley-table file for them is supplied in a data directory.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable

from .counting import bi_invariance_degree, commutativity_degree
from .groups import Group
from .io import format_fraction, group_from_dict, load_json
from .partitions import bell, k_bi_invariant, k_invariant
from .spec import build_group

DEFAULT_MAX_ORDER = 32


@dataclass(frozen=True)
class ExpectedRow:
    row: int
    order: int
    gap_id: int
    name: str
    spec: str
    k: int
    kstar: int
    b: Fraction
    d: Fraction
    comment: str
    note: str


@dataclass
class TableRow:
    row: int | None
    spec: str
    name: str
    order: int
    status: str  # constructed, loaded or skipped
    k: int | None = None
    kstar: int | None = None
    M: str = ""
    Mstar: str = ""
    b: str = ""
    d: str = ""
    comment: str = ""
    expected_k: int | None = None
    expected_kstar: int | None = None
    result: str = ""  # match, mismatch, unchecked or skipped
    reason: str = ""

    @property
    def sort_key(self):
        return (self.order, self.spec or self.name, self.row or 0)


def _rows_from_text(text: str) -> list[ExpectedRow]:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    out = []
    for rec in csv.DictReader(lines):
        out.append(ExpectedRow(
            row=int(rec["row"]), order=int(rec["order"]), gap_id=int(rec["gap_id"]),
            name=rec["name"], spec=rec["spec"].strip(), k=int(rec["k"]), kstar=int(rec["kstar"]),
            b=Fraction(rec["b"]), d=Fraction(rec["d"]), comment=rec["comment"], note=rec["note"],
        ))
    return out


def load_expected(path: str | Path | None = None) -> list[ExpectedRow]:
    """The bundled expected rows, or those of another file in the same format."""
    if path is None:
        text = resources.files("gmet").joinpath("data/expected_tables.csv").read_text()
    else:
        text = Path(path).read_text()
    return _rows_from_text(text)


def _measure(G: Group, out: TableRow) -> None:
    out.k = k_invariant(G)
    out.kstar = k_bi_invariant(G)
    out.M = str(bell(out.k))
    out.Mstar = str(bell(out.kstar))
    out.b = format_fraction(bi_invariance_degree(G))
    out.d = format_fraction(commutativity_degree(G))


def _compare(out: TableRow) -> None:
    if out.expected_k is None:
        out.result = "unchecked"
    elif (out.k, out.kstar) == (out.expected_k, out.expected_kstar):
        out.result = "match"
    else:
        out.result = "mismatch"


def _data_files(data_dir: str | Path | None) -> list[tuple[Path, dict]]:
    if data_dir is None:
        return []
    files = []
    for path in sorted(Path(data_dir).glob("*.json")):
        files.append((path, load_json(path)))
    return files


def _row_of_file(path: Path, data: dict) -> int | None:
    if "row" in data:
        return int(data["row"])
    stem = path.stem
    if stem.startswith("row") and stem[3:].isdigit():
        return int(stem[3:])
    return None


class ConstructionError(Exception):
    """A listed construction failed to build or a data file failed to load."""


def run_tables(max_order: int = DEFAULT_MAX_ORDER, data_dir: str | Path | None = None,
               expected: Iterable[ExpectedRow] | None = None) -> list[TableRow]:
    """Build, measure and compare every row of order at most ``max_order``.

    Raises ConstructionError when a listed spec or a supplied file cannot be
    turned into a group.
    """
    expected = list(load_expected() if expected is None else expected)
    by_row = {e.row: e for e in expected}
    files = _data_files(data_dir)
    supplied: dict[int, tuple[Path, dict]] = {}
    extra: list[tuple[Path, dict]] = []
    for path, data in files:
        r = _row_of_file(path, data)
        if r is not None and r in by_row:
            supplied[r] = (path, data)
        else:
            extra.append((path, data))

    out: list[TableRow] = []
    for e in expected:
        if e.order > max_order:
            continue
        row = TableRow(row=e.row, spec=e.spec, name=e.name, order=e.order, status="skipped",
                       comment=e.comment, expected_k=e.k, expected_kstar=e.kstar)
        try:
            if e.row in supplied:
                path, data = supplied[e.row]
                G = group_from_dict(data)
                row.status = "loaded"
                row.spec = row.spec or f"file:{path.name}"
            elif e.spec:
                G = build_group(e.spec)
                row.status = "constructed"
            else:
                row.result = "skipped"
                row.reason = e.note or "no construction available"
                out.append(row)
                continue
        except Exception as exc:  # report which row failed, then stop
            raise ConstructionError(f"row {e.row} ({e.name}): {exc}") from exc
        if G.order != e.order:
            raise ConstructionError(f"row {e.row} ({e.name}): built a group of order {G.order}, "
                                    f"expected {e.order}")
        _measure(G, row)
        _compare(row)
        out.append(row)

    for path, data in extra:
        try:
            G = group_from_dict(data)
        except Exception as exc:
            raise ConstructionError(f"{path}: {exc}") from exc
        if G.order > max_order:
            continue
        row = TableRow(row=None, spec=f"file:{path.name}", name=data.get("label", path.stem),
                       order=G.order, status="loaded")
        _measure(G, row)
        _compare(row)
        out.append(row)
    out.sort(key=lambda r: r.sort_key)
    return out


COLUMNS = ["row", "spec", "name", "order", "status", "k", "kstar", "M", "Mstar", "b", "d",
           "expected_k", "expected_kstar", "result", "reason", "comment"]


def to_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        rec = asdict(r)
        writer.writerow({c: "" if rec[c] is None else rec[c] for c in COLUMNS})
    return buf.getvalue()


def to_json(rows: list[TableRow]) -> str:
    return json.dumps([{c: asdict(r)[c] for c in COLUMNS} for r in rows], indent=1) + "\n"


def mismatches(rows: list[TableRow]) -> list[str]:
    """One line per failed comparison, naming the row."""
    msgs = []
    for r in rows:
        if r.result == "mismatch":
            msgs.append(f"row {r.row} ({r.name}, {r.spec}): computed k={r.k}, k*={r.kstar}; "
                        f"expected k={r.expected_k}, k*={r.expected_kstar}")
    return msgs
