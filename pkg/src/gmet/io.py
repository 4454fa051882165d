"""JSON forms of groups, partitions, weights and permutation groups.

Every ``*_to_dict`` output is plain JSON data and reads back through the
matching ``*_from_dict`` to an equal value.  Rationals are written as
"p/q" strings and large integers as decimal strings.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .groups import Group, from_cayley_table
from .metrics import WeightFunction
from .partitions import BlockPartition
from .permgroup import PermGroup


def group_to_dict(G: Group) -> dict:
    """Cayley-table form: {"order", "names", "table"} (plus "label" if set)."""
    out = {"order": G.order, "names": list(G.names), "table": G.table.tolist()}
    if G.label:
        out["label"] = G.label
    return out


def group_from_dict(data: dict) -> Group:
    """Validate and load a Cayley-table dict; the identity is moved to index 0."""
    table = data["table"]
    if "order" in data and int(data["order"]) != len(table):
        raise ValueError(f"stated order {data['order']} differs from table size {len(table)}")
    return from_cayley_table(table, data.get("names"), data.get("label", ""))


def groups_equal(G: Group, H: Group) -> bool:
    """Same table and element names."""
    return G.order == H.order and (G.table == H.table).all() and tuple(G.names) == tuple(H.names)


def partition_to_dict(P: BlockPartition) -> dict:
    return {"blocks": [list(b) for b in P.blocks]}


def partition_from_dict(data: dict, n: int | None = None) -> BlockPartition:
    """Read blocks in any order and re-canonicalize them."""
    blocks = data["blocks"] if isinstance(data, dict) else data
    return BlockPartition.from_blocks(blocks, n)


def format_fraction(v: Fraction) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_fraction(text) -> Fraction:
    return Fraction(text) if isinstance(text, (str, int)) else Fraction(str(text))


def weight_to_dict(w: WeightFunction, group_spec: str | None = None) -> dict:
    """{"group": spec string or inline table, "values": ["p/q", ...]}."""
    return {
        "group": group_spec if group_spec is not None else group_to_dict(w.group),
        "values": [format_fraction(v) for v in w.values],
    }


def weight_from_dict(data: dict, base_dir: str | Path | None = None) -> WeightFunction:
    from .spec import build_group

    group = data["group"]
    G = build_group(group, base_dir) if isinstance(group, str) else group_from_dict(group)
    return WeightFunction(G, tuple(parse_fraction(v) for v in data["values"]))


def perm_group_to_dict(P: PermGroup) -> dict:
    return P.to_dict()


def perm_group_from_dict(data: dict) -> PermGroup:
    return PermGroup.from_dict(data)


def dumps(data: Any) -> str:
    """Deterministic compact JSON text."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def load_json(path: str | Path) -> Any:
    with open(path) as fh:
        return json.load(fh)


def save_json(path: str | Path, data: Any) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, sort_keys=True, indent=1)
        fh.write("\n")
