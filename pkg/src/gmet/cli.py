"""The ``gmet`` command line.

Exit status: 0 when everything succeeded (and every table comparison
matched), 1 on a table mismatch, 2 on a parse or construction error.
"""
from __future__ import annotations

import argparse
import json
import sys
from itertools import islice
from pathlib import Path

from .errors import GmetError
from .groups import Group, involution_count
from .io import dumps, format_fraction, partition_from_dict, partition_to_dict
from .metrics import weight_from_partition
from .partitions import (
    DEFAULT_ENUMERATION_CAP,
    BlockPartition,
    bell,
    count_bi_invariant_metrics,
    count_invariant_metrics,
    enumerate_conjugate_partitions,
    enumerate_unitary_symmetric_partitions,
    finest_conjugate_partition,
    hamming_partition,
    k_bi_invariant,
    k_invariant,
    lee_partition,
)
from .counting import bi_invariance_degree, commutativity_degree
from .spec import build_group, display_name
from .symmetry import distance_graph, export_dot, identify_group, symmetry_group
from .tables import ConstructionError, load_expected, mismatches, run_tables, to_csv, to_json

EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2


def info_report(G: Group) -> dict:
    k, kstar = k_invariant(G), k_bi_invariant(G)
    return {
        "spec": G.label,
        "order": G.order,
        "abelian": G.is_abelian,
        "k2": involution_count(G),
        "c": G.conjugacy.count,
        "c2": G.conjugacy.real_count,
        "k": k,
        "kstar": kstar,
        "M": str(count_invariant_metrics(G)),
        "Mstar": str(count_bi_invariant_metrics(G)),
        "b": format_fraction(bi_invariance_degree(G)),
        "d": format_fraction(commutativity_degree(G)),
    }


def cmd_info(args) -> int:
    G = build_group(args.spec)
    print(json.dumps(info_report(G), indent=1))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    G = build_group(args.spec)
    cap = args.cap
    source = (enumerate_conjugate_partitions(G, cap) if args.kind == "conjugate"
              else enumerate_unitary_symmetric_partitions(G, cap))
    for i, P in enumerate(islice(source, args.limit), start=1):
        rec = {"index": i, **partition_to_dict(P)}
        if args.kind == "metrics":
            rec["weight"] = [format_fraction(v) for v in weight_from_partition(G, P).values]
        print(dumps(rec))
    return EXIT_OK


def select_partition(G: Group, selector: str, cap: int | None = DEFAULT_ENUMERATION_CAP) -> BlockPartition:
    """Resolve a partition selector.

    ``<i>`` is the i-th (1-based) unitary symmetric partition in
    enumeration order and ``c<i>`` the i-th conjugate one; ``ham``, ``lee``
    and ``clee`` name the coarsest, the finest and the finest conjugate
    partition; inline JSON or a path is read as partition JSON.
    """
    text = selector.strip()
    named = {"ham": hamming_partition, "lee": lee_partition, "clee": finest_conjugate_partition}
    if text.lower() in named:
        return named[text.lower()](G)
    if text.isdigit() or (text[:1] in "cC" and text[1:].isdigit()):
        conjugate = not text.isdigit()
        index = int(text[1:] if conjugate else text)
        source = (enumerate_conjugate_partitions(G, cap) if conjugate
                  else enumerate_unitary_symmetric_partitions(G, cap))
        if index < 1:
            raise ValueError("partition indices start at 1")
        found = next(islice(source, index - 1, None), None)
        if found is None:
            raise ValueError(f"there is no partition number {index}")
        return found
    if text[:1] in "[{":
        data = json.loads(text)
    else:
        data = json.loads(Path(text).read_text())
    return partition_from_dict(data, G.order)


def cmd_symmetry(args) -> int:
    G = build_group(args.spec)
    P = select_partition(G, args.partition)
    Gamma = symmetry_group(G, P)
    report = {"spec": G.label, "partition": partition_to_dict(P)["blocks"],
              "order": str(Gamma.order), "generators": [list(g) for g in Gamma.generators]}
    try:
        match = identify_group(Gamma)
    except GmetError:
        match = None
    report["identified"] = match
    report["name"] = display_name(match) if match else None
    print(json.dumps(report, indent=1))
    if args.dot:
        Path(args.dot).write_text(export_dot(distance_graph(G, P), G.names))
    return EXIT_OK


def cmd_tables(args) -> int:
    expected = load_expected(args.expected) if args.expected else None
    rows = run_tables(args.max_order, args.data_dir, expected)
    text = to_csv(rows) if args.format == "csv" else to_json(rows)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    problems = mismatches(rows)
    for msg in problems:
        print(f"mismatch: {msg}", file=sys.stderr)
    return EXIT_MISMATCH if problems else EXIT_OK


def cmd_bell(args) -> int:
    print(bell(args.k))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gmet", description="Invariant metrics on finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="group invariants and metric counts")
    p.add_argument("spec")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("enumerate", help="list unitary symmetric or conjugate partitions")
    p.add_argument("spec")
    p.add_argument("--kind", choices=["partitions", "conjugate", "metrics"], default="partitions")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                   help="largest number of blocks to merge (default %(default)s)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("symmetry", help="isometry group of the metrics inducing a partition")
    p.add_argument("spec")
    p.add_argument("--partition", required=True,
                   help="index, c<index>, ham, lee, clee, inline JSON or a partition file")
    p.add_argument("--dot", help="write the colored distance graph in Graphviz format")
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("tables", help="reproduce the Bell indices of all groups up to order 32")
    p.add_argument("--max-order", type=int, default=32)
    p.add_argument("--data-dir", help="directory of Cayley-table JSON files")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--expected", help="alternative expected-values CSV")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("bell", help="print the Bell number B_k")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_bell)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GmetError, ConstructionError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"gmet: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
