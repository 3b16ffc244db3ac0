"""grpcensus command line.

Exit codes: 0 success, 1 verify-paper found failing claims, 2 input or
parse error, 3 resource cap, 4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .census import census
from .corpus import default_corpus, load_manifest
from .enumeration import ENUMERATION_CAP, enumerate_groups, identify, scan_deficiency
from .errors import CapExceeded, GroupError, InvalidTable, SpecError
from .spec_lang import build
from .structure import subgroup_lattice
from .tableio import dump_tables
from .verify import run_checks

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4


def census_report(G, label=None) -> dict:
    c = census(G)
    return {
        "label": label if label is not None else (G.label or ""),
        "order": c.group_order,
        "c": {str(k): v for k, v in c.c.items()},
        "pi_e": list(c.pi_e),
        "pi": list(c.pi),
        "pi_c": list(c.pi_c),
        "num_cyclic": c.num_cyclic,
        "delta": c.delta,
        "identity_order_sum": c.identity_order_sum,
        "identity_eq1": c.identity_eq1,
    }


def _csv_text(rows, fields):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_cell(row[k]) for k in fields})
    return buf.getvalue()


def _csv_cell(v):
    if isinstance(v, dict):
        return ";".join(f"{k}:{x}" for k, x in v.items())
    if isinstance(v, (list, tuple)):
        return ";".join(str(x) for x in v)
    return v


def _render_census(rep, fmt):
    if fmt == "json":
        return json.dumps(rep, indent=2)
    if fmt == "csv":
        return _csv_text([rep], list(rep)).rstrip("\n")
    c = ", ".join(f"{k}:{v}" for k, v in rep["c"].items())
    lines = [
        f"group       {rep['label']}",
        f"order       {rep['order']}",
        f"c_k         {c}",
        f"pi_e        {rep['pi_e']}",
        f"pi          {rep['pi']}",
        f"pi_c        {rep['pi_c']}",
        f"|C(G)|      {rep['num_cyclic']}",
        f"delta       {rep['delta']}",
        f"sum c_k phi(k) = |G|          {rep['identity_order_sum']}",
        f"sum c_k (phi(k)-1) = delta    {rep['identity_eq1']}",
    ]
    return "\n".join(lines)


def cmd_census(args) -> int:
    G = build(args.spec)
    print(_render_census(census_report(G), args.format))
    return EXIT_OK


def _corpus_groups(entries, threads):
    def one(entry):
        return entry.line, build(entry.spec)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, entries))
    return [one(e) for e in entries]


def cmd_scan(args) -> int:
    orders = range(args.min, args.max + 1)
    if args.corpus is not None:
        entries = default_corpus() if args.corpus == "" else load_manifest(args.corpus)
        groups = _corpus_groups(entries, args.threads)
        hits = scan_deficiency(orders, args.delta, groups=groups)
    else:
        if args.max > ENUMERATION_CAP:
            raise CapExceeded(f"enumeration capped at order {ENUMERATION_CAP}")
        hits = scan_deficiency(orders, args.delta, allow_large=args.allow_large)
    rows = [{"order": h.order, "name": h.name, "delta": h.delta, "source": h.source}
            for h in hits]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        print(_csv_text(rows, ["order", "name", "delta", "source"]).rstrip("\n"))
    else:
        mode = "corpus" if args.corpus is not None else "enumeration"
        print(f"# groups with delta={args.delta}, orders {args.min}..{args.max} ({mode})")
        for r in rows:
            print(f"{r['order']:>5}  {r['name']:<24} delta={r['delta']}  [{r['source']}]")
        print(f"# {len(rows)} match(es)")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    report = enumerate_groups(args.n, allow_large=args.allow_large)
    if args.tables:
        sys.stdout.write(dump_tables(report.representatives))
        return EXIT_OK
    rows = []
    for k, G in enumerate(report.representatives, start=1):
        rows.append({"label": G.label, "name": identify(G, k), "delta": census(G).delta})
    if args.format == "json":
        print(json.dumps({"order": args.n, "count": report.count, "classes": rows,
                          "stats": report.stats}, indent=2))
    elif args.format == "csv":
        print(_csv_text(rows, ["label", "name", "delta"]).rstrip("\n"))
    else:
        print(f"order {args.n}: {report.count} classes")
        for r in rows:
            print(f"  {r['label']:<8} {r['name']:<24} delta={r['delta']}")
        s = report.stats
        print(f"# nodes={s['nodes']} tables={s['tables_completed']} "
              f"iso_rejections={s['iso_rejections']}")
    return EXIT_OK


def cmd_lattice(args) -> int:
    G = build(args.spec)
    lat = subgroup_lattice(G)
    subs = [{"index": i, "order": H.size, "elements": [int(x) for x in H.indices()]}
            for i, H in enumerate(lat.subgroups)]
    if args.format == "json":
        print(json.dumps({"label": G.label, "order": G.order, "subgroups": subs,
                          "covers": [list(p) for p in lat.inclusion]}, indent=2))
    elif args.format == "csv":
        print(_csv_text(subs, ["index", "order", "elements"]).rstrip("\n"))
    else:
        print(f"{G.label}: {len(subs)} subgroups")
        for s in subs:
            shown = " ".join(map(str, s["elements"][:16]))
            more = " ..." if s["order"] > 16 else ""
            print(f"  [{s['index']:>3}] order {s['order']:>4}: {{{shown}{more}}}")
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    results = run_checks()
    all_ok = all(r.passed for r in results)
    if args.format == "json":
        print(json.dumps({"all_passed": all_ok,
                          "checks": [r.as_dict() for r in results]}, indent=2))
    elif args.format == "csv":
        print(_csv_text([r.as_dict() for r in results],
                        ["name", "passed", "anchor", "detail"]).rstrip("\n"))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<28} {r.detail}")
        print(f"# {sum(r.passed for r in results)}/{len(results)} checks passed")
    return EXIT_OK if all_ok else EXIT_FAILED


def _global_options(parser, suppress):
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--format", choices=("table", "json", "csv"), default=default("table"))
    parser.add_argument("--threads", type=int, default=default(1),
                        help="worker threads for corpus scans")
    parser.add_argument("--seed", type=int, default=default(None),
                        help="reserved; every algorithm is deterministic")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grpcensus", description="Cyclic-subgroup census of finite groups.")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", parents=[common], help="census of one group spec")
    p.add_argument("spec")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("scan", parents=[common], help="find groups with a given deficiency")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--min", type=int, default=1)
    p.add_argument("--delta", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--enumerate", action="store_true",
                      help="scan every isomorphism class (default)")
    mode.add_argument("--corpus", nargs="?", const="", default=None, metavar="FILE",
                      help="scan a manifest (the shipped family corpus if FILE is omitted)")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("enumerate", parents=[common], help="groups of order n up to isomorphism")
    p.add_argument("n", type=int)
    p.add_argument("--tables", action="store_true", help="emit serialized tables")
    p.add_argument("--allow-large", action="store_true",
                   help="permit orders 13..16 (slow at 16)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("lattice", parents=[common], help="subgroup lattice of a group spec")
    p.add_argument("spec")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("verify-paper", parents=[common],
                       help="run every classification check")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvalidTable, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
