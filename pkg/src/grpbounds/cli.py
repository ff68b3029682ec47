"""Command line front end.

Four subcommands: `info` reports one group in full, `scan` tabulates a
whole catalog (in parallel), `verify-paper` runs the built-in claim
table against the shipped fixtures, and `construct` emits new catalog
records from the standard constructors.

Exit codes: 0 success, 1 claim failure, 2 input error.  All output is
deterministic: sorted JSON keys, catalog order preserved under any
worker count, no timestamps in data rows.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import build
from .catalog import (CatalogError, from_group, parse_catalog, record_line,
                      to_group)
from .claims import evaluate_record, run_claims
from .group import ClosureOverflow, DEFAULT_CAP
from .invariants import report
from .rsearch import DEFAULT_RULES, r_prime, r_value

CSV_HEADER = "id,order,class,nilpotent,exp,ge,r,rprime,r_gt_ge,rprime_gt_ge"

FIXTURE_FILES = ("orders-1-63.jsonl", "order-243.jsonl", "extras.jsonl")


def _fail(msg):
    print("error: %s" % msg, file=sys.stderr)
    return 2


def _resolve_rules(name):
    return DEFAULT_RULES if name == "default" else ()


def _load_catalog(path):
    return parse_catalog(path)


def _witness_json(w):
    steps = []
    for n, nxt, e in w.steps:
        steps.append({
            "normal_order": n.members.bit_count(),
            "normal_exponent": e,
            "next_order": nxt.members.bit_count(),
        })
    return {
        "value": w.value,
        "steps": steps,
        "rules": [{"step": d, "rule": nm, "bound": b}
                  for d, nm, b in w.rule_uses],
    }


def cmd_info(args):
    try:
        records = _load_catalog(args.catalog)
    except (OSError, CatalogError) as e:
        return _fail(e)
    rec = next((r for r in records if r.id == args.id), None)
    if rec is None:
        return _fail("no record %r in %s" % (args.id, args.catalog))
    g = to_group(rec)
    rep = report(g)
    out = {
        "id": rec.id,
        "order": rep.order,
        "degree": rec.degree,
        "tags": list(rec.tags),
        "exponent": rep.exponent,
        "generator_exponent": rep.generator_exponent,
        "nilpotent": rep.is_nilpotent,
        "class": rep.nilpotency_class,
        "solvable": rep.is_solvable,
        "prime": rep.prime,
        "regular": rep.is_regular,
        "exponent_derived": rep.exp_derived,
        "r": None,
        "rprime": None,
    }
    if rep.is_solvable:
        rules = _resolve_rules(args.rules)
        rv, rw = r_value(g)
        pv, pw = r_prime(g, rules)
        out["r"] = rv
        out["rprime"] = pv
        if not args.no_witness:
            out["r_witness"] = _witness_json(rw)
            out["rprime_witness"] = _witness_json(pw)
    text = json.dumps(out, sort_keys=True, indent=2)
    _emit(args.out, text + "\n")
    return 0


def _scan_one(packed):
    rec, rules_name = packed
    return evaluate_record(rec, _resolve_rules(rules_name))


def _emit(out_path, text):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def cmd_scan(args):
    try:
        records = _load_catalog(args.catalog)
    except (OSError, CatalogError) as e:
        return _fail(e)
    records = [r for r in records
               if args.max_order is None or r.order <= args.max_order]
    if args.nilpotent_only:
        records = [r for r in records if "nilpotent" in r.tags]
    work = [(r, args.rules) for r in records]
    if args.jobs == 1 or len(work) < 2:
        rows = [_scan_one(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_scan_one, work, chunksize=4))
    if args.klass is not None:
        rows = [row for row in rows if row["class"] == args.klass]
    if args.format == "json":
        text = json.dumps(rows, sort_keys=True, indent=2) + "\n"
    else:
        lines = [CSV_HEADER]
        for row in rows:
            lines.append(",".join(_csv_cell(row[k])
                                  for k in CSV_HEADER.split(",")))
        text = "\n".join(lines) + "\n"
    _emit(args.out, text)
    return 0


def cmd_verify_paper(args):
    records = []
    for name in FIXTURE_FILES:
        path = os.path.join(args.catalog_dir, name)
        if not os.path.exists(path):
            return _fail("missing fixture file %s" % path)
        try:
            records.extend(parse_catalog(path))
        except (OSError, CatalogError) as e:
            return _fail(e)
    results = run_claims(records)
    width = max(len(r.description) for r in results)
    for r in results:
        print("%s %-*s  %s  (%.1fs)" % (
            "pass" if r.ok else "FAIL", width, r.description,
            r.claim, r.seconds))
        print("     expected: %s" % r.expected)
        print("     computed: %s" % r.computed)
    bad = [r for r in results if not r.ok]
    print("%d/%d claims pass" % (len(results) - len(bad), len(results)))
    return 1 if bad else 0


def _operand(tok, records):
    """A constructor operand: C<n>, D<n>, or a catalog record id."""
    if tok and tok[0] in "cC" and tok[1:].isdigit():
        return build.cyclic(int(tok[1:]))
    if tok and tok[0] in "dD" and tok[1:].isdigit():
        return build.dihedral(int(tok[1:]))
    rec = next((r for r in records if r.id == tok), None)
    if rec is None:
        raise CatalogError("operand %r is neither C<n>, D<n>, nor a "
                           "catalog id" % tok)
    return to_group(rec)


def cmd_construct(args):
    kind = args.kind
    params = args.params
    need = {"cyclic": 1, "dihedral": 1, "elemabelian": 2,
            "direct": 2, "wreath": 2}
    if kind not in need:
        return _fail("unknown kind %r" % kind)
    if len(params) != need[kind]:
        return _fail("%s takes %d parameter(s)" % (kind, need[kind]))
    records = []
    if kind in ("direct", "wreath") and args.catalog:
        try:
            records = _load_catalog(args.catalog)
        except (OSError, CatalogError) as e:
            return _fail(e)
    try:
        if kind == "cyclic":
            g = build.cyclic(int(params[0]))
        elif kind == "dihedral":
            g = build.dihedral(int(params[0]))
        elif kind == "elemabelian":
            g = build.elementary_abelian(int(params[0]), int(params[1]))
        else:
            a = _operand(params[0], records)
            b = _operand(params[1], records)
            predicted = a.order * b.order if kind == "direct" \
                else a.order ** b.degree * b.order
            if predicted > args.cap:
                return _fail("predicted order %d exceeds cap %d"
                             % (predicted, args.cap))
            g = build.direct_product(a, b) if kind == "direct" \
                else build.wreath(a, b)
    except (ValueError, CatalogError, ClosureOverflow) as e:
        return _fail(e)
    slug = "-".join([kind] + [p.lower().replace(".", "-") for p in params])
    rec = from_group("%d.%s" % (g.order, slug), g, source="constructed")
    line = record_line(rec)
    if args.out:
        with open(args.out, "a", encoding="utf-8") as fh:
            fh.write(line)
    else:
        sys.stdout.write(line)
    return 0


def _parser():
    ap = argparse.ArgumentParser(
        prog="grpbounds",
        description="exponent bounds for nilpotent normal series")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="full report for one catalog group")
    p.add_argument("id")
    p.add_argument("--catalog", default="fixtures/orders-1-63.jsonl")
    p.add_argument("--out")
    p.add_argument("--rules", choices=("default", "none"), default="default")
    p.add_argument("--no-witness", action="store_true")
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("scan", help="tabulate a whole catalog")
    p.add_argument("--catalog", default="fixtures/orders-1-63.jsonl")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--rules", choices=("default", "none"), default="default")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--max-order", type=int)
    p.add_argument("--nilpotent-only", action="store_true")
    p.add_argument("--class", dest="klass", type=int)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("verify-paper",
                       help="check the published computational facts "
                            "against the shipped fixtures")
    p.add_argument("catalog_dir", nargs="?", default="fixtures")
    p.set_defaults(fn=cmd_verify_paper)

    p = sub.add_parser("construct", help="emit a catalog record")
    p.add_argument("kind")
    p.add_argument("params", nargs="*")
    p.add_argument("--catalog")
    p.add_argument("--out")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(fn=cmd_construct)

    return ap


def main(argv=None):
    args = _parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
