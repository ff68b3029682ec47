"""Command line front end.

    grpbounds-export export --orders 1..63 --out fixtures/orders-1-63.jsonl
    grpbounds-export export --ids 64.189 --out fixtures/extras.jsonl

Exit status: 0 on success, 1 when the CAS output fails validation,
2 when the CAS is unavailable or the arguments are unusable.
"""

import argparse
import sys

from .driver import export
from .records import ExportError, write_records


def parse_orders(text):
    if not text:
        return []
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if lo < 1 or hi < lo:
            raise ValueError("bad order range: %s" % text)
        return list(range(lo, hi + 1))
    return [int(x) for x in text.split(",")]


def parse_ids(text):
    picks = []
    if not text:
        return picks
    for part in text.split(","):
        n, i = part.split(".")
        picks.append((int(n), int(i)))
    return picks


def main(argv=None):
    ap = argparse.ArgumentParser(prog="grpbounds-export")
    sub = ap.add_subparsers(dest="cmd", required=True)
    ex = sub.add_parser("export", help="export a slice of the database")
    ex.add_argument("--orders", default="",
                    help="range A..B or comma list of group orders")
    ex.add_argument("--ids", default="",
                    help="comma list of extra order.index picks")
    ex.add_argument("--out", required=True, help="output JSONL path")
    ex.add_argument("--gap-cmd", default="gap",
                    help="CAS executable to invoke")
    args = ap.parse_args(argv)

    try:
        orders = parse_orders(args.orders)
        picks = parse_ids(args.ids)
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    if not orders and not picks:
        print("error: nothing to export; give --orders or --ids",
              file=sys.stderr)
        return 2

    try:
        records = export(args.gap_cmd, orders, picks)
    except FileNotFoundError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except ExportError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1

    write_records(records, args.out)
    print("wrote %d records to %s" % (len(records), args.out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
