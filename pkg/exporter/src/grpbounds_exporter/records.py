"""Record shaping and the canonical JSONL line format.

The line format must stay byte-compatible with the consumer's catalog
parser: one JSON object per line, keys sorted, no spaces, trailing
newline.  Validation here is shape-only; closure checking is the
consumer's job.
"""

import json


class ExportError(Exception):
    pass


def make_record(order, index, degree, gens, tags):
    rec = {
        "id": "%d.%d" % (order, index),
        "order": order,
        "degree": degree,
        "gens": [list(im) for im in gens],
        "tags": sorted(tags),
        "source": "database",
    }
    validate_record(rec)
    return rec


def validate_record(rec):
    if rec["order"] < 1 or rec["degree"] < 1:
        raise ExportError("%s: bad order or degree" % rec["id"])
    if not rec["gens"]:
        raise ExportError("%s: no generators" % rec["id"])
    want = list(range(1, rec["degree"] + 1))
    for k, images in enumerate(rec["gens"]):
        if sorted(images) != want:
            raise ExportError(
                "%s: gens[%d] is not a bijection on 1..%d"
                % (rec["id"], k, rec["degree"]))


def record_line(rec):
    return json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n"


def parse_line(line):
    rec = json.loads(line)
    validate_record(rec)
    return rec


def write_records(records, path):
    """Records sorted by (order, index); rewriting what this wrote
    reproduces the bytes exactly."""
    records = sorted(records,
                     key=lambda r: (r["order"], int(r["id"].split(".")[1])))
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(record_line(rec))
    return records
