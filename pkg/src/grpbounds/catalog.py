"""Catalog file format: JSON Lines, one group definition per line.

Wire format per record (keys sorted, no spaces, one line):

    {"degree":3,"gens":[[2,3,1],[2,1,3]],"id":"6.1","order":6,
     "source":"fixture","tags":[]}

Images are 1-based on the wire and 0-based internally.  The id is
"order.suffix": database groups use the standard small-groups numeric
index, constructed records carry a short slug instead.  Loading
validates everything, including that the generators really close to
the declared order.
"""

import json
from dataclasses import dataclass, field

from .group import ClosureOverflow, Group


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogRecord:
    id: str
    order: int
    degree: int
    gens: tuple            # of tuples of 1-based images
    tags: tuple = field(default=())
    source: str = "unknown"


def _check_shape(rec, where):
    if not isinstance(rec.id, str) or "." not in rec.id:
        raise CatalogError("%s: id must look like 'order.suffix'" % where)
    head, _, tail = rec.id.partition(".")
    if not head.isdigit() or int(head) != rec.order or not tail:
        raise CatalogError(
            "%s: id %r does not match order %d" % (where, rec.id, rec.order))
    if rec.order < 1 or rec.degree < 1:
        raise CatalogError("%s: bad order or degree" % where)
    for k, images in enumerate(rec.gens):
        if len(images) != rec.degree or \
                sorted(images) != list(range(1, rec.degree + 1)):
            raise CatalogError(
                "%s: gens[%d] is not a bijection on 1..%d"
                % (where, k, rec.degree))


def to_group(rec, where=None):
    """Internal 0-based Group; verifies the closure has the declared
    order (the cap is the declared order, so a bigger closure aborts
    early)."""
    where = where or "record %s" % rec.id
    gens = [tuple(i - 1 for i in images) for images in rec.gens]
    try:
        g = Group(gens, degree=rec.degree, cap=rec.order)
    except ClosureOverflow:
        raise CatalogError(
            "%s: closure exceeds the declared order %d" % (where, rec.order))
    if g.order != rec.order:
        raise CatalogError(
            "%s: closure has %d elements, order says %d"
            % (where, g.order, rec.order))
    return g


def from_group(rec_id, g, tags=(), source="constructed"):
    gens = tuple(tuple(i + 1 for i in images) for images in g.generators)
    rec = CatalogRecord(id=rec_id, order=g.order, degree=g.degree,
                        gens=gens, tags=tuple(tags), source=source)
    _check_shape(rec, "record %s" % rec_id)
    return rec


def _parse_line(line, where):
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as e:
        raise CatalogError("%s: bad JSON (%s)" % (where, e))
    if not isinstance(obj, dict):
        raise CatalogError("%s: not an object" % where)
    missing = {"id", "order", "degree", "gens"} - set(obj)
    if missing:
        raise CatalogError("%s: missing %s" % (where, sorted(missing)))
    rec = CatalogRecord(
        id=obj["id"],
        order=obj["order"],
        degree=obj["degree"],
        gens=tuple(tuple(im) for im in obj["gens"]),
        tags=tuple(obj.get("tags", ())),
        source=obj.get("source", "unknown"),
    )
    _check_shape(rec, where)
    return rec


def parse_catalog(path, check_closure=True):
    """Validated records in file order.  Closure checking enumerates
    every group and is the expensive part; it can be deferred when the
    caller is about to build the groups anyway."""
    records = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            where = "%s:%d" % (path, lineno)
            rec = _parse_line(line, where)
            if rec.id in seen:
                raise CatalogError("%s: duplicate id %r" % (where, rec.id))
            seen.add(rec.id)
            if check_closure:
                to_group(rec, where)
            records.append(rec)
    return records


def record_line(rec):
    obj = {"id": rec.id, "order": rec.order, "degree": rec.degree,
           "gens": [list(im) for im in rec.gens],
           "tags": list(rec.tags), "source": rec.source}
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def write_catalog(records, path):
    """One canonical line per record, record order preserved; parsing
    the result yields the input again, byte for byte on re-write."""
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(record_line(rec))
