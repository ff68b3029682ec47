"""Drive an external CAS and reshape its output into catalog records.

The CAS does all the mathematics.  We hand it a short program that
walks a range of the small-groups database, converts each group to a
faithful permutation representation (regular representation as the
fallback), and prints one machine-readable line per group.  This
module turns those lines into validated records.

Wire format, one line each, everything else ignored:

    #COUNT <order> <how many groups of that order>
    #REC <order>|<index>|<degree>|<gens>|<tags>

where <gens> is semicolon-separated generators, each a comma-separated
list of 1-based images, and <tags> is a comma-separated tag list
(possibly empty).
"""

import shutil
import subprocess

from .records import ExportError, make_record

GAP_PROGRAM = """\
emit := function(n, i)
    local g, iso, p, degree, gens, imgs, tags, pieces, gen;
    g := SmallGroup(n, i);
    iso := IsomorphismPermGroup(g);
    if iso = fail then
        iso := RegularActionHomomorphism(g);
    fi;
    p := Image(iso);
    degree := LargestMovedPoint(p);
    if degree = 0 then
        degree := 1;
    fi;
    gens := GeneratorsOfGroup(p);
    if Length(gens) = 0 then
        gens := [ () ];
    fi;
    pieces := [];
    for gen in gens do
        imgs := List([1 .. degree], x -> x ^ gen);
        Add(pieces, JoinStringsWithSeparator(List(imgs, String), ","));
    od;
    tags := [];
    if IsAbelian(g) then Add(tags, "abelian"); fi;
    if IsNilpotentGroup(g) then Add(tags, "nilpotent"); fi;
    if IsSolvableGroup(g) then Add(tags, "solvable"); fi;
    Print("#REC ", n, "|", i, "|", degree, "|",
          JoinStringsWithSeparator(pieces, ";"), "|",
          JoinStringsWithSeparator(tags, ","), "\\n");
end;;

run := function(orders, picks)
    local n, i, k;
    for n in orders do
        k := NrSmallGroups(n);
        Print("#COUNT ", n, " ", k, "\\n");
        for i in [1 .. k] do
            emit(n, i);
        od;
    od;
    for k in picks do
        emit(k[1], k[2]);
    od;
end;;

run(%s, %s);
QUIT;
"""


def gap_input(orders, picks=()):
    order_list = "[" + ", ".join(str(n) for n in orders) + "]"
    pick_list = "[" + ", ".join("[%d, %d]" % (n, i) for n, i in picks) + "]"
    return GAP_PROGRAM % (order_list, pick_list)


def run_cas(gap_cmd, orders, picks=()):
    if shutil.which(gap_cmd) is None:
        raise FileNotFoundError("CAS command not found: %s" % gap_cmd)
    proc = subprocess.run(
        [gap_cmd, "-q", "-b"],
        input=gap_input(orders, picks),
        capture_output=True, text=True)
    if proc.returncode != 0:
        raise ExportError(
            "CAS exited with status %d:\n%s"
            % (proc.returncode, proc.stderr.strip()))
    return proc.stdout


def parse_output(text, orders, picks=()):
    """Validate against the CAS's own #COUNT announcements and return
    records sorted by (order, index)."""
    counts = {}
    seen = {}
    records = {}
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#COUNT "):
            _, n, k = line.split()
            counts[int(n)] = int(k)
        elif line.startswith("#REC "):
            rec = _parse_rec(line[5:])
            key = (rec["order"], int(rec["id"].split(".")[1]))
            records[key] = rec
            if rec["order"] in counts:
                seen[rec["order"]] = seen.get(rec["order"], 0) + 1
    for n in orders:
        if n not in counts:
            raise ExportError("no count reported for order %d" % n)
        if seen.get(n, 0) != counts[n]:
            raise ExportError(
                "order %d: expected %d groups, got %d"
                % (n, counts[n], seen.get(n, 0)))
    for n, i in picks:
        if (n, i) not in records:
            raise ExportError("requested group %d.%d missing" % (n, i))
    return [records[k] for k in sorted(records)]


def _parse_rec(payload):
    parts = payload.split("|")
    if len(parts) != 5:
        raise ExportError("malformed record line: %r" % payload)
    order, index, degree = int(parts[0]), int(parts[1]), int(parts[2])
    gens = []
    for chunk in parts[3].split(";"):
        gens.append([int(x) for x in chunk.split(",")])
    tags = [t for t in parts[4].split(",") if t]
    return make_record(order, index, degree, gens, tags)


def export(gap_cmd, orders, picks=()):
    return parse_output(run_cas(gap_cmd, orders, picks), orders, picks)
