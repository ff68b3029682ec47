"""Acceptance gate: one test and one printed pass/fail line per
criterion.  Run with -s to see the lines as they complete."""

import pathlib
import subprocess
import sys
import time
from math import comb, lcm

import pytest

import oracles
from grpbounds.build import cyclic, dihedral, direct_product, wreath
from grpbounds.catalog import record_line
from grpbounds.claims import run_claims
from grpbounds.invariants import (_p_of, exponent, generator_exponent,
                                  is_regular, nilpotency_class, report)
from grpbounds.rsearch import (DEFAULT_RULES, check_witness, lcm_frontier,
                               r_prime, r_value)
from grpbounds.subgroups import (_commutator_span, _derived, _exponent,
                                 _is_solvable, _lower_central_masks,
                                 _nilpotency_class, _partial_complements_in,
                                 _wrap, normal_subgroup_masks)

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def finish(tag, secs, ok, msg):
    print("%s %s (%.1fs): %s" % (tag, "pass" if ok else "FAIL", secs, msg))
    assert ok, "%s: %s" % (tag, msg)


@pytest.fixture(scope="session")
def claims(main_records, big_records, extra_records):
    results = run_claims(list(main_records) + list(big_records)
                         + list(extra_records))
    return {res.claim: res for res in results}


def claim_line(tag, claims, ids, budget):
    secs = sum(claims[i].seconds for i in ids)
    ok = all(claims[i].ok for i in ids) and secs <= budget
    msg = "; ".join("%s %s" % (i, claims[i].computed) for i in ids)
    finish(tag, secs, ok, msg)


def test_a1_smallest_counterexample():
    t0 = time.perf_counter()
    g = dihedral(16)
    rep = report(g)
    value, w = r_value(g)
    naive = oracles.naive_r(g)
    secs = time.perf_counter() - t0
    ok = (rep.generator_exponent == 2 and rep.exponent == 8
          and rep.nilpotency_class == 3
          and value == 4 and naive == 4 and value > rep.generator_exponent
          and check_witness(w)[0] and secs < 1.0)
    finish("A1", secs, ok,
           "dihedral 16: ge=%d exp=%d class=%s r=%d oracle=%d"
           % (rep.generator_exponent, rep.exponent, rep.nilpotency_class,
              value, naive))


def test_a2_census_below_64(claims):
    claim_line("A2", claims, ["C2"], 600)


def test_a3_rule_refinement(claims):
    claim_line("A3", claims, ["C3", "C4"], 600)


def test_a4_order_64_join(claims):
    claim_line("A4", claims, ["C5"], 300)


def test_a5_order_243_census(claims):
    claim_line("A5", claims, ["C6"], 14400)


def test_a6_small_class_equality(claims):
    claim_line("A6", claims, ["C7"], 14400)


def test_a7_property_suites(main_records, big_records, extra_records, gget):
    t0 = time.perf_counter()
    bad = []
    counts = {}

    def note(name, cond, detail):
        counts[name] = counts.get(name, 0) + 1
        if not cond:
            bad.append("%s: %s" % (name, detail))

    def full_of(g):
        return (1 << g.order) - 1

    small = [r for r in main_records if r.order <= 24]
    mid = [r for r in main_records if r.order <= 32]
    sixty_four = list(main_records) + list(extra_records)
    everything = sixty_four + list(big_records)

    # commutator expansion identity, all triples
    for rec in small:
        g = gget(rec)
        m, comm = g.mul, g.commutator_id
        n = g.order
        ok = all(
            comm(m(x, z), y) ==
            m(m(comm(z, comm(y, x)), comm(x, y)), comm(z, y))
            for x in range(n) for z in range(n) for y in range(n))
        note("triple-identity", ok, rec.id)

    # class-2 power rule, exponents up to 8
    for rec in mid:
        g = gget(rec)
        if _nilpotency_class(g, full_of(g)) not in (0, 1, 2):
            continue
        m, pw, comm = g.mul, g.power_id, g.commutator_id
        ok = all(
            pw(m(a, b), n) ==
            m(m(pw(a, n), pw(b, n)), pw(comm(b, a), comb(n, 2)))
            for n in range(2, 9)
            for a in range(g.order) for b in range(g.order))
        note("class2-powers", ok, rec.id)

    # lower central terms absorb commutators across weights
    for rec in sixty_four:
        g = gget(rec)
        terms = _lower_central_masks(g, full_of(g))
        last = len(terms) - 1

        def term(w):
            return terms[min(w - 1, last)]

        for i in range(1, last + 2):
            for j in range(i, last + 2):
                got = _commutator_span(g, term(i), term(j))
                note("series-absorption", got & ~term(i + j) == 0,
                     "%s i=%d j=%d" % (rec.id, i, j))

    # class below p forces regularity; record the verdicts for reuse
    regular_known = {}
    for rec in everything:
        g = gget(rec)
        p = _p_of(g.order)
        if p is None:
            continue
        cls = _nilpotency_class(g, full_of(g))
        if cls < p:
            verdict = is_regular(g, p)
            regular_known[rec.id] = verdict
            note("small-class-regular", verdict, rec.id)
        elif g.order <= 81:
            regular_known[rec.id] = is_regular(g, p)

    # regularity consequences: the exponent meets its generating floor,
    # and a product never outlives both factors
    for rec in everything:
        if not regular_known.get(rec.id):
            continue
        g = gget(rec)
        ords = g.orders
        pairs_ok = all(ords[g.mul(a, b)] <= max(ords[a], ords[b])
                       for a in range(g.order) for b in range(g.order))
        note("regular-consequences",
             exponent(g) == generator_exponent(g) and pairs_ok, rec.id)

    # the derived subgroup's exponent divides the generating floor
    # whenever the class stays at or below p
    for rec in everything:
        g = gget(rec)
        p = _p_of(g.order)
        if p is None:
            continue
        if _nilpotency_class(g, full_of(g)) <= p:
            der = _derived(g, full_of(g))
            note("derived-exponent",
                 generator_exponent(g) % _exponent(g, der) == 0, rec.id)

    # node splitting bound: a normal piece and a partial complement cap
    # the series value from above
    for rec in mid:
        g = gget(rec)
        if _p_of(g.order) is None:
            continue
        full = full_of(g)
        rg = min(lcm_frontier(_wrap(g, full)))
        for n in normal_subgroup_masks(g):
            en = _exponent(g, n)
            for u in _partial_complements_in(g, full, n):
                ru = min(lcm_frontier(_wrap(g, u)))
                note("split-bound", rg <= lcm(en, ru),
                     "%s N=%d U=%d" % (rec.id, n.bit_count(), u.bit_count()))

    # generating-exponent threshold equals the subset search
    for rec in small:
        g = gget(rec)
        note("ge-oracle", generator_exponent(g) == oracles.subset_ge(g),
             rec.id)

    # frontier equals the unpruned all-series value set, reduced
    for rec in mid:
        g = gget(rec)
        vals = oracles.series_values(g)
        floor = oracles.divisibility_floor(vals)
        front = tuple(sorted(lcm_frontier(_wrap(g, full_of(g)))))
        note("frontier-oracle", front == floor and min(vals) == min(front),
             "%s %r vs %r" % (rec.id, front, floor))

    # arithmetic relations and witness audits across the solvable range
    for rec in sixty_four:
        g = gget(rec)
        exp = exponent(g)
        ge = generator_exponent(g)
        note("ge-divides-exp", exp % ge == 0, rec.id)
        if not _is_solvable(g, full_of(g)):
            continue
        value, w = r_value(g)
        pvalue, pw = r_prime(g)
        ok1, why1 = check_witness(w)
        ok2, why2 = check_witness(pw, DEFAULT_RULES)
        note("witness-audit", ok1 and ok2,
             "%s %s %s" % (rec.id, why1, why2))
        note("ge-below-r", ge <= value, rec.id)
        note("r-divides-exp", exp % value == 0, rec.id)
        note("refined-below-base", pvalue <= value, rec.id)

    secs = time.perf_counter() - t0
    total = sum(counts.values())
    ok = not bad and len(counts) == 14 and total > 0
    msg = "%d checks in %d families, %d violations%s" % (
        total, len(counts), len(bad),
        "; first: " + bad[0] if bad else "")
    finish("A7", secs, ok, msg)


def test_a8_constructors(claims):
    t0 = time.perf_counter()
    bad = []

    for gm, hm, go, ho in ((cyclic(2), cyclic(3), 2, 3),
                           (cyclic(3), cyclic(2), 3, 2),
                           (cyclic(4), cyclic(2), 4, 2),
                           (dihedral(6), cyclic(2), 6, 2)):
        w = wreath(gm, hm)
        if w.order != go ** hm.degree * ho:
            bad.append("wreath order %d" % w.order)
    for a, b in ((cyclic(4), dihedral(6)), (cyclic(7), cyclic(2))):
        d = direct_product(a, b)
        if d.order != a.order * b.order:
            bad.append("direct order %d" % d.order)

    w33 = wreath(cyclic(3), cyclic(3))
    facts = (nilpotency_class(w33), generator_exponent(w33), exponent(w33),
             r_value(w33)[0])
    if facts != (3, 3, 9, 3):
        bad.append("3 wr 3 gave %r" % (facts,))

    tower = [cyclic(2)]
    for _ in range(2):
        tower.append(wreath(cyclic(2), tower[-1]))
    ges = [generator_exponent(t) for t in tower]
    exps = [exponent(t) for t in tower]
    if ges != [2, 2, 2]:
        bad.append("tower ge %r" % ges)
    if not all(a < b for a, b in zip(exps, exps[1:])):
        bad.append("tower exp %r" % exps)

    if not claims["C8"].ok:
        bad.append("C8: %s" % claims["C8"].computed)

    secs = time.perf_counter() - t0
    finish("A8", secs, not bad,
           "wreath and product formulas hold; tower exp %s%s"
           % (exps, "; " + "; ".join(bad) if bad else ""))


def test_a9_committed_fixtures(main_records, big_records, extra_records):
    t0 = time.perf_counter()
    bad = []

    by_order = {}
    for rec in main_records:
        by_order[rec.order] = by_order.get(rec.order, 0) + 1
    if by_order.get(16) != 14:
        bad.append("order 16 count %s" % by_order.get(16))
    if by_order.get(32) != 51:
        bad.append("order 32 count %s" % by_order.get(32))
    if len(big_records) != 67:
        bad.append("order 243 count %d" % len(big_records))
    if [r.id for r in extra_records] != ["64.189"]:
        bad.append("extras hold %r" % [r.id for r in extra_records])

    # committed files are byte-stable under a parse/serialize round trip
    for name, recs in (("orders-1-63.jsonl", main_records),
                       ("order-243.jsonl", big_records),
                       ("extras.jsonl", extra_records)):
        data = (FIXTURES / name).read_bytes()
        again = "".join(record_line(r) for r in recs).encode()
        if data != again:
            bad.append("%s not byte-stable" % name)

    # the engine package never reaches for the exporter
    probe = subprocess.run(
        [sys.executable, "-c",
         "import grpbounds, grpbounds.cli, grpbounds.claims, sys;"
         "sys.exit(any('exporter' in m for m in sys.modules))"],
        cwd=str(ROOT), capture_output=True)
    if probe.returncode != 0:
        bad.append("engine import pulls in the exporter")

    secs = time.perf_counter() - t0
    finish("A9", secs, not bad,
           "counts 14@16 51@32 67@243; %s"
           % ("; ".join(bad) or "fixtures byte-stable, engine standalone"))
