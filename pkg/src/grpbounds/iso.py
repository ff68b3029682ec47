"""Isomorphism testing by invariant prefilter plus backtracking.

The backtracking maps a short generating sequence of A onto elements
of B with matching local invariants, extending each partial assignment
multiplicatively over the generated subgroup and rejecting on the
first inconsistency.  Orders are capped; the catalogs this library
works with stay far below the cap.
"""

from collections import Counter

from .subgroups import (_derived, _greedy_gens, _nilpotency_class,
                        _span_gens)

ISO_ORDER_CAP = 256


def _full(g):
    return (1 << g.order) - 1


def fingerprint(g):
    """Cheap invariants: order, element-order multiset, center size,
    derived size, nilpotency class, class-size multiset, exponent of
    the abelianization proxy (order multiset of the derived quotient is
    deliberately not computed here; see deep_fingerprint in tools)."""
    orders = Counter(g.orders)
    der = _derived(g, _full(g))
    return (
        g.order,
        tuple(sorted(orders.items())),
        len(g.center_ids()),
        der.bit_count(),
        _nilpotency_class(g, _full(g)) or 0,
        tuple(sorted(Counter(len(c) for c in g.conjugacy_classes).items())),
    )


def _element_invariants(g):
    """Per-element backtracking keys: order, conjugacy class size, and
    the commuting-class profile (how much of each class size the
    element's centralizer captures).  The profile is what keeps
    candidate pools narrow in groups where orders and class sizes
    alone are nearly uniform, such as p-groups of exponent p."""
    size = [0] * g.order
    for cl in g.conjugacy_classes:
        for i in cl:
            size[i] = len(cl)
    t = g.table
    commutes = t == t.T
    by_size = {}
    for cl in g.conjugacy_classes:
        counts = commutes[:, list(cl)].sum(axis=1)
        if len(cl) in by_size:
            by_size[len(cl)] += counts
        else:
            by_size[len(cl)] = counts
    profiles = list(zip(*(by_size[s] for s in sorted(by_size))))
    return [(g.orders[i], size[i], tuple(int(c) for c in profiles[i]))
            for i in range(g.order)]


def _extend(a, b, gen_ids, images):
    """Injective homomorphism on <gen_ids> sending gen_ids[k] to
    images[k], as an id map, or None.  Every product edge x*gen is
    checked, which pins the map completely."""
    f = {0: 0}
    used = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            fx = f[x]
            for gid, fg in zip(gen_ids, images):
                y = a.mul(x, gid)
                fy = b.mul(fx, fg)
                old = f.get(y)
                if old is not None:
                    if old != fy:
                        return None
                else:
                    if fy in used:
                        return None
                    f[y] = fy
                    used.add(fy)
                    nxt.append(y)
        frontier = nxt
    return f


def isomorphisms(a, b):
    """Yield all isomorphisms a -> b as id maps (dicts)."""
    if a.order != b.order:
        return
    if a.order > ISO_ORDER_CAP or b.order > ISO_ORDER_CAP:
        raise ValueError("isomorphism search capped at order %d"
                         % ISO_ORDER_CAP)
    full = _full(a)
    gens = list(_greedy_gens(a, full))
    if not gens:
        yield {0: 0}
        return
    # drop members that later picks made redundant; search cost is
    # exponential in the sequence length, and for p-groups the pruned
    # length is exactly the Frattini rank
    i = 0
    while len(gens) > 1 and i < len(gens):
        rest = gens[:i] + gens[i + 1:]
        if _span_gens(a, rest) == full:
            gens = rest
        else:
            i += 1
    inv_a = _element_invariants(a)
    inv_b = _element_invariants(b)
    if Counter(inv_a) != Counter(inv_b):
        return
    pool = {}
    for j in range(1, b.order):
        pool.setdefault(inv_b[j], []).append(j)
    cands = [pool.get(inv_a[gid], ()) for gid in gens]
    tight = sorted(range(len(gens)), key=lambda k: len(cands[k]))
    gens = [gens[k] for k in tight]
    cands = [cands[k] for k in tight]

    def rec(k, images):
        for j in cands[k]:
            images.append(j)
            f = _extend(a, b, gens[:k + 1], images)
            if f is not None:
                if k + 1 == len(gens):
                    if len(f) == a.order:
                        yield f
                else:
                    yield from rec(k + 1, images)
            images.pop()

    yield from rec(0, [])


def is_isomorphic(a, b):
    """True iff a group isomorphism exists; prefilter first."""
    if a.order != b.order:
        return False
    if fingerprint(a) != fingerprint(b):
        return False
    for _ in isomorphisms(a, b):
        return True
    return False


def automorphisms(g):
    """All automorphisms of g as id maps."""
    return list(isomorphisms(g, g))
