"""Per-group invariants: exponent, generator exponent, central and
derived series, nilpotency class, solvability, p-group regularity."""

from dataclasses import dataclass
from math import lcm
from typing import Optional

from . import subgroups
from .subgroups import (SubgroupSet, _derived, _exponent, _is_solvable,
                        _lower_central_masks, _nilpotency_class, _span_gens,
                        _wrap, ids_of)


def _full(g):
    return (1 << g.order) - 1


def exponent(g):
    """lcm of the orders of all elements."""
    return lcm(*g.orders)


def _divisors(n):
    small, big = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                big.append(n // d)
        d += 1
    return small + big[::-1]


def _generating_exponent_mask(g, hmask):
    cache = subgroups._cache(g, "genexp")
    got = cache.get(hmask)
    if got is not None:
        return got
    e = _exponent(g, hmask)
    orders = g.orders
    for d in _divisors(e):
        seed = [i for i in ids_of(hmask) if d % orders[i] == 0]
        if _span_gens(g, seed) == hmask:
            cache[hmask] = d
            return d
    raise AssertionError("unreachable: the full divisor always generates")


def generator_exponent(g):
    """Minimum over generating sets S of lcm of the element orders in S.

    Computed by a divisor threshold instead of subset search: for each
    divisor e of exp(G) in increasing order, test whether the set
    S_e = {x : ord(x) divides e} generates, and return the first e that
    does.  This is the same number.  If some generating set S attains
    the lcm value L, then every member of S has order dividing L, so
    S is a subset of S_L and S_L generates; hence the least generating
    divisor is <= L.  Conversely S_e itself is a generating set whose
    lcm of orders divides e, so the minimum over generating sets is
    <= the least generating divisor.  (Any lcm of element orders
    divides exp(G), so only divisors of exp(G) need testing.)
    """
    return _generating_exponent_mask(g, _full(g))


def derived_subgroup(g_or_sub):
    """Span of all commutators [a, b] of members."""
    if isinstance(g_or_sub, SubgroupSet):
        g, mask = g_or_sub.ambient, g_or_sub.members
    else:
        g, mask = g_or_sub, _full(g_or_sub)
    return _wrap(g, _derived(g, mask))


def lower_central_series(g):
    """[G, [G, G], ...] until stabilization, G itself first."""
    return [_wrap(g, m) for m in _lower_central_masks(g, _full(g))]


def nilpotency_class(g):
    """Least c with the (c+1)-th lower central term trivial, or None
    when the series stabilizes above the identity."""
    return _nilpotency_class(g, _full(g))


def is_nilpotent(g):
    return nilpotency_class(g) is not None


def is_solvable(g):
    """Derived series reaches the identity."""
    return _is_solvable(g, _full(g))


def derived_series(g):
    return [_wrap(g, m) for m in
            subgroups._derived_series_masks(g, _full(g))]


def _p_of(order):
    """The prime p with order = p^k, else None."""
    if order < 2:
        return None
    p = 2
    n = order
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
        p += 1
    return n


def is_regular(g, p=None):
    """Regularity of a p-group, tested literally pair by pair: for
    every a, b there must be a single c in the derived subgroup of
    <a, b> with a^p b^p = (ab)^p c^p.

    Commuting pairs are skipped (c = identity works exactly).  No other
    shortcut is taken, so the class-below-p criterion can be verified
    against this function rather than assumed by it.
    """
    q = _p_of(g.order)
    if q is None and g.order > 1:
        raise ValueError("order %d is not a prime power" % g.order)
    if p is None:
        p = q
    elif q is not None and p != q:
        raise ValueError("group is a %d-group, not a %d-group" % (q, p))
    if g.order == 1:
        return True

    pw = [g.power_id(i, p) for i in range(g.order)]
    spans = {}
    dcache = {}
    for a in range(g.order):
        for b in range(g.order):
            if g.mul(a, b) == g.mul(b, a):
                continue
            h = spans.get((a, b))
            if h is None:
                h = _span_gens(g, (a, b))
                spans[(a, b)] = spans[(b, a)] = h
            d = dcache.get(h)
            if d is None:
                d = _derived(g, h)
                dcache[h] = d
            # c^p must equal ((ab)^p)^-1 a^p b^p
            target = g.mul(g.inv[pw[g.mul(a, b)]], g.mul(pw[a], pw[b]))
            if not any(pw[c] == target for c in ids_of(d)):
                return False
    return True


def weight_commutator_subgroup(g, weight):
    """Span of all weight-w commutators over all element pairs.

    For a pair (a, b), the weight-1 commutators are a and b, and the
    weight-w ones are [u, v] for u of weight i, v of weight j, i+j = w.
    Computed by small dynamic programs over one pair at a time; meant
    for modest orders and weights.
    """
    if weight < 1:
        raise ValueError("weight must be >= 1")
    if weight == 1:
        return _wrap(g, _full(g))
    total = set()
    m = g.mul
    inv = g.inv

    def comm(i, j):
        return m(m(inv[i], inv[j]), m(i, j))

    for a in range(g.order):
        for b in range(g.order):
            by_w = {1: {a, b}}
            for w in range(2, weight + 1):
                cur = set()
                for i in range(1, w):
                    for u in by_w[i]:
                        for v in by_w[w - i]:
                            cur.add(comm(u, v))
                by_w[w] = cur
            total |= by_w[weight]
    return _wrap(g, _span_gens(g, sorted(total - {0})))


@dataclass(frozen=True)
class InvariantReport:
    order: int
    exponent: int
    generator_exponent: int
    is_nilpotent: bool
    nilpotency_class: Optional[int]     # None when not nilpotent
    is_solvable: bool
    prime: Optional[int]                # set for prime-power order
    is_regular: Optional[bool]          # defined only at prime-power order
    exp_derived: int

    def __post_init__(self):
        assert self.exponent % self.generator_exponent == 0


def report(g):
    p = _p_of(g.order)
    der = _derived(g, _full(g))
    cls = nilpotency_class(g)
    return InvariantReport(
        order=g.order,
        exponent=exponent(g),
        generator_exponent=generator_exponent(g),
        is_nilpotent=cls is not None,
        nilpotency_class=cls,
        is_solvable=is_solvable(g),
        prime=p,
        is_regular=is_regular(g, p) if (p or g.order == 1) else None,
        exp_derived=_exponent(g, der),
    )
