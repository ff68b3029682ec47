"""Subgroup machinery over an enumerated ambient Group.

Subgroups are represented two ways:

  * internally as Python-int bitsets over element ids (bit i set iff
    elements[i] is a member), the form every algorithm works on;
  * at the public API as SubgroupSet records carrying the ambient
    group, the member bitset and a short generator list.

The mask-level helpers (underscore names) are shared with the series
search, which walks the lattice hard enough that record wrappers would
be pure overhead.
"""

from dataclasses import dataclass
from math import lcm

from .group import Group

TRIVIAL = 1  # bitset containing only element id 0


# -- bitset helpers -----------------------------------------------------

def ids_of(mask):
    """Set bit positions, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(ids):
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def _cache(g, key):
    return g.__dict__.setdefault("_mask_cache", {}).setdefault(key, {})


# -- span and generators ------------------------------------------------

def _span_gens(g, gids):
    """Bitset of the subgroup generated by the given element ids."""
    mask = TRIVIAL
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gids:
                y = g.mul(x, s)
                b = 1 << y
                if not mask & b:
                    mask |= b
                    nxt.append(y)
        frontier = nxt
    return mask


def _close_mask(g, mask):
    """Closure of an arbitrary member bitset under multiplication."""
    return _span_gens(g, list(ids_of(mask)))


def _greedy_gens(g, mask):
    """Short generating sequence for a subgroup bitset: scan member ids
    ascending, keep each id not already spanned.  Deterministic; each
    kept generator strictly enlarges the span, so the sequence has at
    most log2(popcount) entries."""
    cache = _cache(g, "gens")
    got = cache.get(mask)
    if got is not None:
        return got
    gens = []
    cur = TRIVIAL
    if mask != TRIVIAL:
        for i in ids_of(mask):
            if i and not cur & (1 << i):
                gens.append(i)
                cur = _span_gens(g, gens)
                if cur == mask:
                    break
    assert cur == mask, "input bitset is not a subgroup"
    out = tuple(gens)
    cache[mask] = out
    return out


def _is_closed(g, mask):
    for i in ids_of(mask):
        for j in ids_of(mask):
            if not mask >> g.mul(i, j) & 1:
                return False
    return True


def _exponent(g, mask):
    cache = _cache(g, "exp")
    got = cache.get(mask)
    if got is None:
        got = lcm(*(g.orders[i] for i in ids_of(mask)))
        cache[mask] = got
    return got


# -- public record ------------------------------------------------------

@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup of an ambient Group: member bitset plus generators."""
    ambient: Group
    members: int
    gens: tuple

    @property
    def order(self):
        return self.members.bit_count()

    def member_ids(self):
        return tuple(ids_of(self.members))

    def is_trivial(self):
        return self.members == TRIVIAL

    def is_full(self):
        return self.order == self.ambient.order

    def validate(self):
        """Debug check of the closure invariants."""
        g = self.ambient
        assert self.members & TRIVIAL, "missing identity"
        assert _is_closed(g, self.members), "not closed"
        assert _span_gens(g, self.gens) == self.members, "gens do not span"
        assert g.order % self.order == 0, "Lagrange violated"
        return True


def _wrap(g, mask):
    return SubgroupSet(g, mask, _greedy_gens(g, mask))


def span(g, ids):
    """Least subgroup of g containing the given element ids.  The
    recorded generators are a greedy irredundant subset of the input
    (in input order, dropping ids already spanned)."""
    gens = []
    cur = TRIVIAL
    for i in ids:
        if not cur & (1 << i):
            gens.append(i)
            cur = _span_gens(g, gens)
    return SubgroupSet(g, cur, tuple(gens))


# -- the full lattice ---------------------------------------------------

def all_subgroup_masks(g):
    """Every subgroup of g as a bitset, sorted by (order, bitset value).

    Closure BFS: seed with the cyclic subgroups, then extend each known
    subgroup H by one outside element and close.  Extending by x and by
    any other member of the coset Hx yields the same subgroup, so only
    one representative per coset is tried.  Memoized on the group.
    """
    if g._subgroups is not None:
        return g._subgroups
    g.table  # force the dense table once; everything below hammers mul

    gens_of = {TRIVIAL: ()}
    seeds = []
    for i in range(1, g.order):
        m = TRIVIAL
        x = i
        while x:
            m |= 1 << x
            x = g.mul(x, i)
        if m not in gens_of:
            gens_of[m] = (i,)
            seeds.append(m)

    full = (1 << g.order) - 1
    queue = list(seeds)
    while queue:
        h = queue.pop()
        if h == full:
            continue
        tried = h
        for x in ids_of(full & ~h):
            if tried >> x & 1:
                continue
            # mark the whole right coset Hx as tried
            for i in ids_of(h):
                tried |= 1 << g.mul(i, x)
            gens = gens_of[h] + (x,)
            k = _span_gens(g, gens)
            if k not in gens_of:
                gens_of[k] = gens
                queue.append(k)

    g._subgroups = tuple(sorted(gens_of, key=lambda m: (m.bit_count(), m)))
    return g._subgroups


def all_subgroups(g):
    return [_wrap(g, m) for m in all_subgroup_masks(g)]


def _subgroups_within(g, hmask):
    cache = _cache(g, "within")
    got = cache.get(hmask)
    if got is None:
        got = tuple(m for m in all_subgroup_masks(g) if m & ~hmask == 0)
        cache[hmask] = got
    return got


# -- normality ----------------------------------------------------------

def _is_normal_in(g, nmask, hgens):
    """nmask invariant under conjugation by the listed generator ids."""
    for h in hgens:
        hi = g.inv[h]
        for x in ids_of(nmask):
            if not nmask >> g.mul(g.mul(hi, x), h) & 1:
                return False
    return True


def is_normal(sub):
    """True iff the subgroup is normal in its ambient group."""
    g = sub.ambient
    return _is_normal_in(g, sub.members, g.generator_ids)


def normal_subgroup_masks(g):
    """All normal subgroups of g, as bitsets sorted like the lattice.

    Joins of conjugacy-class closures: every normal subgroup is the
    join of the class closures it contains, and every such join is
    normal.  When g has no nonnormal subgroup at all (abelian ambient)
    the lattice is returned directly.
    """
    cache = g.__dict__.setdefault("_mask_cache", {})
    got = cache.get("normals")
    if got is not None:
        return got

    gids = g.generator_ids
    abelian = all(g.mul(a, b) == g.mul(b, a) for a in gids for b in gids)
    if abelian:
        out = all_subgroup_masks(g)
    else:
        spans = []
        seen = set()
        for cl in g.conjugacy_classes:
            m = _close_mask(g, mask_of(cl) | TRIVIAL)
            if m not in seen:
                seen.add(m)
                spans.append(m)
        closed = set(spans)
        frontier = list(spans)
        while frontier:
            a = frontier.pop()
            for b in list(closed):
                u = a | b
                if u in closed:
                    continue
                j = _close_mask(g, u)
                if j not in closed:
                    closed.add(j)
                    frontier.append(j)
        out = tuple(sorted(closed, key=lambda m: (m.bit_count(), m)))
        for m in out:
            assert _is_normal_in(g, m, gids)
    cache["normals"] = out
    return out


def normal_subgroups(g):
    return [_wrap(g, m) for m in normal_subgroup_masks(g)]


# -- partial complements ------------------------------------------------

def _partial_complements_in(g, hmask, nmask):
    """Bitsets of proper subgroups U of the subgroup with bitset hmask
    such that the product set N.U is all of it, by the counting test
    |N||U| = |H||N n U|.  N must be normal inside H (not checked here).
    """
    horder = hmask.bit_count()
    nord = nmask.bit_count()
    out = []
    for u in _subgroups_within(g, hmask):
        if u == hmask:
            continue
        if nord * u.bit_count() == horder * (u & nmask).bit_count():
            out.append(u)
    return out


def partial_complements(g, n):
    """All proper subgroups U of g with N.U = g, for a normal N.

    When N = g every proper subgroup qualifies, the trivial one
    included; that degenerate step is what lets a nilpotent group end a
    series in one move.
    """
    nmask = n.members if isinstance(n, SubgroupSet) else n
    if not _is_normal_in(g, nmask, g.generator_ids):
        raise ValueError("subgroup is not normal")
    full = (1 << g.order) - 1
    return [_wrap(g, m) for m in _partial_complements_in(g, full, nmask)]


# -- commutator spans and series ----------------------------------------

def _commutator_span(g, amask, bmask):
    """Subgroup generated by all [a, b] with a, b in the given bitsets."""
    seen = set()
    m = g.mul
    inv = g.inv
    for i in ids_of(amask):
        ii = inv[i]
        for j in ids_of(bmask):
            seen.add(m(m(ii, inv[j]), m(i, j)))
    return _span_gens(g, sorted(seen - {0}))


def commutator_span(a, b):
    assert a.ambient is b.ambient
    g = a.ambient
    return _wrap(g, _commutator_span(g, a.members, b.members))


def _derived(g, hmask):
    cache = _cache(g, "derived")
    got = cache.get(hmask)
    if got is None:
        got = _commutator_span(g, hmask, hmask)
        cache[hmask] = got
    return got


def _lower_central_masks(g, hmask):
    """[H, H, ...] until stable; first entry is H itself."""
    cache = _cache(g, "lcs")
    got = cache.get(hmask)
    if got is None:
        series = [hmask]
        while True:
            nxt = _commutator_span(g, hmask, series[-1])
            if nxt == series[-1]:
                break
            series.append(nxt)
        got = tuple(series)
        cache[hmask] = got
    return got


def _nilpotency_class(g, hmask):
    """Least c with the lower central series trivial after c+1 terms,
    or None when the series stabilizes above the identity."""
    series = _lower_central_masks(g, hmask)
    if series[-1] != TRIVIAL:
        return None
    return len(series) - 1


def _is_nilpotent(g, hmask):
    return _nilpotency_class(g, hmask) is not None


def _derived_series_masks(g, hmask):
    series = [hmask]
    while True:
        nxt = _derived(g, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return tuple(series)


def _is_solvable(g, hmask):
    return _derived_series_masks(g, hmask)[-1] == TRIVIAL


# -- Fitting subgroup ---------------------------------------------------

def fitting(g):
    """Largest nilpotent normal subgroup: the join of all of them."""
    full = (1 << g.order) - 1
    if _is_nilpotent(g, full):
        return _wrap(g, full)
    acc = TRIVIAL
    for m in normal_subgroup_masks(g):
        if _is_nilpotent(g, m):
            acc = _close_mask(g, acc | m)
    assert _is_nilpotent(g, acc), "join of nilpotent normals not nilpotent"
    assert _is_normal_in(g, acc, g.generator_ids)
    return _wrap(g, acc)


# -- derived groups -----------------------------------------------------

def subgroup_group(g, mask, cap=None):
    """The subgroup as a standalone Group on the same points."""
    if mask == TRIVIAL:
        return Group([], degree=g.degree)
    gens = [g.elements[i] for i in _greedy_gens(g, mask)]
    sub = Group(gens, degree=g.degree) if cap is None else Group(
        gens, degree=g.degree, cap=cap)
    assert sub.order == mask.bit_count()
    return sub


def quotient_group(g, nmask):
    """g modulo a normal subgroup, as the action on left cosets xN.

    Faithful for normal N (the kernel of the action is exactly N), so
    the result has order |g| / |N|.
    """
    if not _is_normal_in(g, nmask, g.generator_ids):
        raise ValueError("subgroup is not normal")
    nids = list(ids_of(nmask))
    coset_rep = {}
    reps = []
    for x in range(g.order):
        if x in coset_rep:
            continue
        idx = len(reps)
        reps.append(x)
        for n in nids:
            coset_rep[g.mul(x, n)] = idx
    gens = []
    for gid in g.generator_ids:
        gens.append(tuple(coset_rep[g.mul(gid, reps[c])]
                          for c in range(len(reps))))
    q = Group(gens, degree=len(reps))
    assert q.order * nmask.bit_count() == g.order
    return q
