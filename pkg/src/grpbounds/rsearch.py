"""Minimal exponent lcm over descending nilpotent-normal series.

A series for a group G is a chain G = G_0 > G_1 > ... > G_s = 1 where
each step picks a nontrivial nilpotent normal subgroup N_i of G_{i-1}
and G_i is a proper subgroup with N_i.G_i = G_{i-1} (a partial
complement).  The quantity computed here is the minimum over all such
series of lcm(exp N_1, ..., exp N_s), plus a refined variant where a
bound rule may close any node of the recursion with a known constant
instead of descending further.

The recursion works on frontiers: frontier(H) is the set of
divisibility-minimal achievable lcm values for the subtree rooted at
the subgroup H.  Passing minimal sets upward is exact because lcm is
monotone with respect to divisibility in each argument, while passing
a single numeric minimum would not be (a numerically larger value can
have the smaller lcm with the accumulated part).  On p-groups all
values are powers of p, divisibility is a total order, and every
frontier collapses to a singleton; only there do we run incumbent
pruning and an early stop at the generator-exponent floor, both of
which are exact for singletons.

Exactness of the two shortcuts:

  * If H is nilpotent with exp(H) equal to its generator exponent and
    no rule can fire at or inside H, then frontier(H) = {exp(H)}: the
    N_i of any chain cover H as a product, so they generate H and every
    chain value v is at least the generator exponent numerically, while
    v divides exp(H) since each exp(N_i) does; equality forces
    v = exp(H), which the one-step chain N = H attains.  Bound rules
    break the lower-bound argument (a rule value can undercut the
    generator exponent), hence the per-rule may_fire_within gate.

  * For N = H (H nilpotent) only the trivial partial complement is
    enumerated: any other complement contributes lcm(exp H, f), a
    multiple of exp H, which minimal-set reduction would discard.
"""

from dataclasses import dataclass, field
from math import lcm
from typing import Callable

from .group import Group
from .invariants import _generating_exponent_mask, _p_of
from .subgroups import (TRIVIAL, _exponent, _greedy_gens, _is_nilpotent,
                        _is_normal_in, _is_solvable, _subgroups_within,
                        _wrap, ids_of)


class NoSeriesError(ValueError):
    """No admissible series exists (the group is not solvable)."""


# -- bound rules --------------------------------------------------------

@dataclass(frozen=True)
class BoundRule:
    """A structural predicate plus a constant that may replace the
    value of any node where the predicate holds.  may_fire_within must
    be True whenever the predicate could hold at the node itself or at
    any subgroup of it; it gates the exp-equals-ge shortcut."""
    name: str
    predicate: Callable[[Group, int], bool]
    bound: int
    may_fire_within: Callable[[Group, int], bool]


def _is_dihedral_mask(g, h):
    """Order 2m, m >= 3, with a cyclic subgroup C of index 2 and an
    involution outside C inverting it.  The inversion condition forces
    nonabelian once m >= 3, so the degenerate small cases are out."""
    n = h.bit_count()
    if n < 6 or n % 2:
        return False
    half = n // 2
    seen = set()
    for x in ids_of(h):
        if g.orders[x] != half:
            continue
        c = TRIVIAL
        y = x
        while y:
            c |= 1 << y
            y = g.mul(y, x)
        if c in seen:
            continue
        seen.add(c)
        xi = g.inv[x]
        for t in ids_of(h & ~c):
            if g.mul(t, t) == 0 and g.mul(g.mul(g.inv[t], x), t) == xi:
                return True
    return False


def _contains_dihedral(g, h):
    """True iff some subgroup of h is dihedral of order >= 6: two
    involutions with a product of order m >= 3 generate exactly such a
    subgroup, and conversely."""
    invol = [i for i in ids_of(h) if g.orders[i] == 2]
    for a, u in enumerate(invol):
        for v in invol[a + 1:]:
            if g.orders[g.mul(u, v)] >= 3:
                return True
    return False


DIHEDRAL_RULE = BoundRule("dihedral", _is_dihedral_mask, 2,
                          _contains_dihedral)
DEFAULT_RULES = (DIHEDRAL_RULE,)


# -- witnesses ----------------------------------------------------------

@dataclass(frozen=True)
class RWitness:
    """A series certifying a computed value.  steps[i] holds the chosen
    nilpotent normal subgroup, the partial complement that becomes the
    next node, and the exponent of the former.  rule_uses holds at most
    one entry (step index, rule name, substituted bound): a rule can
    only close the chain at its end."""
    group: Group
    steps: tuple            # of (SubgroupSet N, SubgroupSet G_next, int e)
    value: int
    rule_uses: tuple = field(default=())


# -- the search ---------------------------------------------------------

def _div_minimal(vals):
    return tuple(sorted(v for v in vals
                        if not any(w != v and v % w == 0 for w in vals)))


class _Search:
    def __init__(self, g, rules):
        self.g = g
        self.rules = tuple(rules)
        key = tuple(r.name for r in self.rules)
        self.memo = g._rfrontiers.setdefault(key, {})
        self.pmode = _p_of(g.order) is not None and not self.rules

    def _chain_normals(self, h):
        """Nontrivial nilpotent subgroups normal in the subgroup h."""
        cache = self.g.__dict__.setdefault("_mask_cache", {}).setdefault(
            "chain_ns", {})
        got = cache.get(h)
        if got is None:
            g = self.g
            hgens = _greedy_gens(g, h)
            got = tuple(n for n in _subgroups_within(g, h)
                        if n != TRIVIAL and _is_nilpotent(g, n)
                        and _is_normal_in(g, n, hgens))
            cache[h] = got
        return got

    def frontier(self, h):
        got = self.memo.get(h)
        if got is not None:
            return got
        g = self.g
        cands = set()
        for rule in self.rules:
            if rule.predicate(g, h):
                cands.add(rule.bound)
        if h == TRIVIAL:
            cands.add(1)
            out = _div_minimal(cands)
            self.memo[h] = out
            return out

        if _is_nilpotent(g, h):
            eh = _exponent(g, h)
            if eh == _generating_exponent_mask(g, h) and not any(
                    r.may_fire_within(g, h) for r in self.rules):
                self.memo[h] = (eh,)
                return (eh,)

        pmode = self.pmode
        floor = _generating_exponent_mask(g, h) if pmode else None
        best = min(cands) if (pmode and cands) else None
        horder = h.bit_count()
        ns = sorted(self._chain_normals(h),
                    key=lambda n: (_exponent(g, n), -n.bit_count()))
        done = False
        for n in ns:
            en = _exponent(g, n)
            if pmode and best is not None and en >= best:
                break  # ns sorted by exponent; nothing better follows
            if n == h:
                cands.add(en)
                if pmode and (best is None or en < best):
                    best = en
                    done = best == floor
                if done:
                    break
                continue
            nord = n.bit_count()
            for u in _subgroups_within(g, h):
                if u == h:
                    continue
                if nord * u.bit_count() != horder * (u & n).bit_count():
                    continue
                if pmode and best is not None and max(
                        en, _generating_exponent_mask(g, u)) >= best:
                    continue
                for f in self.frontier(u):
                    v = lcm(en, f)
                    cands.add(v)
                    if pmode and (best is None or v < best):
                        best = v
                        if best == floor:
                            done = True
                            break
                if done:
                    break
            if done:
                break
        out = (best,) if (pmode and best is not None) else _div_minimal(cands)
        self.memo[h] = out
        return out

    def build_chain(self, h, target):
        """Deterministic series realizing an exact frontier value:
        greedy smallest-bitset choice of N, then of the complement,
        then smallest subtarget; a rule closes the node whenever its
        bound matches the target."""
        g = self.g
        for rule in self.rules:
            if rule.bound == target and rule.predicate(g, h):
                return [], (rule.name, rule.bound)
        if h == TRIVIAL:
            assert target == 1, "dead end at the trivial node"
            return [], None
        horder = h.bit_count()
        for n in sorted(self._chain_normals(h)):
            en = _exponent(g, n)
            if target % en:
                continue
            nord = n.bit_count()
            for u in sorted(_subgroups_within(g, h)):
                if u == h:
                    continue
                if nord * u.bit_count() != horder * (u & n).bit_count():
                    continue
                for f in self.frontier(u):
                    if lcm(en, f) == target:
                        tail, rule_use = self.build_chain(u, f)
                        return [(n, u, en)] + tail, rule_use
        raise AssertionError("frontier value %d not realizable" % target)


# -- public API ---------------------------------------------------------

def lcm_frontier(sub, rules=()):
    """Divisibility-minimal achievable series values for a subgroup."""
    g = sub.ambient
    h = sub.members
    if not _is_solvable(g, h):
        raise NoSeriesError("no series: subgroup is not solvable")
    return frozenset(_Search(g, rules).frontier(h))


def _run(g, rules):
    full = (1 << g.order) - 1
    if not _is_solvable(g, full):
        raise NoSeriesError("no series: group is not solvable")
    search = _Search(g, rules)
    front = search.frontier(full)
    value = min(front)
    raw_steps, rule_use = search.build_chain(full, value)
    steps = tuple((_wrap(g, n), _wrap(g, u), e) for n, u, e in raw_steps)
    rule_uses = ()
    if rule_use is not None:
        rule_uses = ((len(steps), rule_use[0], rule_use[1]),)
    check = lcm(*( [e for _, _, e in steps] + [b for _, _, b in rule_uses]
                   or [1] ))
    assert check == value, "witness value drifted from frontier minimum"
    return value, RWitness(group=g, steps=steps, value=value,
                           rule_uses=rule_uses)


def r_value(g):
    """The minimum lcm over rule-free series, with a witness."""
    return _run(g, ())


def r_prime(g, rules=DEFAULT_RULES):
    """The refined value: same recursion, but any node where a rule's
    predicate holds may be closed with the rule's bound."""
    return _run(g, rules)


# -- independent witness verification -----------------------------------

def _raw_closed(g, mask):
    ids = list(ids_of(mask))
    for i in ids:
        for j in ids:
            if not mask >> g.mul(i, j) & 1:
                return False
    return True


def _raw_span(g, ids):
    mask = TRIVIAL
    frontier = list(ids)
    for x in ids:
        mask |= 1 << x
    while frontier:
        nxt = []
        for x in frontier:
            for y in ids:
                z = g.mul(x, y)
                if not mask >> z & 1:
                    mask |= 1 << z
                    nxt.append(z)
        frontier = nxt
    return mask


def _raw_nilpotent(g, mask):
    ids = list(ids_of(mask))
    cur = mask
    while True:
        comms = set()
        for i in ids:
            for j in ids_of(cur):
                comms.add(g.commutator_id(i, j))
        nxt = _raw_span(g, sorted(comms)) if comms - {0} else TRIVIAL
        if nxt == cur:
            return cur == TRIVIAL
        cur = nxt


def check_witness(w, rules=DEFAULT_RULES):
    """Re-verify an RWitness from scratch: containments, closure,
    normality by full conjugation scan, nilpotency, the product
    covering count, properness, exponents, terminal condition, and the
    final lcm.  Shares nothing with the search except raw group
    arithmetic.  Returns (ok, reason)."""
    g = w.group
    cur = (1 << g.order) - 1
    parts = []
    for step, (nsub, usub, e) in enumerate(w.steps):
        n, u = nsub.members, usub.members
        if n & ~cur or u & ~cur:
            return False, "step %d: subgroup escapes its node" % step
        if n == TRIVIAL:
            return False, "step %d: trivial N" % step
        if not (_raw_closed(g, n) and _raw_closed(g, u)):
            return False, "step %d: not closed" % step
        for x in ids_of(cur):
            xi = g.inv[x]
            for y in ids_of(n):
                if not n >> g.mul(g.mul(xi, y), x) & 1:
                    return False, "step %d: N not normal" % step
        if not _raw_nilpotent(g, n):
            return False, "step %d: N not nilpotent" % step
        if u == cur:
            return False, "step %d: complement not proper" % step
        if n.bit_count() * u.bit_count() != \
                cur.bit_count() * (n & u).bit_count():
            return False, "step %d: N.U does not cover the node" % step
        ee = lcm(*(g.orders[i] for i in ids_of(n)))
        if ee != e:
            return False, "step %d: exponent mismatch" % step
        parts.append(e)
        cur = u
    if w.rule_uses:
        if len(w.rule_uses) != 1:
            return False, "multiple rule uses"
        idx, name, bound = w.rule_uses[0]
        if idx != len(w.steps):
            return False, "rule use not terminal"
        rule = next((r for r in rules if r.name == name), None)
        if rule is None:
            return False, "unknown rule %r" % name
        if rule.bound != bound:
            return False, "rule bound mismatch"
        if not rule.predicate(g, cur):
            return False, "rule predicate fails at the terminal node"
        parts.append(bound)
    elif cur != TRIVIAL:
        return False, "chain does not reach the trivial subgroup"
    if lcm(*(parts or [1])) != w.value:
        return False, "value mismatch"
    return True, "ok"
