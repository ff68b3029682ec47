"""Fully enumerated finite permutation groups.

Group closes a generator list under composition and indexes the result.
Element ids are assigned in breadth-first order from the identity, with
generators applied on the right in input order, so the numbering is a
pure function of the generator list.  Id 0 is always the identity.

All mutable construction state is private; a Group is immutable once
built and safe to share between threads.
"""

from math import lcm

import numpy as np

from . import perm

DEFAULT_CAP = 100_000

# Dense multiplication tables are only built below this order.  The
# largest order any lattice or series computation touches is a few
# hundred; scans never need tables for bigger groups.
TABLE_LIMIT = 4096


class ClosureOverflow(RuntimeError):
    """Closure exceeded the configured element cap."""


class Group:
    def __init__(self, gens, degree=None, cap=DEFAULT_CAP):
        gens = [tuple(g) for g in gens]
        if degree is None:
            if not gens:
                raise ValueError("degree required for an empty generator list")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise ValueError("degree mismatch: %d vs %d" % (len(g), degree))
            if not perm.is_perm(g):
                raise ValueError("not a permutation: %r" % (g,))
        self.degree = degree
        self.generators = tuple(gens)

        e = perm.identity(degree)
        elements = [e]
        index = {e: 0}
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = perm.compose(x, g)
                    if y not in index:
                        if len(elements) >= cap:
                            raise ClosureOverflow(
                                "closure exceeds cap %d" % cap)
                        index[y] = len(elements)
                        elements.append(y)
                        nxt.append(y)
            frontier = nxt
        self.elements = tuple(elements)
        self.index = index
        self.order = len(elements)

        self._table = None
        self._inv = None
        self._orders = None
        self._conj_classes = None
        self._subgroups = None       # lattice cache, owned by subgroups.py
        self._rfrontiers = {}        # per-rule-set memo, owned by rsearch.py

    # -- multiplication ------------------------------------------------

    def mul(self, i, j):
        """Id of elements[i] * elements[j] (right factor acts first)."""
        if self._table is not None:
            return int(self._table[i, j])
        return self.index[perm.compose(self.elements[i], self.elements[j])]

    @property
    def table(self):
        """Dense multiplication table; built on first use."""
        if self._table is None:
            if self.order > TABLE_LIMIT:
                raise ClosureOverflow(
                    "refusing a dense table at order %d" % self.order)
            E = np.array(self.elements, dtype=np.uint16)
            if self.degree == 0:
                E = E.reshape(self.order, 0)
            key = {E[j].tobytes(): j for j in range(self.order)}
            dtype = np.int16 if self.order < 2 ** 15 else np.int32
            t = np.empty((self.order, self.order), dtype=dtype)
            for i in range(self.order):
                rows = E[i][E]
                t[i] = [key[r.tobytes()] for r in rows]
            self._table = t
        return self._table

    @property
    def inv(self):
        """inv[i] is the id of the inverse of elements[i]."""
        if self._inv is None:
            self._inv = tuple(self.index[perm.inverse(x)]
                              for x in self.elements)
        return self._inv

    @property
    def orders(self):
        """orders[i] is the order of elements[i] (lcm of cycle lengths)."""
        if self._orders is None:
            self._orders = tuple(perm.order(x) for x in self.elements)
        return self._orders

    def element_order(self, i):
        return self.orders[i]

    def commutator_id(self, i, j):
        """Id of [x_i, x_j] = x_i^-1 x_j^-1 x_i x_j."""
        m = self.mul
        return m(m(self.inv[i], self.inv[j]), m(i, j))

    def conjugate_id(self, g, h):
        """Id of x_g^x_h = x_h^-1 x_g x_h."""
        m = self.mul
        return m(m(self.inv[h], g), h)

    def power_id(self, i, k):
        """Id of elements[i]^k."""
        if k < 0:
            i, k = self.inv[i], -k
        r = 0
        while k:
            if k & 1:
                r = self.mul(r, i)
            i = self.mul(i, i)
            k >>= 1
        return r

    # -- structure -----------------------------------------------------

    @property
    def generator_ids(self):
        return tuple(self.index[g] for g in self.generators)

    @property
    def exponent(self):
        return lcm(*self.orders)

    def center_ids(self):
        """Ids of central elements.  Commuting with every generator is
        enough, since the generators span the group."""
        gids = self.generator_ids
        return tuple(i for i in range(self.order)
                     if all(self.mul(i, j) == self.mul(j, i) for j in gids))

    @property
    def conjugacy_classes(self):
        """Conjugacy classes as sorted id tuples, ordered by smallest
        member.  Orbits of conjugation by the generators."""
        if self._conj_classes is None:
            gids = self.generator_ids
            seen = [False] * self.order
            classes = []
            for i in range(self.order):
                if seen[i]:
                    continue
                orbit = {i}
                queue = [i]
                seen[i] = True
                while queue:
                    x = queue.pop()
                    for h in gids:
                        y = self.conjugate_id(x, h)
                        if y not in orbit:
                            orbit.add(y)
                            seen[y] = True
                            queue.append(y)
                classes.append(tuple(sorted(orbit)))
            self._conj_classes = tuple(classes)
        return self._conj_classes

    def __len__(self):
        return self.order

    def __repr__(self):
        return "Group(order=%d, degree=%d, gens=%d)" % (
            self.order, self.degree, len(self.generators))


def trivial_group(degree=1):
    return Group([], degree=degree)
