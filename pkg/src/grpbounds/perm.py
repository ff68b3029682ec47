"""Permutation arithmetic on image tuples.

A permutation of degree n is a tuple p of length n whose entry p[i] is
the image of point i.  Points are 0-based everywhere inside the
library; the catalog file format is 1-based and converts at the
boundary.

Composition convention, fixed globally: the right factor acts first,

    compose(a, b)(x) = a(b(x))

All formulas in the package are transcribed to this convention.
"""

from math import lcm


def identity(n):
    return tuple(range(n))


def is_perm(p):
    """True iff p is a bijection on {0..len(p)-1}."""
    n = len(p)
    return n >= 1 and sorted(p) == list(range(n))


def compose(a, b):
    """a after b: maps x to a(b(x))."""
    if len(a) != len(b):
        raise ValueError("degree mismatch: %d vs %d" % (len(a), len(b)))
    return tuple(a[x] for x in b)


def inverse(p):
    q = [0] * len(p)
    for i, x in enumerate(p):
        q[x] = i
    return tuple(q)


def power(p, k):
    """p composed with itself k times; negative k uses the inverse."""
    if k < 0:
        p, k = inverse(p), -k
    q = identity(len(p))
    while k:
        if k & 1:
            q = compose(q, p)
        p = compose(p, p)
        k >>= 1
    return q


def cycles(p):
    """Nontrivial cycles of p, each rotated to start at its smallest
    point, sorted by that point.  Fixed points are omitted."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        seen[i] = True
        if p[i] == i:
            continue
        c = [i]
        j = p[i]
        while j != i:
            seen[j] = True
            c.append(j)
            j = p[j]
        out.append(tuple(c))
    return out


def order(p):
    """Least k >= 1 with p^k = identity: the lcm of the cycle lengths."""
    return lcm(*(len(c) for c in cycles(p)))


def commutator(a, b):
    """[a, b] = a^-1 b^-1 a b."""
    return compose(compose(inverse(a), inverse(b)), compose(a, b))


def conjugate(g, h):
    """g^h = h^-1 g h."""
    return compose(compose(inverse(h), g), h)


def from_cycles(n, *cycs):
    """Permutation of degree n given by disjoint cycles of 0-based points."""
    p = list(range(n))
    for c in cycs:
        for i, x in enumerate(c):
            if p[x] != x:
                raise ValueError("cycles are not disjoint at point %d" % x)
            p[x] = c[(i + 1) % len(c)]
    return tuple(p)
