"""Constructors for named families, direct products and wreath
products, all as concrete permutation groups."""

from .group import DEFAULT_CAP, Group


def cyclic(n, cap=DEFAULT_CAP):
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return Group([], degree=1, cap=cap)
    return Group([tuple(range(1, n)) + (0,)], degree=n, cap=cap)


def dihedral(order, cap=DEFAULT_CAP):
    """Dihedral group of the given (even) order 2m.  For m >= 3 this is
    the symmetry group of the m-gon; the abelian degenerate cases m = 1
    and m = 2 get faithful models on 2 and 4 points."""
    if order < 2 or order % 2:
        raise ValueError("order must be even and >= 2")
    m = order // 2
    if m == 1:
        return Group([(1, 0)], degree=2, cap=cap)
    if m == 2:
        return Group([(1, 0, 2, 3), (0, 1, 3, 2)], degree=4, cap=cap)
    rot = tuple(range(1, m)) + (0,)
    ref = tuple((m - i) % m for i in range(m))
    g = Group([rot, ref], degree=m, cap=cap)
    assert g.order == order
    return g


def elementary_abelian(p, k, cap=DEFAULT_CAP):
    """(C_p)^k on k disjoint blocks of p points, one generator each."""
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise ValueError("p must be prime")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return Group([], degree=1, cap=cap)
    gens = []
    for b in range(k):
        images = list(range(p * k))
        for i in range(p):
            images[b * p + i] = b * p + (i + 1) % p
        gens.append(tuple(images))
    g = Group(gens, degree=p * k, cap=cap)
    assert g.order == p ** k
    return g


def direct_product(a, b, cap=DEFAULT_CAP):
    """Action on the disjoint union of the point sets."""
    da, db = a.degree, b.degree
    gens = []
    for x in a.generators:
        gens.append(tuple(x) + tuple(i + da for i in range(db)))
    for y in b.generators:
        gens.append(tuple(range(da)) + tuple(i + da for i in y))
    if not gens:
        return Group([], degree=da + db, cap=cap)
    g = Group(gens, degree=da + db, cap=cap)
    assert g.order == a.order * b.order
    return g


def wreath(g, h, cap=DEFAULT_CAP):
    """g wreath h: one copy of g per point of h, h permuting the
    copies.  Imprimitive action on deg(g) * deg(h) points; h acts with
    its own given degree, which is read as the index set.

    Generator layout: copies of g's generators in the block of the
    smallest point of each h-orbit (block 0 first), then h's
    generators permuting blocks.  For transitive h that is exactly one
    block-0 copy; the per-orbit copies keep the base subgroup complete
    when h leaves some blocks fixed.
    """
    n = h.degree
    dg = g.degree
    degree = dg * n

    orbit_reps = []
    seen = set()
    for pt in range(n):
        if pt in seen:
            continue
        orbit = {pt}
        queue = [pt]
        while queue:
            x = queue.pop()
            for y in h.generators:
                if y[x] not in orbit:
                    orbit.add(y[x])
                    queue.append(y[x])
        seen |= orbit
        orbit_reps.append(min(orbit))

    gens = []
    for rep in orbit_reps:
        for x in g.generators:
            images = list(range(degree))
            for i in range(dg):
                images[rep * dg + i] = rep * dg + x[i]
            gens.append(tuple(images))
    for y in h.generators:
        images = [0] * degree
        for b in range(n):
            for i in range(dg):
                images[b * dg + i] = y[b] * dg + i
        gens.append(tuple(images))

    if not gens:
        return Group([], degree=max(degree, 1), cap=cap)
    w = Group(gens, degree=degree, cap=cap)
    assert w.order == g.order ** n * h.order
    return w
