import pytest

from grpbounds import subgroups
from grpbounds.group import Group
from grpbounds.iso import is_isomorphic
from grpbounds.perm import from_cycles
from grpbounds.subgroups import (TRIVIAL, all_subgroup_masks, all_subgroups,
                                 fitting, ids_of, is_normal, mask_of,
                                 normal_subgroup_masks, partial_complements,
                                 quotient_group, span, subgroup_group)


def grp(*cycs_list, degree):
    return Group([from_cycles(degree, *c) for c in cycs_list])


def s3():
    return grp([(0, 1)], [(0, 1, 2)], degree=3)


def s4():
    return grp([(0, 1)], [(0, 1, 2, 3)], degree=4)


def a4():
    return grp([(0, 1, 2)], [(1, 2, 3)], degree=4)


def d8():
    return grp([(0, 1, 2, 3)], [(1, 3)], degree=4)


def q8():
    return Group([(2, 3, 1, 0, 6, 7, 5, 4), (4, 5, 7, 6, 1, 0, 2, 3)])


def test_mask_helpers():
    assert list(ids_of(0b1011)) == [0, 1, 3]
    assert mask_of([0, 1, 3]) == 0b1011
    assert mask_of([]) == 0
    assert list(ids_of(0)) == []


def test_span():
    g = s3()
    rot = g.generator_ids[1]
    sub = span(g, [rot])
    assert sub.order == 3
    assert sub.gens == (rot,)
    assert sub.validate()
    # redundant input ids are dropped from the recorded generators
    sub2 = span(g, [rot, g.mul(rot, rot)])
    assert sub2.members == sub.members
    assert sub2.gens == (rot,)
    assert span(g, []).members == TRIVIAL


# counts pinned from the standard subgroup tallies for these groups
@pytest.mark.parametrize("make,count", [
    (s3, 6),
    (d8, 10),
    (q8, 6),
    (a4, 10),
    (s4, 30),
    (lambda: grp([(0, 1)], [(2, 3)], [(4, 5)], degree=6), 16),    # C2^3
    (lambda: grp([(0, 1)], [(2, 3)], [(4, 5)], [(6, 7)], degree=8), 67),
    (lambda: grp([(0, 1, 2)], [(3, 4, 5)], degree=6), 6),         # C3^2
    (lambda: grp([(0, 1, 2, 3, 4, 5)], degree=6), 4),             # C6
])
def test_lattice_counts(make, count):
    g = make()
    masks = all_subgroup_masks(g)
    assert len(masks) == count
    assert masks[0] == TRIVIAL
    assert masks[-1] == (1 << g.order) - 1
    for sub in all_subgroups(g):
        assert sub.validate()


def test_lattice_sorted_and_memoized():
    g = d8()
    masks = all_subgroup_masks(g)
    assert list(masks) == sorted(masks, key=lambda m: (m.bit_count(), m))
    assert all_subgroup_masks(g) is masks


def test_normality():
    g = s3()
    rot = span(g, [g.generator_ids[1]])
    refl = span(g, [g.generator_ids[0]])
    assert is_normal(rot)
    assert not is_normal(refl)
    normals = normal_subgroup_masks(g)
    assert len(normals) == 3  # 1, C3, S3
    assert rot.members in normals
    assert refl.members not in normals


def test_normals_of_a4():
    g = a4()
    normals = normal_subgroup_masks(g)
    sizes = sorted(m.bit_count() for m in normals)
    assert sizes == [1, 4, 12]


def test_normals_abelian_is_whole_lattice():
    g = grp([(0, 1)], [(2, 3)], [(4, 5)], degree=6)
    assert normal_subgroup_masks(g) == all_subgroup_masks(g)


def test_partial_complements():
    g = s3()
    rot = span(g, [g.generator_ids[1]])
    comps = partial_complements(g, rot)
    # the three reflection subgroups, and nothing else
    assert sorted(c.order for c in comps) == [2, 2, 2]
    for c in comps:
        assert (c.members & rot.members) == TRIVIAL
    full = span(g, list(g.generator_ids))
    everything = partial_complements(g, full)
    assert len(everything) == 5  # every proper subgroup qualifies
    with pytest.raises(ValueError):
        partial_complements(g, span(g, [g.generator_ids[0]]))


def test_commutator_span_and_derived():
    g = s4()
    full = span(g, list(g.generator_ids))
    der = subgroups.commutator_span(full, full)
    assert der.order == 12
    series = subgroups._derived_series_masks(g, full.members)
    assert [m.bit_count() for m in series] == [24, 12, 4, 1]
    assert subgroups._is_solvable(g, full.members)


def test_lower_central_series():
    g = d8()
    full = (1 << 8) - 1
    lcs = subgroups._lower_central_masks(g, full)
    assert [m.bit_count() for m in lcs] == [8, 2, 1]
    assert subgroups._nilpotency_class(g, full) == 2
    s = s3()
    lcs3 = subgroups._lower_central_masks(s, (1 << 6) - 1)
    assert lcs3[-1].bit_count() == 3  # stabilizes at the rotations
    assert subgroups._nilpotency_class(s, (1 << 6) - 1) is None


def test_fitting():
    assert fitting(s4()).order == 4
    assert fitting(s3()).order == 3
    g = d8()
    assert fitting(g).order == 8


def test_subgroup_group_and_quotient():
    g = s4()
    masks = all_subgroup_masks(g)
    v4 = next(m for m in masks if m.bit_count() == 4 and
              subgroups._is_normal_in(g, m, g.generator_ids))
    v = subgroup_group(g, v4)
    assert v.order == 4
    assert v.exponent == 2
    q = quotient_group(g, v4)
    assert q.order == 6
    assert is_isomorphic(q, s3())
    with pytest.raises(ValueError):
        quotient_group(s3(), span(s3(), [s3().generator_ids[0]]).members)


def test_quotient_of_center():
    g = q8()
    center = mask_of([i for i in range(8) if all(
        g.mul(i, j) == g.mul(j, i) for j in range(8))])
    q = quotient_group(g, center)
    assert q.order == 4
    assert q.exponent == 2  # Q8 over its center is the Klein group


def test_exponent_mask():
    g = d8()
    full = (1 << 8) - 1
    assert subgroups._exponent(g, full) == 4
    assert subgroups._exponent(g, TRIVIAL) == 1
