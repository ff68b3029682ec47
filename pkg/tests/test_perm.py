import pytest

from grpbounds import perm


def test_identity_and_is_perm():
    assert perm.identity(4) == (0, 1, 2, 3)
    assert perm.is_perm((2, 0, 1))
    assert not perm.is_perm((0, 0, 1))
    assert not perm.is_perm(())


def test_compose_right_factor_first():
    a = perm.from_cycles(3, (0, 1))
    b = perm.from_cycles(3, (1, 2))
    # b first: 2 -> 1, then a: 1 -> 0
    assert perm.compose(a, b)[2] == 0
    assert perm.compose(b, a)[2] == 1


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        perm.compose((0, 1), (0, 1, 2))


def test_inverse():
    p = (2, 0, 3, 1)
    assert perm.compose(p, perm.inverse(p)) == perm.identity(4)
    assert perm.compose(perm.inverse(p), p) == perm.identity(4)


def test_power():
    c = perm.from_cycles(5, (0, 1, 2, 3, 4))
    assert perm.power(c, 5) == perm.identity(5)
    assert perm.power(c, -2) == perm.power(c, 3)
    assert perm.power(c, 0) == perm.identity(5)


def test_cycles_normal_form():
    p = perm.from_cycles(6, (3, 4), (0, 2, 1))
    assert perm.cycles(p) == [(0, 2, 1), (3, 4)]
    assert perm.cycles(perm.identity(3)) == []


def test_order():
    assert perm.order(perm.identity(4)) == 1
    p = perm.from_cycles(5, (0, 1), (2, 3, 4))
    assert perm.order(p) == 6


def test_from_cycles_rejects_overlap():
    with pytest.raises(ValueError):
        perm.from_cycles(4, (0, 1), (1, 2))


def test_commutator_and_conjugate():
    a = perm.from_cycles(3, (0, 1))
    b = perm.from_cycles(3, (0, 1, 2))
    ab = perm.compose(a, b)
    lhs = perm.compose(perm.compose(perm.inverse(a), perm.inverse(b)), ab)
    assert perm.commutator(a, b) == lhs
    assert perm.conjugate(b, a) == perm.compose(
        perm.compose(perm.inverse(a), b), a)
    # commuting pair
    c = perm.from_cycles(5, (0, 1))
    d = perm.from_cycles(5, (2, 3, 4))
    assert perm.commutator(c, d) == perm.identity(5)
