import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import DOMAINS, QQ5, lattice_eq, lattice_member, lattice_mul, rand_ideal
from prufer.domains import ZZ
from prufer.errors import DomainError
from prufer.ideals import (FgIdeal, canonical_gens, colon_split, drop_superfluous, ideal_from_json,
                           ideal_includes, ideal_intersect, ideal_inverse, ideal_mul, ideal_sum,
                           ideal_to_json, loc_matrix, member, principal, simplify, unit_ideal,
                           zero_ideal)

w = QQ5.w
P = FgIdeal(QQ5, [2, 1 + w])


def Z(*gens):
    return FgIdeal(ZZ, gens)


def Q(*gens):
    return FgIdeal(QQ5, gens)


def test_loc_matrix_examples():
    assert loc_matrix(FgIdeal(ZZ, [2, 3], [-2, 3])) == [[-2, -3], [2, 3]]
    assert loc_matrix(unit_ideal(ZZ)) == [[1]]
    C = loc_matrix(FgIdeal(QQ5, [2, 1 + w], [-2, 3]))
    assert C == [[-2, -(1 + w)], [1 - w, 3]]
    with pytest.raises(DomainError):
        loc_matrix(zero_ideal(ZZ))


def test_drop_superfluous():
    I = FgIdeal(ZZ, [2, 3, 6], [-2, 3, 0])
    assert drop_superfluous(I).gens == (2, 3)
    assert drop_superfluous(Z(5)).gens == (5,)
    assert drop_superfluous(Z(0, 2)).gens == (2,)


def test_colon_split_examples():
    s, t = colon_split(Z(4), Z(6))
    assert s + t == 1
    assert ideal_includes(Z(4), Z(6).scale(s)) and ideal_includes(Z(6), Z(4).scale(t))
    s, t = colon_split(P, P)
    assert s + t == 1
    J = Q(3, 1 + w)
    s, t = colon_split(P, J)
    assert s + t == 1
    assert ideal_includes(P, J.scale(s)) and ideal_includes(J, P.scale(t))


def test_sum_intersect_mul_examples():
    assert ideal_sum(Z(4), Z(6)) == Z(2)
    assert ideal_sum(Z(4), Z(6)).gens == (4, 6)
    assert ideal_sum(P, zero_ideal(QQ5)) is P
    assert ideal_sum(P, Q(3, 1 + w)).is_one()
    assert ideal_intersect(Z(4), Z(6)) == Z(12)
    assert ideal_intersect(P, P) == P
    I = ideal_intersect(Q(2), Q(1 + w))
    for g in I.gens:
        assert lattice_member(QQ5, g, Q(2)) and lattice_member(QQ5, g, Q(1 + w))
    # <2> = P^2, so <2> n <1 + w> = (1 + w) P
    assert QQ5.lattice(I.gens) == QQ5.lattice([(1 + w) * g for g in P.gens])
    assert ideal_mul(P, P) == Q(2)
    assert ideal_mul(unit_ideal(QQ5), P) == P
    assert ideal_mul(P, Q(3, 1 + w)) == Q(1 + w)


def test_inverse_examples():
    assert ideal_inverse(Z(4, 6)) == FgIdeal(ZZ, [ZZ.K(1) / 2])
    assert ideal_inverse(unit_ideal(ZZ)).is_one()
    inv = ideal_inverse(P)
    assert lattice_eq(QQ5, inv, Q(1, (1 - w) / 2))
    assert ideal_mul(P, inv).is_one()
    with pytest.raises(DomainError):
        ideal_inverse(zero_ideal(ZZ))


def test_membership_examples():
    assert 10 in Z(4, 6)
    assert member(0, P) and member(0, zero_ideal(QQ5))
    assert not member(1, zero_ideal(QQ5))
    assert 1 not in P
    assert ideal_includes(Z(4, 6), Z(2))
    assert P == Q(2, 1 - w)


@pytest.mark.parametrize("name", list(DOMAINS))
def test_random_identities(name):
    D = DOMAINS[name]
    rng = random.Random(11)
    for _ in range(80):
        I = rand_ideal(D, rng, 3, 7)
        J = rand_ideal(D, rng, 3, 7)
        assert ideal_mul(I, ideal_inverse(I)).is_one()
        # (I + J)(I n J) = I J
        assert ideal_mul(ideal_sum(I, J), ideal_intersect(I, J)) == ideal_mul(I, J)
        assert lattice_eq(D, ideal_mul(I, J), FgIdeal(D, lattice_gens(D, lattice_mul(D, I, J))))
        s, t = colon_split(I, J)
        assert s + t == D.one
        assert ideal_includes(I, J.scale(s)) and ideal_includes(J, I.scale(t))
        for _ in range(3):
            x = D.K(D.random_element(rng, 6)) / rng.randint(1, 4)
            assert member(x, I) == lattice_member(D, x, I)
        assert simplify(I) == I
        assert lattice_eq(D, simplify(I), I)


def lattice_gens(D, lat):
    if D.rank == 1:
        return [lat[0]]
    a, b, c = lat
    return [D.K(a), D.K(b) + D.K(c) * D.w]


def test_canonical_generators_and_json():
    assert canonical_gens(P) == [QQ5.K(2), 1 + w]
    assert canonical_gens(Q(2, 2 * w)) == [QQ5.K(2)]
    inv = ideal_inverse(P)
    data = ideal_to_json(inv)
    assert data == {"num_gens": [["2", "0"], ["1", "1"]], "den": "2"}
    assert ideal_from_json(QQ5, data) == inv
    assert ideal_to_json(Z(4, 6)) == {"num_gens": ["2"], "den": "1"}
    assert ideal_from_json(ZZ, {"num_gens": ["3", "6"], "den": "4"}) == FgIdeal(ZZ, [ZZ.K(3) / 4])


def test_equal_ideals_equal_canonical_form():
    assert ideal_to_json(Q(2, 1 - w)) == ideal_to_json(P)
    assert repr(Q(1 + w, 2, 6)) == repr(P) == "<2, 1 + √(-5)>"


small = st.integers(-20, 20)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=1, max_size=4), st.integers(1, 6))
def test_inverse_property(pairs, den):
    gens = [QQ5(x, y, den) for x, y in pairs]
    if all(g == 0 for g in gens):
        return
    I = FgIdeal(QQ5, gens)
    C = loc_matrix(I)
    n = len(C)
    assert sum((C[i][i] for i in range(n)), QQ5.zero) == 1
    assert all(sum((C[i][k] * C[k][j] for k in range(n)), QQ5.zero) == C[i][j]
               for i in range(n) for j in range(n))
    assert lattice_mul(QQ5, I, ideal_inverse(I)) == QQ5.lattice([1])


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-60, 60), min_size=1, max_size=4), st.integers(1, 9))
def test_integer_ideals_are_gcds(gens, den):
    from math import gcd
    from fractions import Fraction

    g = 0
    for x in gens:
        g = gcd(g, x)
    if g == 0:
        return
    I = FgIdeal(ZZ, [Fraction(x, den) for x in gens])
    assert I == principal(ZZ, Fraction(g, den))
