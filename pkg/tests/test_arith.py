import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import DOMAINS, QQ5, rand_elem
from prufer.arith import certificate_is_valid, comax_certificate, divides, field_normalize
from prufer.domains import ZZ
from prufer.errors import DomainError, EmptyIdealError, MalformedInputError

w = QQ5.w


def test_field_normalize_integers():
    assert field_normalize(ZZ, 4, 6) == Fraction(2, 3)
    x = field_normalize(ZZ, 0, 5)
    assert x == 0 and x.denominator == 1


def test_field_normalize_quadratic_content():
    x = field_normalize(QQ5, 2 + 2 * w, 2)
    assert x == 1 + w
    assert (x.x, x.y, x.den) == (1, 1, 1)


def test_field_normalize_zero_denominator():
    with pytest.raises(MalformedInputError):
        field_normalize(ZZ, 1, 0)


def test_divides():
    assert divides(ZZ, 3, 12) == 4
    assert divides(QQ5, 1 + w, 6) == 1 - w
    assert divides(QQ5, 2, 1 + w) is None
    with pytest.raises(DomainError):
        divides(ZZ, 0, 3)


def test_certificate_examples():
    assert comax_certificate(ZZ, [2, 3]) == [-2, 3]
    assert comax_certificate(ZZ, [1]) == [1]
    for D in DOMAINS.values():
        assert comax_certificate(D, [D.one]) == [D.one]
    cert = comax_certificate(QQ5, [2, 1 + w])
    assert cert == [-1 + w, 2 - w]   # golden value
    assert certificate_is_valid(QQ5, [QQ5.K(2), 1 + w], cert)
    # (-2, 3): -2 (1 + w) / 2 = -(1 + w) and 3 * 2 / (1 + w) = 1 - w are integral
    assert certificate_is_valid(QQ5, [QQ5.K(2), 1 + w], [QQ5.K(-2), QQ5.K(3)])
    assert not certificate_is_valid(QQ5, [QQ5.K(2), 1 + w], [QQ5.K(-1), QQ5.K(2)])
    assert not certificate_is_valid(QQ5, [QQ5.K(2), 1 + w], [QQ5.K(3), 1 - w])
    cert = comax_certificate(QQ5, [3, 3 * w])
    assert certificate_is_valid(QQ5, [QQ5.K(3), 3 * w], cert)


def test_certificate_zero_generators():
    with pytest.raises(EmptyIdealError):
        comax_certificate(ZZ, [0, 0])
    with pytest.raises(EmptyIdealError):
        comax_certificate(QQ5, [])
    cert = comax_certificate(QQ5, [0, 2])
    assert cert[0] == 0


@pytest.mark.parametrize("name", list(DOMAINS))
def test_random_certificates(name):
    D = DOMAINS[name]
    rng = random.Random(7)
    for _ in range(200):
        gens = [rand_elem(D, rng, 12) for _ in range(rng.randint(1, 4))]
        if all(g == 0 for g in gens):
            continue
        gens = [D.K(g) / rng.randint(1, 5) for g in gens]
        cert = comax_certificate(D, gens)
        assert sum(cert, D.zero) == D.one
        for a_i, s_i in zip(gens, cert):
            if s_i != 0:
                for a_j in gens:
                    assert D.is_integral(s_i * a_j / a_i)
        # validity survives rescaling by any nonzero field element
        lam = D.K(rand_elem(D, rng, 5, nonzero=True)) / rng.randint(1, 7)
        assert certificate_is_valid(D, [lam * g for g in gens], cert)


coords = st.integers(-50, 50)


@settings(max_examples=60, deadline=None)
@given(coords, coords, coords, coords, coords, coords, st.integers(1, 9), st.integers(1, 9))
def test_quadratic_field_axioms(a, b, c, d, e, f, m, n):
    x = QQ5(a, b, m)
    y = QQ5(c, d, n)
    z = QQ5(e, f)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    if x != 0:
        assert x * (1 / x) == 1
        assert (y / x) * x == y


@settings(max_examples=60, deadline=None)
@given(coords, coords, st.integers(1, 20))
def test_norm_is_multiplicative(a, b, k):
    x = QQ5(a, b)
    y = QQ5(b, k)
    assert (x * y).norm() == x.norm() * y.norm()
    assert x * x.conjugate() == x.norm()


def test_quadratic_canonical_form():
    D = QQ5
    assert D(2, 4, 6) == D(1, 2, 3)
    x = D(4, 2, -6)
    assert x.den > 0
    assert hash(D(3, 0)) == hash(D(6, 0, 2))
    assert D.K(Fraction(1, 2)) == D(1, 0, 2)
    assert D.K([1, 2]) == 1 + 2 * w
