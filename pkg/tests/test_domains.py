import random

import pytest

from helpers import minor_gcds, rand_int_matrix
from prufer.arith import certificate_is_valid, comax_certificate
from prufer.domains import QuadraticOrder, ZZ, make_domain
from prufer.errors import DomainError, EmptyIdealError, MalformedInputError
from prufer.intlinalg import hnf_int, is_unimodular, matmul, snf_int, solve_int_linear
from prufer.quotient import QuotientRing

D5 = QuadraticOrder(-5)
w = D5.w


# ---- integer engine

def test_hnf_examples():
    h = hnf_int([[2, 4]])
    assert h.rank == 1 and h.pivots == (2,)
    assert hnf_int([[0]]).rank == 0
    h = hnf_int([[2, 1], [0, 3]])
    assert h.rank == 2 and abs(h.pivots[0] * h.pivots[1]) == 6


def test_snf_examples():
    assert snf_int([[2, 0], [0, 3]]).diagonal == (1, 6)
    assert snf_int([[1, 0], [0, 1]]).diagonal == (1, 1)
    s = snf_int([[4, 6], [0, 0]])
    assert s.diagonal == (2,) and s.rank == 1


def test_integer_engine_random():
    rng = random.Random(3)
    for _ in range(500):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        M = rand_int_matrix(rng, n, m, bound=12)
        h = hnf_int(M, m)
        assert matmul(matmul(h.left, M), h.right) == h.form
        assert is_unimodular(h.right) and is_unimodular(h.left)
        k = h.rank
        for i in range(n):
            for j in range(m):
                if j >= k or (i < k and j > i):
                    assert h.form[i][j] == 0
        s = snf_int(M, m)
        assert matmul(matmul(s.left, M), s.right) == s.form
        assert is_unimodular(s.left) and is_unimodular(s.right)
        d = [abs(x) for x in s.diagonal]
        assert all(b % a == 0 for a, b in zip(d, d[1:]))
        chain = [g for g in minor_gcds(M) if g]
        prod = 1
        for i, g in enumerate(chain):
            prod *= d[i]
            assert prod == g


def test_solve_int_linear():
    x, ker = solve_int_linear([[2]], [4])
    assert x == [2] and ker == []
    assert solve_int_linear([[2]], [3]) is None
    x, ker = solve_int_linear([[2, 3]], [1])
    assert 2 * x[0] + 3 * x[1] == 1
    assert len(ker) == 1 and 2 * ker[0][0] + 3 * ker[0][1] == 0
    assert sorted(map(abs, ker[0])) == [2, 3]


# ---- quadratic orders

def test_domain_validation():
    with pytest.raises(MalformedInputError):
        QuadraticOrder(12)
    with pytest.raises(MalformedInputError):
        QuadraticOrder(1)
    with pytest.raises(MalformedInputError):
        QuadraticOrder(0)
    with pytest.raises(MalformedInputError):
        QuadraticOrder(5, order="sqrt")
    with pytest.raises(MalformedInputError):
        QuadraticOrder(10**7 + 19)
    assert QuadraticOrder(-5, order="sqrt").w_square == (-5, 0)
    assert make_domain({"type": "int"}) is ZZ
    assert make_domain({"type": "quadratic", "d": "-5"}).d == -5
    with pytest.raises(MalformedInputError):
        make_domain({"type": "cubic"})


def test_omega_choice():
    assert QuadraticOrder(-3).w_square == (-1, 1)   # w = (1 + sqrt(-3)) / 2
    assert QuadraticOrder(5).w_square == (1, 1)
    assert QuadraticOrder(-5).w_square == (-5, 0)
    assert QuadraticOrder(10).w_square == (10, 0)


def test_zbasis_examples():
    assert D5.ideal_zbasis([2, 1 + w]) == (D5(2), D5(1, 1))
    assert D5.ideal_zbasis([1]) == (D5(1), D5(0, 1))
    assert D5.ideal_zbasis([2]) == (D5(2), D5(0, 2))
    # independent of generator order
    assert D5.ideal_zbasis([1 + w, 2, 6]) == D5.ideal_zbasis([2, 1 + w])
    with pytest.raises(EmptyIdealError):
        D5.ideal_zbasis([0])


@pytest.mark.parametrize("d", [-5, -3, -1, 2, 5, 10, -23])
def test_certificates_across_fields(d):
    D = QuadraticOrder(d)
    rng = random.Random(d)
    for _ in range(60):
        gens = [D.random_element(rng, 8) for _ in range(rng.randint(1, 3))]
        if all(g == 0 for g in gens):
            continue
        cert = comax_certificate(D, gens)
        assert certificate_is_valid(D, [D.K(g) for g in gens], cert)
        # the lattice oracle agrees that the certificate describes the same ideal
        lat = D.lattice(gens)
        assert all(D.lattice_contains(gens, g) for g in gens)
        assert lat == D.lattice(list(reversed(gens)))


def test_lattice_membership_oracle():
    p = [D5.K(2), 1 + w]
    assert not D5.lattice_contains(p, 1)
    assert D5.lattice_contains(p, 1 - w)
    assert D5.lattice_contains(p, 6)
    assert not D5.lattice_contains(p, w)


def test_rendering():
    assert D5.fmt(1 + w) == "1 + √(-5)"
    assert D5.fmt((1 - w) / 2) == "(1 - √(-5))/2"
    D = QuadraticOrder(-3)
    assert D.fmt(D.w) == "(1 + √(-3))/2"


# ---- quotient rings

def test_quotient_sizes():
    R = QuotientRing(ZZ, 6)
    assert R.size == 6 and sorted(R.elements()) == list(range(6))
    R2 = QuotientRing(D5, 2)
    assert R2.size == 4
    assert R2.eq(1 + w, 3 + w)
    assert not R2.eq(1 + w, w)
    with pytest.raises(DomainError):
        QuotientRing(ZZ, 0)


def test_quotient_divide_and_units():
    R = QuotientRing(ZZ, 6)
    q = R.divide(2, 4)
    assert R.eq(q * 2, 4)
    assert R.divide(2, 3) is None
    assert sorted(R.units()) == [1, 5]
    R2 = QuotientRing(D5, 1 + w)   # norm 6
    assert R2.size == 6
    for u in R2.units():
        assert R2.eq(u * R2.inverse(u), 1)


def test_quotient_split_idempotent():
    R = QuotientRing(ZZ, 12)
    for s in range(12):
        e, sinv = R.split(s)
        assert R.eq(e * e, e)
        assert R.eq(s * sinv, e)
        # s is nilpotent modulo e
        assert R.nilpotency_index((1 - e) * s) is not None
