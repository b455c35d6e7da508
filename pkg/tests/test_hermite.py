import random

import pytest

from helpers import DOMAINS, QQ5, lattice_eq, rand_pm
from prufer.domains import ZZ
from prufer.errors import DimensionError, NotInvertibleError, PreconditionError
from prufer.hermite import (complete_surjective, cokernel_structure, double_hermite, hermite,
                            image_pseudobasis, kernel_pseudobasis, pivot_invertible_minor,
                            right_inverse, zero_entry_pair, zero_entry_row)
from prufer.ideals import FgIdeal, principal, unit_ideal
from prufer.intlinalg import hnf_int
from prufer.matrix import mat_det, mat_mul
from prufer.pseudo import (PseudoMatrix, chains_equal, det_ideal, determinantal_chain,
                           determinantal_ideal, pm_is_invertible, pm_mul, usual)

w = QQ5.w
P = FgIdeal(QQ5, [2, 1 + w])
ONE = unit_ideal(QQ5)


def test_zero_entry_pair_examples():
    M, ideals, g = zero_entry_pair(ZZ, 7, 0, unit_ideal(ZZ), unit_ideal(ZZ))
    assert M == [[1, 0], [0, 1]] and g == 7
    M, (i1, i2), g = zero_entry_pair(ZZ, 4, 6, unit_ideal(ZZ), unit_ideal(ZZ))
    assert abs(g) == 2 and i1.is_one() and i2.is_one()
    assert 4 * M[0][1] + 6 * M[1][1] == 0
    M, (i1, i2), g = zero_entry_pair(QQ5, 2, 1 + w, ONE, ONE)
    assert g == 2 * (1 + w)
    assert lattice_eq(QQ5, i1.scale(g), P)
    assert 2 * M[0][1] + (1 + w) * M[1][1] == 0


def test_zero_entry_row_gauss_and_bezout_paths():
    A = PseudoMatrix(ZZ, [unit_ideal(ZZ)], [unit_ideal(ZZ)] * 2, [[3, 6]])
    Pm, AP = zero_entry_row(A)
    assert AP.entries == [[3, 0]] and Pm.entries == [[1, -2], [0, 1]]
    Pm, AP = zero_entry_row(A, bezout_only=True)
    assert AP.entries[0][1] == 0 and pm_is_invertible(Pm)
    A = PseudoMatrix(QQ5, [ONE], [ONE, ONE], [[2, 1 + w]])
    Pm, AP = zero_entry_row(A)
    assert pm_is_invertible(Pm) and AP.entries[0][1] == 0
    with pytest.raises(PreconditionError):
        zero_entry_row(PseudoMatrix(ZZ, [unit_ideal(ZZ)], [unit_ideal(ZZ)] * 2, [[0, 0]]))


def test_hermite_small_cases():
    h = hermite(usual(ZZ, [[0, 0], [0, 0]]))
    assert h.rank == 0 and h.verify()
    h = hermite(usual(ZZ, [[2, 1], [1, 1]]))
    assert h.rank == 2 and h.H.entries[0][1] == 0
    A = PseudoMatrix(QQ5, [ONE, ONE], [ONE, ONE, ONE], [[2, 1 + w, 0], [1, w, 3]])
    h = hermite(A)
    assert h.verify() and h.rank == 2
    assert h.H.entries[0][1] == 0 and h.H.entries[0][2] == 0 and h.H.entries[1][2] == 0
    # the first pivot spans the non-principal ideal <2, 1 + w>
    assert lattice_eq(QQ5, h.C.cols[0].scale(h.H.entries[0][0]), P)


def test_double_hermite_shape():
    A = PseudoMatrix(QQ5, [ONE, ONE, ONE], [ONE, ONE],
                     [[2, 1 + w], [4, 2 + 2 * w], [0, 0]])
    dh = double_hermite(A)
    assert dh.rank == 1 and dh.verify()
    for i in range(3):
        for j in range(2):
            if i >= 1 or j >= 1:
                assert dh.H.entries[i][j] == 0
    assert pm_is_invertible(dh.L) and pm_is_invertible(dh.C)


def _check_form(A, h, double):
    assert h.verify()
    r = h.rank
    assert r == max([k for k, I in enumerate(determinantal_chain(A), 1) if not I.is_zero], default=0)
    for i in range(A.n):
        for j in range(A.m):
            x = h.H.entries[i][j]
            if j >= r or (i < r and j > i) or (double and i >= r):
                assert x == 0
    assert all(h.H.entries[i][i] != 0 for i in range(r))
    assert pm_is_invertible(h.C) and pm_is_invertible(h.L)
    assert chains_equal(determinantal_chain(h.H), determinantal_chain(A))


@pytest.mark.parametrize("name", list(DOMAINS))
def test_random_reductions(name):
    D = DOMAINS[name]
    rng = random.Random(13)
    for _ in range(25):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        A = rand_pm(D, rng, n, m, density=rng.choice([0.4, 0.9]))
        _check_form(A, hermite(A), False)
        _check_form(A, double_hermite(A), True)
        _check_form(A, hermite(A, bezout_only=True), False)


def test_agrees_with_integer_hnf():
    rng = random.Random(17)
    from helpers import minor_gcds, rand_int_matrix

    for _ in range(60):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        M = rand_int_matrix(rng, n, m)
        h = hermite(usual(ZZ, M, m))
        assert h.rank == hnf_int(M, m).rank
        got = [ZZ.principal_generator(I.gens) if not I.is_zero else 0
               for I in determinantal_chain(h.H)]
        assert got == minor_gcds(M)


def test_pivot_invertible_minor():
    A = usual(ZZ, [[2, 1], [1, 1]])
    C, L, A2 = pivot_invertible_minor(A, 2)
    assert A2.entries == [[1, 0], [0, 1]]
    A = usual(ZZ, [[1, 2, 3], [2, 4, 6]])
    C, L, A2 = pivot_invertible_minor(A, 1)
    assert A2.entries == [[1, 0, 0], [0, 0, 0]]
    with pytest.raises(PreconditionError):
        pivot_invertible_minor(usual(ZZ, [[2, 1]]), 1)
    with pytest.raises(DimensionError):
        pivot_invertible_minor(A, 3)


def test_pivot_shift_identity():
    rng = random.Random(23)
    done = 0
    while done < 10:
        A = rand_pm(QQ5, rng, 3, 3, ideals=False, density=1.0)
        if not A.minor1(0, 0).is_one():
            continue
        _, _, A2 = pivot_invertible_minor(A, 1)
        rest = PseudoMatrix(QQ5, A2.rows[1:], A2.cols[1:], [r[1:] for r in A2.entries[1:]])
        for r in range(1, 3):
            assert determinantal_ideal(rest, r) == determinantal_ideal(A, r + 1)
        done += 1


def test_image_and_kernel_examples():
    A = PseudoMatrix(QQ5, [ONE], [ONE, ONE], [[2, 1 + w]])
    im = image_pseudobasis(A)
    assert len(im.vectors) == 1
    assert lattice_eq(QQ5, im.ideals[0].scale(im.vectors[0][0]), P)
    ker = kernel_pseudobasis(usual(ZZ, [[5, 5]]))
    (v,) = ker.vectors
    assert v[0] == -v[1] and ker.ideals[0].scale(v[0]) == unit_ideal(ZZ)
    assert kernel_pseudobasis(usual(ZZ, [[1, 0], [0, 1]])).vectors == []
    assert image_pseudobasis(usual(ZZ, [[0, 0]])).vectors == []


@pytest.mark.parametrize("name", list(DOMAINS))
def test_kernel_annihilated_and_ranks_add(name):
    D = DOMAINS[name]
    rng = random.Random(31)
    for _ in range(20):
        n, m = rng.randint(1, 3), rng.randint(1, 4)
        A = rand_pm(D, rng, n, m)
        im, ker = image_pseudobasis(A), kernel_pseudobasis(A)
        assert len(im.vectors) + len(ker.vectors) == m
        for v in ker.vectors:
            assert all(sum((A.entries[i][j] * v[j] for j in range(m)), D.zero) == 0
                       for i in range(n))
        # image generators lie in the target module
        for vec, I in zip(im.vectors, im.ideals):
            for g in I.gens:
                assert all(vec[i] * g in A.rows[i] for i in range(n))


def test_cokernel_examples():
    cs = cokernel_structure(usual(ZZ, [[2]]))
    assert det_ideal(cs.torsion) == principal(ZZ, 2)
    assert cs.projective.vectors == []
    cs = cokernel_structure(PseudoMatrix(QQ5, [ONE, ONE], [ONE], [[2], [1 + w]]))
    assert len(cs.projective.vectors) == 1
    assert det_ideal(cs.torsion) == P


def test_complete_surjective_examples():
    B = complete_surjective(usual(ZZ, [[1, 0, 0]]))
    assert abs(mat_det(ZZ, B.entries)) == 1
    A = usual(ZZ, [[2, 3]])
    B = complete_surjective(A)
    assert abs(mat_det(ZZ, B.entries)) == 1
    assert B.entries[0] == [2, 3]
    R = right_inverse(A, B)
    assert pm_mul(A, R).entries == [[1]]
    A = PseudoMatrix(QQ5, [ONE], [ONE, ONE], [[2, w]])
    assert determinantal_ideal(A, 1).is_one()
    B = complete_surjective(A)
    assert pm_is_invertible(B)
    assert pm_mul(A, right_inverse(A, B)).entries == [[1]]
    with pytest.raises(NotInvertibleError):
        complete_surjective(PseudoMatrix(QQ5, [ONE], [ONE, ONE], [[2, 1 + w]]))


def test_complete_surjective_random():
    rng = random.Random(37)
    done = 0
    while done < 15:
        A = rand_pm(QQ5, rng, 1, 3)
        if not determinantal_ideal(A, 1).is_one():
            continue
        B = complete_surjective(A)
        Binv = mat_mul(QQ5, A.entries, right_inverse(A, B).entries, inner=3, ncols=1)
        assert Binv == [[1]]
        done += 1
