"""Random generators for ideals, pseudo-matrices and invertible transforms."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from prufer.domains import QuadraticOrder, ZZ
from prufer.ideals import FgIdeal, ideal_inverse, ideal_mul, simplify, unit_ideal
from prufer.intlinalg import det as int_det
from prufer.pseudo import PseudoMatrix

QQ5 = QuadraticOrder(-5)
DOMAINS = {"Z": ZZ, "Z[sqrt-5]": QQ5}


def rand_elem(D, rng: random.Random, bound: int = 6, nonzero: bool = False):
    while True:
        x = D.random_element(rng, bound)
        if x != 0 or not nonzero:
            return x


def rand_ideal(D, rng: random.Random, max_gens: int = 3, bound: int = 6, fractional: bool = True):
    k = rng.randint(1, max_gens)
    gens = [rand_elem(D, rng, bound) for _ in range(k)]
    if all(g == 0 for g in gens):
        gens[0] = rand_elem(D, rng, bound, nonzero=True)
    if fractional and rng.random() < 0.5:
        den = rng.randint(1, 4)
        gens = [g / den for g in gens]
    return FgIdeal(D, gens)


def rand_integral_ideal(D, rng, max_gens=3, bound=6):
    return rand_ideal(D, rng, max_gens, bound, fractional=False)


def rand_in_ideal(D, I: FgIdeal, rng: random.Random, bound: int = 3):
    """Small random element of ``I`` (combination of its generators)."""
    return sum((rand_elem(D, rng, bound) * g for g in I.gens), D.zero)


def rand_pm(D, rng: random.Random, n: int, m: int, ideals: bool = True, density: float = 0.8,
            bound: int = 3):
    one = unit_ideal(D)
    if ideals:
        rows = [simplify(rand_ideal(D, rng, 2, 4)) for _ in range(n)]
        cols = [simplify(rand_ideal(D, rng, 2, 4)) for _ in range(m)]
    else:
        rows, cols = [one] * n, [one] * m
    entries = []
    for i in range(n):
        row = []
        for j in range(m):
            if rng.random() > density:
                row.append(D.zero)
                continue
            allowed = simplify(ideal_mul(rows[i], ideal_inverse(cols[j])))
            row.append(rand_in_ideal(D, allowed, rng, bound))
        entries.append(row)
    return PseudoMatrix(D, rows, cols, entries)


def rand_unimodular(D, rng: random.Random, n: int, steps: int = None, bound: int = 2):
    """Product of random elementary matrices over the domain."""
    M = [[D.one if i == j else D.zero for j in range(n)] for i in range(n)]
    if n < 2:
        return M
    for _ in range(steps if steps is not None else 2 * n):
        i, j = rng.sample(range(n), 2)
        lam = rand_elem(D, rng, bound)
        for row in M:
            row[j] = row[j] + lam * row[i]
    return M


def rand_int_matrix(rng, n, m, bound=9, density=0.8):
    return [[rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(m)]
            for _ in range(n)]


def rand_torsion_matrix(D, rng, n, extra=0, bound=4):
    """``n x (n + extra)`` matrix over the domain with nonzero ``D_n``."""
    from prufer.matrix import mat_rank

    while True:
        M = [[rand_elem(D, rng, bound) if rng.random() < 0.7 else D.zero for _ in range(n + extra)]
             for _ in range(n)]
        if mat_rank(D, M, n + extra) == n:
            return M


def minor_gcds(M):
    """Brute-force determinantal divisors ``d_1, d_2, ...`` of an integer matrix."""
    from itertools import combinations
    from math import gcd

    n = len(M)
    m = len(M[0]) if M else 0
    out = []
    for r in range(1, min(n, m) + 1):
        g = 0
        for rows in combinations(range(n), r):
            for cols in combinations(range(m), r):
                g = gcd(g, int_det([[M[i][j] for j in cols] for i in rows]))
        out.append(g)
    return out


def lattice_mul(D, I, J):
    """Product ideal through Z-lattices only (independent of certificates)."""
    return D.lattice([a * b for a in I.gens for b in J.gens])


def lattice_eq(D, I, J) -> bool:
    if I.is_zero or J.is_zero:
        return I.is_zero and J.is_zero
    return D.lattice(I.gens) == D.lattice(J.gens)


def lattice_member(D, x, I) -> bool:
    if I.is_zero:
        return x == 0
    if D is ZZ or D.rank == 1:
        g = D.lattice(I.gens)[0]
        return (Fraction(x) / g).denominator == 1
    return D.lattice_contains(I.gens, x)
