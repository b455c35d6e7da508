"""Smith forms in dimension one and the structure of torsion modules.

* :func:`smith_bezout_dim1`: Smith form of an integer matrix, reducing the
  triangular part modulo its determinant and lifting.
* :func:`smith_pseudo_dedekind`: Smith form of a pseudo-matrix over a
  Dedekind domain (Z or a maximal quadratic order).
* :func:`torsion_structure` and :func:`fitting_ideals`: invariant ideals
  ``a_1 >= a_2 >= ... >= a_n`` of a torsion module and its Fitting ideals.
* :func:`smith_change_pseudobasis_square` / ``_wide``: a change of
  pseudo-basis bringing a usual matrix to ``I`` or ``[I | 0]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .arith import PruferDomain
from .domains import ZZ
from .errors import DimensionError, InvariantViolation, NotInvertibleError, PreconditionError
from .hermite import complete_surjective, zero_entry_pair
from .ideals import (FgIdeal, ideal_includes, ideal_inverse, ideal_mul, member, principal, simplify,
                     unit_ideal, zero_ideal)
from .intlinalg import det as int_det
from .intlinalg import hnf_int, identity as int_identity, is_unimodular, matmul as int_matmul
from .matrix import mat_det, mat_identity, mat_inverse, mat_mul, mat_rank, submatrix
from .pseudo import (PseudoMatrix, determinantal_ideal, ideal_product, pm_equal, pm_is_invertible,
                     pm_mul, usual)
from .quotient import QuotientRing
from .zerodim import smith_zero_dim


@dataclass
class SmithForm:
    """``L A C == S`` with ``S`` diagonal.

    ``diagonal`` holds integers (integer Smith form) or the chain of ideals
    ``c_i = s_ii e_i h_i^-1`` (pseudo-matrix Smith form).
    """

    kind: str
    L: object
    C: object
    S: object
    diagonal: list
    rounds: int = 0


def _int_double_hermite(M):
    """Unimodular ``L, C`` with ``L M C = [[T, 0], [0, 0]]``, ``T`` square and nonsingular."""
    n = len(M)
    m = len(M[0]) if M else 0
    h = hnf_int(M, m)
    k = h.rank
    H1 = [row[:k] for row in h.form]
    h2 = hnf_int([list(c) for c in zip(*H1)] if k else [], n)
    # h2.left (k x k) H1^T h2.right = [T2 | 0]
    L = int_matmul([list(c) for c in zip(*h2.right)], h.left) if n else []
    P2T = [list(c) for c in zip(*h2.left)] if k else []
    block = int_identity(m)
    for i in range(k):
        for j in range(k):
            block[i][j] = P2T[i][j]
    C = int_matmul(h.right, block)
    return L, C, k


def _int_inverse(M):
    from fractions import Fraction

    from .matrix import mat_inverse as _inv

    inv = _inv(ZZ, [[Fraction(x) for x in r] for r in M])
    out = []
    for r in inv:
        if any(x.denominator != 1 for x in r):
            raise InvariantViolation("matrix is not unimodular")
        out.append([int(x) for x in r])
    return out


def smith_bezout_dim1(M) -> SmithForm:
    """Smith form over Z: ``L M C = diag(c_1, ..., c_k, 0, ...)`` with ``c_i | c_(i+1)``."""
    M = [[int(x) for x in r] for r in M]
    n = len(M)
    m = len(M[0]) if M else 0
    if n == 0 or m == 0:
        return SmithForm("bezout", int_identity(n), int_identity(m), [list(r) for r in M], [])
    L0, C0, k = _int_double_hermite(M)
    T = [row[:k] for row in int_matmul(int_matmul(L0, M), C0)[:k]]
    diag: list[int] = []
    L = L0
    C = C0
    if k:
        d = int_det(T)
        R = QuotientRing(ZZ, d)
        z = smith_zero_dim(R, T)
        Lz = [[int(x) for x in r] for r in z.L]
        Cz = [[int(x) for x in r] for r in z.C]
        Mp = int_matmul(int_matmul(Lz, T), Cz)
        diag = [gcd(int(a), d) for a in z.diagonal]
        C1 = []
        for i in range(k):
            if any(x % diag[i] for x in Mp[i]):
                raise InvariantViolation("row is not divisible by its invariant factor")
            C1.append([x // diag[i] for x in Mp[i]])
        if abs(int_det(C1)) != 1:
            raise InvariantViolation("cofactor matrix is not unimodular")
        right = int_matmul(Cz, _int_inverse(C1))
        Lb, Cb = int_identity(n), int_identity(m)
        for i in range(k):
            for j in range(k):
                Lb[i][j] = Lz[i][j]
                Cb[i][j] = right[i][j]
        L = int_matmul(Lb, L0)
        C = int_matmul(C0, Cb)
    S = int_matmul(int_matmul(L, M), C)
    expect = [[diag[i] if i == j and i < k else 0 for j in range(m)] for i in range(n)]
    if S != expect or not is_unimodular(L) or not is_unimodular(C):
        raise InvariantViolation("integer Smith form failed its product check")
    for a, b in zip(diag, diag[1:]):
        if b % a:
            raise InvariantViolation("invariant factors do not form a divisibility chain")
    return SmithForm("bezout", L, C, S, diag)


def smith_pseudo_dedekind(A: PseudoMatrix, bezout_only: bool = False,
                          max_rounds: int = 500) -> SmithForm:
    """Pseudo-matrix Smith form ``L A C = S`` with ``c_1 >= c_2 >= ...``."""
    D = A.domain
    n, m = A.shape
    W = [list(r) for r in A.entries]
    rows, cols = list(A.rows), list(A.cols)
    Lm = mat_identity(D, n)
    Cm = mat_identity(D, m)
    rounds = 0

    def col_op(i, j, P):
        (p, q), (r, s) = P
        for M in (W, Cm):
            for row in M:
                x, y = row[i], row[j]
                row[i] = x * p + y * r
                row[j] = x * q + y * s

    def row_op(i, j, P):
        # rows (i, j) <- P^T (rows i, j)
        (p, q), (r, s) = P
        for M in (W, Lm):
            ri, rj = M[i], M[j]
            M[i] = [x * p + y * r for x, y in zip(ri, rj)]
            M[j] = [x * q + y * s for x, y in zip(ri, rj)]

    def minor(i, j):
        return ideal_mul(cols[j], ideal_inverse(rows[i])).scale(W[i][j])

    diag = []
    for t in range(min(n, m)):
        pos = next(((i, j) for i in range(t, n) for j in range(t, m) if W[i][j] != 0), None)
        if pos is None:
            break
        i, j = pos
        if j != t:
            col_op(t, j, [[D.zero, D.one], [D.one, D.zero]])
            cols[t], cols[j] = cols[j], cols[t]
        if i != t:
            row_op(t, i, [[D.zero, D.one], [D.one, D.zero]])
            rows[t], rows[i] = rows[i], rows[t]
        while True:
            rounds += 1
            if rounds > max_rounds:
                raise InvariantViolation("pseudo Smith reduction exceeded its iteration guard")
            for j in range(t + 1, m):
                if W[t][j] != 0:
                    P, (it, ij), _ = zero_entry_pair(D, W[t][t], W[t][j], cols[t], cols[j], bezout_only)
                    col_op(t, j, P)
                    cols[t], cols[j] = it, ij
            for i in range(t + 1, n):
                if W[i][t] != 0:
                    P, (ft, fi), _ = zero_entry_pair(D, W[t][t], W[i][t], ideal_inverse(rows[t]),
                                                     ideal_inverse(rows[i]), bezout_only)
                    row_op(t, i, P)
                    rows[t], rows[i] = ideal_inverse(ft), ideal_inverse(fi)
            if any(W[t][j] != 0 for j in range(t + 1, m)):
                continue
            piv = minor(t, t)
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, m):
                    if W[i][j] != 0 and not ideal_includes(piv, minor(i, j)):
                        bad = (i, j)
                        break
                if bad:
                    break
            if bad is None:
                break
            i, j = bad
            # row_t += lam row_i with lam in h_t h_i^-1 chosen so the new entry escapes piv
            ratio = simplify(ideal_mul(rows[t], ideal_inverse(rows[i])))
            lam = next(g for g in ratio.gens
                       if not ideal_includes(piv, ideal_mul(cols[j], ideal_inverse(rows[t])).scale(g * W[i][j])))
            row_op(t, i, [[D.one, D.zero], [lam, D.one]])
        diag.append(simplify(minor(t, t)))
    L = PseudoMatrix(D, rows, A.rows, Lm)
    C = PseudoMatrix(D, A.cols, cols, Cm)
    S = PseudoMatrix(D, rows, cols, W, check=False)
    if not pm_equal(pm_mul(pm_mul(L, A, check=False), C, check=False), S):
        raise InvariantViolation("L A C != S after pseudo Smith reduction")
    for i in range(n):
        for j in range(m):
            if i != j and W[i][j] != 0:
                raise InvariantViolation("off-diagonal entry survived")
    for a, b in zip(diag, diag[1:]):
        if not ideal_includes(a, b):
            raise InvariantViolation("diagonal ideals do not form a chain")
    return SmithForm("pseudo", L, C, S, diag, rounds)


@dataclass
class ModuleStructure:
    """Torsion module ``A/a_1 + ... + A/a_k`` with ``a_1 >= ... >= a_k`` (no ``<1>`` terms).

    ``ngens`` is the number of generators of the presentation it came from.
    """

    domain: PruferDomain
    ideals: list
    delta: object = None
    ngens: int = 0
    raw: list = field(default_factory=list)

    def __repr__(self):
        return "ModuleStructure(" + " + ".join(f"A/{simplify(I)}" for I in self.ideals) + ")"


def _as_domain_matrix(D, M):
    M = [[D.K(x) for x in r] for r in M]
    for r in M:
        for x in r:
            if not D.is_integral(x):
                raise PreconditionError("presentation matrices must have entries in the domain")
    return M


def first_maximal_minor(D: PruferDomain, M):
    """First nonzero ``n x n`` minor of an ``n x m`` matrix, in lexicographic column order."""
    n = len(M)
    m = len(M[0]) if M else 0
    for cols in combinations(range(m), n):
        d = mat_det(D, submatrix(M, range(n), cols))
        if d != 0:
            return d
    return D.zero


def torsion_structure(D: PruferDomain, M, delta=None) -> ModuleStructure:
    """Invariant ideals of ``coker(M) = A^n / M A^m`` for a torsion presentation ``M``."""
    M = _as_domain_matrix(D, M)
    n = len(M)
    m = len(M[0]) if M else 0
    if n == 0:
        return ModuleStructure(D, [], None, 0, [])
    if mat_rank(D, M, m) < n:
        raise PreconditionError("module is not torsion: D_n(M) = 0")
    Dn = determinantal_ideal(usual(D, M, m), n)
    if delta is None:
        delta = first_maximal_minor(D, M)
    delta = D.K(delta)
    if delta == 0 or not D.is_integral(delta) or not member(delta, Dn):
        raise PreconditionError("delta must be a nonzero element of D_n(M)")
    R = QuotientRing(D, delta)
    z = smith_zero_dim(R, M)
    raw = [simplify(FgIdeal(D, [a, delta])) for a in z.diagonal[:n]]
    if not ideal_product(D, raw) == Dn:
        raise InvariantViolation("product of invariant ideals differs from D_n(M)")
    ideals = [I for I in raw if not I.is_one()]
    return ModuleStructure(D, ideals, delta, n, raw)


def fitting_ideals(structure: ModuleStructure) -> list:
    """``[F_0, F_1, ..., F_k]`` with ``F_j = a_1 ... a_(k-j)``; ``F_k = <1>``."""
    D = structure.domain
    a = structure.ideals
    k = len(a)
    return [ideal_product(D, a[: k - j]) for j in range(k + 1)]


def fitting_from_matrix(D: PruferDomain, M) -> list:
    """``[F_0, ..., F_n]`` with ``F_j = D_(n-j)(M)``."""
    M = [[D.K(x) for x in r] for r in M]
    n = len(M)
    m = len(M[0]) if M else 0
    A = usual(D, M, m)
    return [determinantal_ideal(A, n - j) for j in range(n + 1)]


def structure_from_fitting(D: PruferDomain, fitting) -> ModuleStructure:
    """Recover ``a_k = d_k d_(k-1)^-1`` from ``d_k = F_(N-k)``."""
    N = len(fitting) - 1
    if N < 0:
        raise DimensionError("empty Fitting sequence")
    if any(F.is_zero for F in fitting):
        raise PreconditionError("module is not torsion")
    d = [fitting[N - k] for k in range(N + 1)]
    if not d[0].is_one():
        raise PreconditionError("the last Fitting ideal must be <1>")
    raw = [simplify(ideal_mul(d[k], ideal_inverse(d[k - 1]))) for k in range(1, N + 1)]
    for I in raw:
        if not I.is_integral():
            raise PreconditionError("Fitting ideals are not a valid chain")
    ideals = [I for I in raw if not I.is_one()]
    return ModuleStructure(D, ideals, None, N, raw)


def structures_equal(S1: ModuleStructure, S2: ModuleStructure) -> bool:
    return len(S1.ideals) == len(S2.ideals) and all(a == b for a, b in zip(S1.ideals, S2.ideals))


@dataclass
class BasisChangeSmith:
    """``L M C1 == M1`` where ``M1`` is ``I`` or ``[I | 0]`` on column ideals ``ideals``."""

    L: PseudoMatrix
    C1: PseudoMatrix
    M1: PseudoMatrix
    ideals: list
    delta: object


def _check_identity_block(D, X, n, m):
    return all(X[i][j] == (D.one if i == j else D.zero) for i in range(n) for j in range(m))


def smith_change_pseudobasis_square(D: PruferDomain, M) -> BasisChangeSmith:
    """Invertible ``L`` (usual) and ``C1`` with ``L M C1 = (<1>; a_1..a_n; I)``."""
    M = _as_domain_matrix(D, M)
    n = len(M)
    if any(len(r) != n for r in M):
        raise DimensionError("square matrix expected")
    d = mat_det(D, M) if n else D.one
    if d == 0:
        raise PreconditionError("determinant is zero")
    R = QuotientRing(D, d)
    z = smith_zero_dim(R, M)
    Mp = z.exact_product(M)
    ideals = [simplify(FgIdeal(D, [a, d])) for a in z.diagonal]
    one = unit_ideal(D)
    E = PseudoMatrix(D, ideals, [one] * n, Mp)
    if not pm_is_invertible(E):
        raise InvariantViolation("basis change matrix is not invertible")
    if not ideal_product(D, ideals) == principal(D, d):
        raise InvariantViolation("invariant ideals do not multiply to <det>")
    C1m = mat_mul(D, z.C, mat_inverse(D, Mp), inner=n, ncols=n)
    L = PseudoMatrix(D, [one] * n, [one] * n, z.L)
    C1 = PseudoMatrix(D, [one] * n, ideals, C1m)
    Mu = usual(D, M)
    M1 = pm_mul(pm_mul(L, Mu), C1)
    if not _check_identity_block(D, M1.entries, n, n):
        raise InvariantViolation("L M C1 is not the identity")
    if not pm_is_invertible(C1) or not pm_is_invertible(L):
        raise InvariantViolation("transforms are not invertible")
    return BasisChangeSmith(L, C1, M1, ideals, d)


def smith_change_pseudobasis_wide(D: PruferDomain, M, delta=None,
                                  bezout_only: bool = False) -> BasisChangeSmith:
    """``L M C1 = (<1>; a_1..a_m; [I_n | 0])`` with ``a_1 ... a_n = D_n(M)``."""
    M = _as_domain_matrix(D, M)
    n = len(M)
    m = len(M[0]) if M else 0
    if n > m or mat_rank(D, M, m) < n:
        raise PreconditionError("D_n(M) is zero")
    Dn = determinantal_ideal(usual(D, M, m), n)
    if delta is None:
        delta = first_maximal_minor(D, M)
    delta = D.K(delta)
    if delta == 0 or not member(delta, Dn):
        raise PreconditionError("delta must be a nonzero element of D_n(M)")
    R = QuotientRing(D, delta)
    z = smith_zero_dim(R, M)
    Mp = z.exact_product(M)
    ideals = [simplify(FgIdeal(D, [a, delta])) for a in z.diagonal[:n]]
    if not ideal_product(D, ideals) == Dn:
        raise InvariantViolation("invariant ideals do not multiply to D_n(M)")
    one = unit_ideal(D)
    E = PseudoMatrix(D, ideals, [one] * m, Mp)
    B = complete_surjective(E, bezout_only)
    Binv = mat_inverse(D, B.entries)
    all_ideals = list(B.rows)
    C1 = PseudoMatrix(D, [one] * m, all_ideals, mat_mul(D, z.C, Binv, inner=m, ncols=m))
    L = PseudoMatrix(D, [one] * n, [one] * n, z.L)
    M1 = pm_mul(pm_mul(L, usual(D, M, m)), C1)
    if not _check_identity_block(D, M1.entries, n, m):
        raise InvariantViolation("L M C1 is not [I | 0]")
    if not pm_is_invertible(C1):
        raise InvariantViolation("column transform is not invertible")
    return BasisChangeSmith(L, C1, M1, all_ideals, delta)
