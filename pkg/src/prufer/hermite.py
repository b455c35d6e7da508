"""Hermite reduction of pseudo-matrices and what it yields.

The reductions work on the entry matrix and the list of column ideals in
place, recording the column transform; the pseudo-matrices ``L``, ``C`` and
``H`` are assembled at the end and ``L A C == H`` is re-checked exactly
before anything is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import PruferDomain
from .errors import DimensionError, InvariantViolation, NotInvertibleError, PreconditionError
from .ideals import (FgIdeal, canonical_gens, colon_split, ideal_includes, ideal_intersect, ideal_inverse, ideal_mul,
                     ideal_sum, simplify, unit_ideal)
from .matrix import mat_identity, mat_inverse, mat_mul, mat_neg, mat_transpose
from .pseudo import (PseudoBasis, PseudoMatrix, chains_equal, minor_ideal, pm_block, pm_equal,
                     pm_inverse, pm_mul, pm_reassemble, transpose)


@dataclass
class HermiteForm:
    """``L A C == H``.

    ``kind`` is ``"hermite"`` (``L`` a permutation, ``H = [[T, 0], [G, 0]]``)
    or ``"double"`` (``H = [[T, 0], [0, 0]]``).  ``T`` is ``rank x rank``,
    lower triangular with nonzero diagonal.
    """

    kind: str
    L: PseudoMatrix
    C: PseudoMatrix
    H: PseudoMatrix
    rank: int
    source: PseudoMatrix

    @property
    def T(self):
        return [row[: self.rank] for row in self.H.entries[: self.rank]]

    def verify(self) -> bool:
        return pm_equal(pm_mul(pm_mul(self.L, self.source, check=False), self.C, check=False), self.H)


def _apply_cols(M, i: int, j: int, P) -> None:
    (p, q), (r, s) = P
    for row in M:
        x, y = row[i], row[j]
        row[i] = x * p + y * r
        row[j] = x * q + y * s


def _normalize_ideal(D: PruferDomain, I: FgIdeal):
    """``(gamma, <1>)`` when ``I = <gamma>`` is visibly principal, else ``(1, I)``."""
    I = simplify(I)
    if len(I.gens) == 1:
        return I.gens[0], unit_ideal(D)
    return D.one, _tidy(I)


def _tidy(I: FgIdeal) -> FgIdeal:
    """Same ideal on its canonical generators, which keeps sizes bounded."""
    return FgIdeal(I.domain, canonical_gens(I))


def zero_entry_pair(D: PruferDomain, a, b, ia: FgIdeal, ib: FgIdeal, bezout_only: bool = False):
    """Column transform sending the row ``[a, b]`` on ideals ``(ia, ib)`` to ``[g, 0]``.

    Returns ``(P, (ia2, ib2), g)``, where ``P`` is the 2x2 entry matrix of an
    invertible pseudo-matrix from ``(ia, ib)`` to ``(ia2, ib2)``.
    """
    a, b = D.K(a), D.K(b)
    one, zero = D.one, D.zero
    if b == 0:
        return [[one, zero], [zero, one]], (ia, ib), a
    if a == 0:
        return [[zero, one], [one, zero]], (ib, ia), b
    if not bezout_only:
        # b ib <= a ia: plain Gauss step
        q = b / a
        if ideal_includes(ia, ib.scale(q)):
            return [[one, -q], [zero, one]], (ia, ib), a
        q = a / b
        if ideal_includes(ib, ia.scale(q)):
            return [[zero, one], [one, -q]], (ib, ia), b
    ia1 = ia.scale(1 / b)
    ib1 = ib.scale(1 / a)
    sigma, tau = colon_split(ia1, ib1)
    s, t = tau, sigma
    sum_ = simplify(ideal_sum(ia1, ib1))
    inter = simplify(ideal_intersect(ia1, ib1))
    P = [[b * t, -b], [a * s, a]]
    g = a * b
    gam, sum_ = _normalize_ideal(D, sum_)
    if gam != one:
        P[0][0], P[1][0] = P[0][0] * gam, P[1][0] * gam
        g = g * gam
    delta, inter = _normalize_ideal(D, inter)
    if delta != one:
        P[0][1], P[1][1] = P[0][1] * delta, P[1][1] * delta
    return P, (sum_, inter), g


def zero_entry_row(A: PseudoMatrix, bezout_only: bool = False):
    """:func:`zero_entry_pair` on a ``1 x 2`` pseudo-matrix; returns ``(P, A P)``."""
    if A.shape != (1, 2):
        raise DimensionError("expected a 1x2 pseudo-matrix")
    a, b = A.entries[0]
    if a == 0 and b == 0:
        raise PreconditionError("both entries are zero")
    D = A.domain
    M, (i1, i2), _ = zero_entry_pair(D, a, b, A.cols[0], A.cols[1], bezout_only)
    P = PseudoMatrix(D, A.cols, (i1, i2), M)
    return P, pm_mul(A, P)


class _Reducer:
    """Column reduction state: working entries, column ideals, column transform."""

    def __init__(self, A: PseudoMatrix, bezout_only: bool):
        self.D = A.domain
        self.W = [list(r) for r in A.entries]
        self.cols = list(A.cols)
        self.C = mat_identity(self.D, A.m)
        self.bezout_only = bezout_only

    def clear(self, row: int, k: int, start: int) -> None:
        """Zero ``W[row][j]`` for ``j >= start`` against column ``k``."""
        W = self.W
        for j in range(start, len(self.cols)):
            if j == k or W[row][j] == 0:
                continue
            P, (ik, ij), _ = zero_entry_pair(self.D, W[row][k], W[row][j], self.cols[k],
                                             self.cols[j], self.bezout_only)
            _apply_cols(W, k, j, P)
            _apply_cols(self.C, k, j, P)
            self.cols[k], self.cols[j] = ik, ij
            if W[row][j] != 0:
                raise InvariantViolation("column operation failed to produce a zero")
            self.absorb_pivot(row, k)

    def absorb_pivot(self, row: int, k: int) -> None:
        """On a non-principal column ideal, rescale so the pivot entry is 1.

        Repeated Bezout steps otherwise multiply the pivot by ``a * b`` each
        time and the entries grow exponentially.
        """
        g = self.W[row][k]
        if g == 0 or g == self.D.one or len(self.cols[k].gens) < 2:
            return
        inv = 1 / g
        for M in (self.W, self.C):
            for r in M:
                r[k] = r[k] * inv
        self.cols[k] = _tidy(self.cols[k].scale(g))


def hermite(A: PseudoMatrix, bezout_only: bool = False, verify: bool = True) -> HermiteForm:
    """Column Hermite reduction with row exchanges: ``L A C = [[T, 0], [G, 0]]``."""
    D = A.domain
    n, m = A.shape
    R = _Reducer(A, bezout_only)
    remaining = list(range(n))
    pivots = []
    k = 0
    while k < m:
        row = next((i for i in remaining if any(R.W[i][j] != 0 for j in range(k, m))), None)
        if row is None:
            break
        remaining.remove(row)
        pivots.append(row)
        R.clear(row, k, k + 1)
        if R.W[row][k] == 0:
            raise InvariantViolation("pivot vanished")
        k += 1
    order = pivots + remaining
    rows = [A.rows[i] for i in order]
    Lm = [[D.one if j == order[i] else D.zero for j in range(n)] for i in range(n)]
    L = PseudoMatrix(D, rows, A.rows, Lm, check=False)
    C = PseudoMatrix(D, A.cols, R.cols, R.C, check=verify)
    H = PseudoMatrix(D, rows, R.cols, [R.W[i] for i in order], check=False)
    form = HermiteForm("hermite", L, C, H, k, A)
    if verify and not form.verify():
        raise InvariantViolation("L A C != H after Hermite reduction")
    return form


def double_hermite(A: PseudoMatrix, bezout_only: bool = False, verify: bool = True) -> HermiteForm:
    """``L A C = [[T, 0], [0, 0]]`` with ``L``, ``C`` invertible.

    A Hermite pass on the transpose (row operations on ``A``) is followed by
    a column pass.
    """
    D = A.domain
    first = hermite(transpose(A), bezout_only, verify=False)
    L1 = transpose(first.C)
    C1 = transpose(first.L)
    R = transpose(first.H)
    second = hermite(R, bezout_only, verify=False)
    r = second.rank
    L = PseudoMatrix(D, second.L.rows, A.rows,
                     mat_mul(D, second.L.entries, L1.entries, inner=R.n, ncols=A.n), check=verify)
    C = PseudoMatrix(D, A.cols, second.C.cols,
                     mat_mul(D, C1.entries, second.C.entries, inner=A.m, ncols=A.m), check=verify)
    H = second.H
    if any(H.entries[i][j] != 0 for i in range(r, A.n) for j in range(A.m)):
        raise InvariantViolation("double Hermite left nonzero rows below the rank")
    form = HermiteForm("double", L, C, H, r, A)
    if verify and not form.verify():
        raise InvariantViolation("L A C != H after double Hermite reduction")
    return form


def pivot_invertible_minor(A: PseudoMatrix, k: int):
    """Generalized Gauss pivot on a leading ``k x k`` minor whose ideal is ``<1>``.

    Returns ``(C, L, A2)`` with ``L A C = A2 = [[I_k, 0], [0, A'']]``.
    """
    if not 0 <= k <= min(A.n, A.m):
        raise DimensionError(f"pivot size {k} out of range")
    if k and not minor_ideal(A, range(k), range(k)).is_one():
        raise PreconditionError("leading minor ideal is not <1>")
    D = A.domain
    A11, A12, A21, A22 = pm_block(A, k, k)
    inv = pm_inverse(A11) if k else A11
    X = mat_mul(D, inv.entries, A12.entries, inner=k, ncols=A.m - k)
    Cm = mat_identity(D, A.m)
    for i in range(k):
        for j in range(k):
            Cm[i][j] = inv.entries[i][j]
        for j in range(k, A.m):
            Cm[i][j] = -X[i][j - k]
    C = PseudoMatrix(D, A.cols, A.rows[:k] + A.cols[k:], Cm)
    B = mat_mul(D, A21.entries, inv.entries, inner=k, ncols=k)
    Lm = mat_identity(D, A.n)
    for i in range(k, A.n):
        for j in range(k):
            Lm[i][j] = -B[i - k][j]
    L = PseudoMatrix(D, A.rows, A.rows, Lm)
    A2 = pm_mul(pm_mul(L, A), C)
    for i in range(A.n):
        for j in range(A.m):
            if (i < k or j < k) and A2.entries[i][j] != (D.one if i == j else D.zero):
                raise InvariantViolation("pivot step did not isolate the identity block")
    return C, L, A2


def image_pseudobasis(A: PseudoMatrix, bezout_only: bool = False) -> PseudoBasis:
    """Pseudo-basis of ``Im A`` inside ``K^n``."""
    h = hermite(A, bezout_only)
    D = A.domain
    AC = mat_mul(D, A.entries, h.C.entries, inner=A.m, ncols=A.m)
    vecs = [[AC[i][j] for i in range(A.n)] for j in range(h.rank)]
    return PseudoBasis(D, vecs, h.C.cols[: h.rank], A.n)


def kernel_pseudobasis(A: PseudoMatrix, bezout_only: bool = False) -> PseudoBasis:
    """Pseudo-basis of ``Ker A`` inside ``K^m``: the trailing columns of ``C``."""
    h = hermite(A, bezout_only)
    D = A.domain
    vecs = [[h.C.entries[i][j] for i in range(A.m)] for j in range(h.rank, A.m)]
    return PseudoBasis(D, vecs, h.C.cols[h.rank:], A.m)


@dataclass
class CokernelStructure:
    """``K^n``-coordinates of the saturated image, torsion presentation and projective part."""

    saturation: PseudoBasis
    torsion: PseudoMatrix
    projective: PseudoBasis
    form: HermiteForm


def cokernel_structure(A: PseudoMatrix, bezout_only: bool = False) -> CokernelStructure:
    dh = double_hermite(A, bezout_only)
    D = A.domain
    r = dh.rank
    Linv = mat_inverse(D, dh.L.entries) if A.n else []
    cols = mat_transpose(Linv, A.n)
    sat = PseudoBasis(D, cols[:r], dh.L.rows[:r], A.n)
    proj = PseudoBasis(D, cols[r:], dh.L.rows[r:], A.n)
    T = PseudoMatrix(D, dh.H.rows[:r], dh.H.cols[:r], dh.T)
    return CokernelStructure(sat, T, proj, dh)


def complete_surjective(A: PseudoMatrix, bezout_only: bool = False) -> PseudoMatrix:
    """Invertible ``B`` with ``A B^-1 = [I_n | 0]`` for ``A`` with ``D_n(A) = <1>``.

    ``B`` has row ideals ``h_1, ..., h_n`` followed by new ideals, and the
    column ideals of ``A``.
    """
    from .pseudo import determinantal_ideal

    D = A.domain
    n, m = A.shape
    if n > m or not determinantal_ideal(A, n).is_one():
        raise NotInvertibleError("pseudo-matrix is not surjective (D_n != <1>)",
                                 determinantal_ideal(A, n) if n <= m else None)
    h = hermite(A, bezout_only)
    if h.rank != n or any(h.L.entries[i][i] != D.one for i in range(n)):
        raise InvariantViolation("surjective Hermite form has unexpected row exchanges")
    W = [list(r) for r in h.H.entries]
    Cm = [list(r) for r in h.C.entries]
    cols = list(h.C.cols)
    for i in range(n):
        t = W[i][i]
        for M in (W, Cm):
            for row in M:
                row[i] = row[i] / t
        cols[i] = A.rows[i]
    for i in range(n):
        for j in range(i):
            lam = W[i][j]
            if lam != 0:
                for M in (W, Cm):
                    for row in M:
                        row[j] = row[j] - lam * row[i]
    CC = PseudoMatrix(D, A.cols, cols, Cm)
    B = pm_inverse(CC)
    AB = pm_mul(A, CC)
    if any(AB.entries[i][j] != (D.one if i == j else D.zero) for i in range(n) for j in range(m)):
        raise InvariantViolation("completion does not give [I | 0]")
    return B


def right_inverse(A: PseudoMatrix, B: PseudoMatrix) -> PseudoMatrix:
    """First ``n`` columns of ``B^-1``: a pseudo-matrix ``R`` with ``A R`` the identity."""
    Binv = pm_inverse(B)
    n = A.n
    return PseudoMatrix(A.domain, Binv.rows, Binv.cols[:n], [r[:n] for r in Binv.entries])
