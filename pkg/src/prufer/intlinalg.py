"""Integer matrix engine: Hermite and Smith forms over Z, and Z-linear solving.

Matrices are plain lists of lists of Python ints.  Every routine returns the
unimodular transforms that witness the reduction so callers can re-check the
product identities exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

IntMatrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int) -> IntMatrix:
    return [[0] * m for _ in range(n)]


def copy(M: IntMatrix) -> IntMatrix:
    return [list(r) for r in M]


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    if not A:
        return []
    inner = len(B)
    m = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(m)]
            for i in range(len(A))]


def transpose(M: IntMatrix, ncols: int | None = None) -> IntMatrix:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*M)]


def det(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = copy(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def is_unimodular(M: IntMatrix) -> bool:
    return len(M) == (len(M[0]) if M else 0) and abs(det(M)) == 1


@dataclass(frozen=True)
class IntMatrixForm:
    """Result of :func:`hnf_int` or :func:`snf_int`.

    For ``kind == "hnf"``: ``left`` is a permutation matrix, ``right`` is
    unimodular and ``form = left @ M @ right`` equals ``[[T, 0], [G, 0]]`` with
    ``T`` the ``rank x rank`` lower triangular block.

    For ``kind == "snf"``: ``form = left @ M @ right`` is diagonal and
    ``diagonal[i]`` divides ``diagonal[i + 1]``.
    """

    kind: str
    left: IntMatrix
    right: IntMatrix
    form: IntMatrix
    rank: int
    diagonal: tuple[int, ...] = ()

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self.form[i][i] for i in range(self.rank))


def _col_combine(M: IntMatrix, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    # (col_i, col_j) <- (a col_i + c col_j, b col_i + d col_j)
    for row in M:
        x, y = row[i], row[j]
        row[i] = a * x + c * y
        row[j] = b * x + d * y


def _row_combine(M: IntMatrix, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    # (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j)
    ri, rj = M[i], M[j]
    M[i] = [a * x + b * y for x, y in zip(ri, rj)]
    M[j] = [c * x + d * y for x, y in zip(ri, rj)]


def hnf_int(M: IntMatrix, ncols: int | None = None) -> IntMatrixForm:
    """Column Hermite form with row exchanges.

    Returns ``P, C`` with ``P @ M @ C == [[T, 0], [G, 0]]``; ``T`` lower
    triangular with positive diagonal and each entry left of a pivot reduced
    into ``[0, pivot)``.
    """
    n = len(M)
    m = len(M[0]) if M else (ncols or 0)
    W = copy(M)
    C = identity(m)
    remaining = list(range(n))
    pivot_rows: list[int] = []
    k = 0
    while k < m:
        row = next((i for i in remaining if any(W[i][j] for j in range(k, m))), None)
        if row is None:
            break
        remaining.remove(row)
        pivot_rows.append(row)
        r = W[row]
        for j in range(k + 1, m):
            b = r[j]
            if b == 0:
                continue
            a = r[k]
            g, x, y = xgcd(a, b)
            _col_combine(W, k, j, x, -b // g, y, a // g)
            _col_combine(C, k, j, x, -b // g, y, a // g)
        if r[k] < 0:
            for M_ in (W, C):
                for rr in M_:
                    rr[k] = -rr[k]
        p = r[k]
        for j in range(k):
            q = r[j] // p
            if q:
                for M_ in (W, C):
                    for rr in M_:
                        rr[j] -= q * rr[k]
        k += 1
    order = pivot_rows + remaining
    P = [[int(j == order[i]) for j in range(n)] for i in range(n)]
    H = [list(W[i]) for i in order]
    return IntMatrixForm("hnf", P, C, H, k)


def snf_int(M: IntMatrix, ncols: int | None = None) -> IntMatrixForm:
    """Smith form ``L @ M @ C == diag(d_1, ..., d_r, 0, ...)`` with ``d_i | d_{i+1}``."""
    n = len(M)
    m = len(M[0]) if M else (ncols or 0)
    W = copy(M)
    L = identity(n)
    C = identity(m)
    t = 0
    while t < min(n, m):
        # smallest nonzero entry of the trailing block as pivot
        best = None
        for i in range(t, n):
            for j in range(t, m):
                v = W[i][j]
                if v and (best is None or abs(v) < abs(W[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        if i != t:
            W[t], W[i] = W[i], W[t]
            L[t], L[i] = L[i], L[t]
        if j != t:
            for M_ in (W, C):
                for rr in M_:
                    rr[t], rr[j] = rr[j], rr[t]
        while True:
            for j in range(t + 1, m):
                b = W[t][j]
                if b:
                    a = W[t][t]
                    if b % a == 0:
                        _col_combine(W, t, j, 1, -(b // a), 0, 1)
                        _col_combine(C, t, j, 1, -(b // a), 0, 1)
                        continue
                    g, x, y = xgcd(a, b)
                    _col_combine(W, t, j, x, -b // g, y, a // g)
                    _col_combine(C, t, j, x, -b // g, y, a // g)
            for i in range(t + 1, n):
                b = W[i][t]
                if b:
                    a = W[t][t]
                    if b % a == 0:
                        _row_combine(W, t, i, 1, 0, -(b // a), 1)
                        _row_combine(L, t, i, 1, 0, -(b // a), 1)
                        continue
                    g, x, y = xgcd(a, b)
                    _row_combine(W, t, i, x, y, -b // g, a // g)
                    _row_combine(L, t, i, x, y, -b // g, a // g)
            if any(W[t][j] for j in range(t + 1, m)):
                continue
            p = W[t][t]
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, m)
                        if W[i][j] % p), None)
            if bad is None:
                break
            i = bad[0]
            W[t] = [x + y for x, y in zip(W[t], W[i])]
            L[t] = [x + y for x, y in zip(L[t], L[i])]
        if W[t][t] < 0:
            W[t] = [-x for x in W[t]]
            L[t] = [-x for x in L[t]]
        t += 1
    diag = tuple(W[i][i] for i in range(t))
    return IntMatrixForm("snf", L, C, W, t, diag)


def solve_int_linear(A: IntMatrix, b: list[int], ncols: int | None = None):
    """Solve ``A x = b`` over Z.

    Returns ``(x, kernel)`` where ``kernel`` is a Z-basis of ``{v : A v = 0}``,
    or ``None`` when no integer solution exists.
    """
    n = len(A)
    m = len(A[0]) if A else (ncols or 0)
    if len(b) != n:
        raise ValueError("right-hand side has wrong length")
    S = snf_int(A, m)
    r = S.rank
    Lb = [sum(S.left[i][k] * b[k] for k in range(n)) for i in range(n)]
    y = [0] * m
    for i in range(n):
        if i < r:
            q, rem = divmod(Lb[i], S.diagonal[i])
            if rem:
                return None
            y[i] = q
        elif Lb[i]:
            return None
    x = [sum(S.right[i][k] * y[k] for k in range(m)) for i in range(m)]
    kernel = [[S.right[i][j] for i in range(m)] for j in range(r, m)]
    return x, kernel


def content(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
