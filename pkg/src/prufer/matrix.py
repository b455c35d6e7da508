"""Dense matrices over the fraction field ``K`` of a domain.

Entries are whatever :meth:`PruferDomain.K` returns, so the same code serves
Q and quadratic fields.  Everything is exact Gaussian elimination.
"""

from __future__ import annotations

from .arith import PruferDomain
from .errors import DimensionError, DomainError


def mat_identity(D: PruferDomain, n: int):
    return [[D.one if i == j else D.zero for j in range(n)] for i in range(n)]


def mat_zeros(D: PruferDomain, n: int, m: int):
    return [[D.zero] * m for _ in range(n)]


def mat_copy(M):
    return [list(r) for r in M]


def mat_shape(M, ncols: int | None = None):
    return len(M), (len(M[0]) if M else (ncols or 0))


def mat_transpose(M, ncols: int = 0):
    if not M:
        return [[] for _ in range(ncols)]
    return [list(c) for c in zip(*M)]


def mat_mul(D: PruferDomain, A, B, inner: int | None = None, ncols: int | None = None):
    """Product of an ``n x k`` and a ``k x m`` matrix.

    ``inner`` and ``ncols`` resolve the shape when a factor has no rows.
    """
    n = len(A)
    k = len(B) if B else (inner if inner is not None else (len(A[0]) if A else 0))
    m = len(B[0]) if B else (ncols or 0)
    if A and len(A[0]) != k:
        raise DimensionError(f"cannot multiply {n}x{len(A[0])} by {k}x{m}")
    out = []
    for i in range(n):
        row = A[i]
        out_row = []
        for j in range(m):
            acc = D.zero
            for t in range(k):
                a = row[t]
                if a:
                    b = B[t][j]
                    if b:
                        acc = acc + a * b
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_neg(A):
    return [[-a for a in r] for r in A]


def mat_eq(A, B) -> bool:
    return len(A) == len(B) and all(list(ra) == list(rb) for ra, rb in zip(A, B))


def submatrix(M, rows, cols):
    return [[M[i][j] for j in cols] for i in rows]


def mat_det(D: PruferDomain, M):
    n = len(M)
    if any(len(r) != n for r in M):
        raise DimensionError("determinant of a non-square matrix")
    A = mat_copy(M)
    det = D.one
    for k in range(n):
        p = next((i for i in range(k, n) if A[i][k] != 0), None)
        if p is None:
            return D.zero
        if p != k:
            A[k], A[p] = A[p], A[k]
            det = -det
        piv = A[k][k]
        det = det * piv
        inv = _field_inverse(piv)
        for i in range(k + 1, n):
            f = A[i][k]
            if f:
                f = f * inv
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
    return det


def _field_inverse(x):
    return x.inverse() if hasattr(x, "inverse") else 1 / x


def row_echelon(D: PruferDomain, M, ncols: int | None = None):
    """Reduced row echelon form; returns ``(R, pivot_columns)``."""
    n, m = mat_shape(M, ncols)
    A = mat_copy(M)
    pivots = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, n) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = _field_inverse(A[r][c])
        A[r] = [x * inv for x in A[r]]
        for i in range(n):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return A, pivots


def mat_rank(D: PruferDomain, M, ncols: int | None = None) -> int:
    return len(row_echelon(D, M, ncols)[1])


def mat_inverse(D: PruferDomain, M):
    n = len(M)
    aug = [list(M[i]) + [D.one if i == j else D.zero for j in range(n)] for i in range(n)]
    R, piv = row_echelon(D, aug, 2 * n)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise DomainError("matrix is singular")
    return [r[n:] for r in R]


def mat_solve(D: PruferDomain, A, b, ncols: int | None = None):
    """One solution of ``A x = b`` over ``K`` (free variables set to 0), or ``None``."""
    n, m = mat_shape(A, ncols)
    aug = [list(A[i]) + [b[i]] for i in range(n)]
    R, piv = row_echelon(D, aug, m + 1)
    if m in piv:
        return None
    x = [D.zero] * m
    for r, c in enumerate(piv):
        x[c] = R[r][m]
    return x


def mat_fmt(D: PruferDomain, M) -> str:
    return "[" + ", ".join("[" + ", ".join(D.fmt(x) for x in r) + "]" for r in M) + "]"
