"""Smith reduction over a zero-dimensional quotient ``A / <delta>``.

Only transvections (add a multiple of one line to another) and swaps are
used, so the recorded transforms are matrices over ``A`` of determinant
``+-1``.  The working matrix is kept reduced modulo ``delta``; the transforms
are kept exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import comax_certificate
from .errors import DimensionError, DomainError, InvariantViolation, PreconditionError
from .quotient import QuotientRing


@dataclass
class ZeroDimSmith:
    """``L M C`` is congruent to ``diag(diagonal)`` modulo ``delta``; ``det L, det C = +-1``."""

    ring: QuotientRing
    L: list
    C: list
    form: list
    diagonal: list

    def exact_product(self, M):
        D = self.ring.domain
        from .matrix import mat_mul

        n = len(M)
        m = len(self.C)
        return mat_mul(D, mat_mul(D, self.L, M, inner=n, ncols=m), self.C, inner=m, ncols=m)


def _transpose(M, ncols):
    if not M:
        return [[] for _ in range(ncols)]
    return [list(c) for c in zip(*M)]


class _ColumnWork:
    def __init__(self, R: QuotientRing, W, X):
        self.R, self.W, self.X = R, W, X

    def add(self, dst: int, src: int, lam) -> None:
        """``col_dst += lam * col_src``."""
        lam = self.R.reduce(lam)
        if self.R.is_zero(lam):
            return
        for row in self.W:
            row[dst] = self.R.reduce(row[dst] + lam * row[src])
        for row in self.X:
            row[dst] = row[dst] + lam * row[src]

    def swap(self, i: int, j: int) -> None:
        for M in (self.W, self.X):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def eliminate(self, r: int, t: int, j: int) -> None:
        """Make ``W[r][j]`` zero using column ``t``; the pivot becomes a generator of both."""
        R = self.R
        D = R.domain
        a, b = self.W[r][t], self.W[r][j]
        if R.is_zero(b):
            return
        q = R.divide(a, b)
        if q is not None:
            self.add(j, t, -q)
        else:
            s, tt = comax_certificate(D, [a, b]) if a != 0 else (D.zero, D.one)
            alpha = s * b / a if s != 0 else D.zero
            beta = tt * a / b
            e, s_inv = R.split(s)
            f = D.one - e
            _, t_inv = R.split(tt)
            q1 = s_inv * alpha
            q2 = t_inv * beta
            self.add(j, t, -(e * q1))
            self.add(t, j, f * (D.one - q2))
            self.add(j, t, -f)
        if not R.is_zero(self.W[r][j]):
            raise InvariantViolation("transvection step failed to clear an entry")


def smith_zero_dim(R: QuotientRing, M) -> ZeroDimSmith:
    """Smith form of the matrix ``M`` (entries in ``A``) over ``R = A / <delta>``."""
    D = R.domain
    n = len(M)
    m = len(M[0]) if M else 0
    if any(len(r) != m for r in M):
        raise DimensionError("ragged matrix")
    for r in M:
        for x in r:
            if not D.is_integral(D.K(x)):
                raise DomainError("entries must lie in the domain")
    W = [[R.reduce(x) for x in r] for r in M]
    L = [[D.one if i == j else D.zero for j in range(n)] for i in range(n)]
    C = [[D.one if i == j else D.zero for j in range(m)] for i in range(m)]
    guard = 4 * (R.size + 4) * (n + m + 1)
    t = 0
    while t < min(n, m):
        pos = next(((i, j) for i in range(t, n) for j in range(t, m) if not R.is_zero(W[i][j])), None)
        if pos is None:
            break
        i, j = pos
        cols = _ColumnWork(R, W, C)
        if j != t:
            cols.swap(t, j)
        if i != t:
            W[t], W[i] = W[i], W[t]
            L[t], L[i] = L[i], L[t]
        for _ in range(guard):
            cols = _ColumnWork(R, W, C)
            for j in range(t + 1, m):
                cols.eliminate(t, t, j)
            WT, LT = _transpose(W, m), _transpose(L, n)
            rows = _ColumnWork(R, WT, LT)
            for i in range(t + 1, n):
                rows.eliminate(t, t, i)
            W[:], L[:] = _transpose(WT, n), _transpose(LT, n)
            if any(not R.is_zero(W[t][j]) for j in range(t + 1, m)):
                continue
            p = W[t][t]
            bad = next((i for i in range(t + 1, n) for j in range(t + 1, m)
                        if R.divide(p, W[i][j]) is None), None)
            if bad is None:
                break
            W[t] = [R.reduce(x + y) for x, y in zip(W[t], W[bad])]
            L[t] = [x + y for x, y in zip(L[t], L[bad])]
        else:
            raise InvariantViolation("Smith reduction over the quotient did not terminate")
        t += 1
    diagonal = [W[k][k] for k in range(min(n, m))]
    for i in range(n):
        for j in range(m):
            if i != j and not R.is_zero(W[i][j]):
                raise InvariantViolation("off-diagonal entry survived")
    for k in range(len(diagonal) - 1):
        if R.divide(diagonal[k], diagonal[k + 1]) is None:
            raise InvariantViolation("divisibility chain broken")
    return ZeroDimSmith(R, L, C, W, diagonal)


def associated_in_quotient(R: QuotientRing, a, b):
    """A unit ``w`` of ``R`` with ``a == w b``, given ``<a> == <b>`` in ``R``."""
    D = R.domain
    u = R.divide(b, a)
    v = R.divide(a, b)
    if u is None or v is None:
        raise PreconditionError("elements do not generate the same ideal")
    f, _ = R.split(u * v - D.one)
    w = R.reduce(u * (D.one - f) + f)
    if not R.is_unit(w) or not R.eq(w * b, a):
        raise InvariantViolation("associate unit construction failed")
    return w


class _Exact:
    """Minimal ring interface on the domain itself (exact equality)."""

    def __init__(self, D):
        self.domain = D

    def reduce(self, x):
        return self.domain.K(x)

    def eq(self, x, y):
        return self.domain.K(x) == self.domain.K(y)

    def divide(self, a, b):
        if a == 0:
            return self.domain.zero if b == 0 else None
        q = self.domain.K(b) / a
        return q if self.domain.is_integral(q) else None


def unit_diag_equiv(ring, diag, units):
    """Elementary matrices turning ``diag(a_i)`` into ``diag(a_i u_i)`` when ``prod(u_i) == 1``.

    ``ring`` is a :class:`QuotientRing` or a domain (then equalities are exact).
    Returns ``(moves, L, C)``: ``moves`` lists ``("left" | "right", matrix)`` in
    application order, and ``L diag(a) C == diag(a u)`` in ``ring``.
    """
    R = ring if isinstance(ring, QuotientRing) else _Exact(ring)
    D = R.domain
    n = len(diag)
    if len(units) != n:
        raise DimensionError("one unit per diagonal entry is needed")
    prod = D.one
    for u in units:
        prod = R.reduce(prod * u)
    if not R.eq(prod, D.one):
        raise PreconditionError("units do not multiply to 1")
    cur = [R.reduce(a) for a in diag]

    def ident():
        return [[D.one if i == j else D.zero for j in range(n)] for i in range(n)]

    def mul(A, B):
        return [[R.reduce(sum((A[i][k] * B[k][j] for k in range(n)), D.zero)) for j in range(n)]
                for i in range(n)]

    moves = []
    L, C = ident(), ident()
    x = D.one
    for i in range(n - 1):
        x = R.reduce(x * units[i])
        if R.eq(x, D.one):
            continue
        y = R.reduce(R.divide(x, D.one) if isinstance(R, QuotientRing) else D.one / x)
        c = R.divide(cur[i], cur[i + 1])
        if c is None:
            raise PreconditionError("diagonal is not a divisibility chain")
        left = ident()
        left[i + 1][i] = R.reduce(-c * y)
        r1, r2, r3 = ident(), ident(), ident()
        r1[i][i + 1] = x - 1
        r2[i + 1][i] = D.one
        r3[i][i + 1] = y - 1
        for side, E in (("right", r1), ("right", r2), ("right", r3), ("left", left)):
            moves.append((side, E))
        L = mul(left, L)
        C = mul(mul(mul(C, r1), r2), r3)
        cur[i], cur[i + 1] = R.reduce(cur[i] * x), R.reduce(cur[i + 1] * y)
    A = [[cur[i] if i == j else D.zero for j in range(n)] for i in range(n)]
    start = [[R.reduce(diag[i]) if i == j else D.zero for j in range(n)] for i in range(n)]
    got = mul(mul(L, start), C)
    target = [R.reduce(diag[i] * units[i]) for i in range(n)]
    if not all(R.eq(got[i][j], target[i] if i == j else D.zero) for i in range(n) for j in range(n)):
        raise InvariantViolation("unit diagonal moves do not reach the target")
    if not all(R.eq(A[i][i], target[i]) for i in range(n)):
        raise InvariantViolation("unit bookkeeping mismatch")
    return moves, L, C
