"""Pseudo-bases and pseudo-matrices over an explicit Prüfer domain.

A pseudo-matrix ``(h_1..h_n; e_1..e_m; A)`` is an ``n x m`` matrix over
``K`` with a row ideal ``h_i`` and a column ideal ``e_j`` such that
``a_ij * e_j <= h_i``.  It encodes a linear map from ``e_1 x ... x e_m`` to
``h_1 x ... x h_n``.  Its determinant ideal is
``det(A) * prod(e_j) * prod(h_i)^-1``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .arith import PruferDomain
from .errors import DimensionError, MalformedInputError, NotInvertibleError, ValidationError
from .ideals import (FgIdeal, ideal_eq, ideal_from_json, ideal_inverse, ideal_mul, ideal_to_json,
                     member, simplify, unit_ideal, zero_ideal)
from .matrix import (mat_det, mat_eq, mat_fmt, mat_identity, mat_inverse, mat_mul, mat_rank,
                     mat_solve, mat_transpose, submatrix)


def _same(I: FgIdeal, J: FgIdeal) -> bool:
    return I is J or ideal_eq(I, J)


def chains_equal(xs: Sequence[FgIdeal], ys: Sequence[FgIdeal]) -> bool:
    return len(xs) == len(ys) and all(_same(a, b) for a, b in zip(xs, ys))


def ideal_product(D: PruferDomain, ideals: Sequence[FgIdeal]) -> FgIdeal:
    result = unit_ideal(D)
    for I in ideals:
        result = simplify(ideal_mul(result, I))
    return result


class PseudoMatrix:
    """An ``n x m`` pseudo-matrix.  Construction validates the inclusions."""

    __slots__ = ("domain", "rows", "cols", "entries")

    def __init__(self, domain: PruferDomain, rows: Sequence[FgIdeal], cols: Sequence[FgIdeal],
                 entries, check: bool = True):
        self.domain = domain
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.entries = [[domain.K(x) for x in r] for r in entries]
        if len(self.entries) != len(self.rows) or any(len(r) != len(self.cols) for r in self.entries):
            raise DimensionError(
                f"entry matrix does not match {len(self.rows)} row and {len(self.cols)} column ideals")
        for I in self.rows + self.cols:
            if I.is_zero:
                raise MalformedInputError("pseudo-matrix ideals must be nonzero")
        if check:
            pm_validate(self)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n, self.m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __repr__(self):
        D = self.domain
        return (f"PseudoMatrix(rows={list(self.rows)}, cols={list(self.cols)}, "
                f"entries={mat_fmt(D, self.entries)})")

    def __matmul__(self, other: "PseudoMatrix") -> "PseudoMatrix":
        return pm_mul(self, other)

    def minor1(self, i: int, j: int) -> FgIdeal:
        """Order-one minor ideal ``a_ij e_j h_i^-1``."""
        return ideal_mul(self.cols[j], ideal_inverse(self.rows[i])).scale(self.entries[i][j])

    def is_usual(self) -> bool:
        return all(I.is_one() for I in self.rows + self.cols)


def violation(A: PseudoMatrix):
    """First position ``(i, j)`` with ``a_ij e_j`` not inside ``h_i``, or ``None``."""
    for i, row in enumerate(A.entries):
        h = A.rows[i]
        for j, a in enumerate(row):
            if a == 0:
                continue
            for g in A.cols[j].gens:
                if not member(a * g, h):
                    return (i, j)
    return None


def pm_validate(A: PseudoMatrix) -> None:
    pos = violation(A)
    if pos is not None:
        i, j = pos
        raise ValidationError(f"entry ({i}, {j}) violates a_ij e_j <= h_i", pos)


def usual(D: PruferDomain, entries, ncols: int | None = None) -> PseudoMatrix:
    """A usual matrix over ``A`` seen as a pseudo-matrix with all ideals ``<1>``."""
    one = unit_ideal(D)
    n = len(entries)
    m = len(entries[0]) if entries else (ncols or 0)
    return PseudoMatrix(D, [one] * n, [one] * m, entries)


def identity_pm(D: PruferDomain, ideals: Sequence[FgIdeal]) -> PseudoMatrix:
    """Strict identity on a chain of ideals."""
    return PseudoMatrix(D, ideals, ideals, mat_identity(D, len(ideals)), check=False)


def pm_equal(A: PseudoMatrix, B: PseudoMatrix) -> bool:
    """Bit-exact equality of entries, with ideal equality along both chains."""
    return (A.shape == B.shape and mat_eq(A.entries, B.entries)
            and chains_equal(A.rows, B.rows) and chains_equal(A.cols, B.cols))


def pm_mul(B: PseudoMatrix, A: PseudoMatrix, check: bool = True) -> PseudoMatrix:
    if B.m != A.n:
        raise DimensionError(f"cannot compose {B.shape} with {A.shape}")
    if not chains_equal(B.cols, A.rows):
        raise DimensionError("column ideals of the left factor differ from row ideals of the right")
    prod = mat_mul(B.domain, B.entries, A.entries, inner=B.m, ncols=A.m)
    return PseudoMatrix(B.domain, B.rows, A.cols, prod, check=check)


def transpose(A: PseudoMatrix) -> PseudoMatrix:
    """``(e^-1; h^-1; A^T)``, the dual map."""
    return PseudoMatrix(A.domain, [ideal_inverse(e) for e in A.cols],
                        [ideal_inverse(h) for h in A.rows],
                        mat_transpose(A.entries, A.m), check=False)


def minor_ideal(A: PseudoMatrix, rows: Sequence[int], cols: Sequence[int]) -> FgIdeal:
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise DimensionError("minor needs as many rows as columns")
    for idx, bound in ((rows, A.n), (cols, A.m)):
        if any(b <= a for a, b in zip(idx, idx[1:])) or any(not 0 <= k < bound for k in idx):
            raise DimensionError(f"bad index list {idx}")
    D = A.domain
    d = mat_det(D, submatrix(A.entries, rows, cols))
    if d == 0:
        return zero_ideal(D)
    e = ideal_product(D, [A.cols[j] for j in cols])
    h = ideal_product(D, [A.rows[i] for i in rows])
    return simplify(ideal_mul(e, ideal_inverse(h)).scale(d))


def det_ideal(A: PseudoMatrix) -> FgIdeal:
    if A.n != A.m:
        raise DimensionError("determinant ideal of a non-square pseudo-matrix")
    return minor_ideal(A, range(A.n), range(A.m))


class _ProductCache:
    def __init__(self, D, ideals, invert=False):
        self.D, self.ideals, self.invert = D, ideals, invert
        self.memo = {(): unit_ideal(D)}

    def __call__(self, idx: tuple) -> FgIdeal:
        got = self.memo.get(idx)
        if got is None:
            I = self.ideals[idx[-1]]
            if self.invert:
                I = ideal_inverse(I)
            got = simplify(ideal_mul(self(idx[:-1]), I))
            self.memo[idx] = got
        return got


def determinantal_ideal(A: PseudoMatrix, r: int) -> FgIdeal:
    """Sum of all order-``r`` minor ideals, with ``<1>`` for ``r <= 0`` and ``0`` past the size."""
    D = A.domain
    if r <= 0:
        return unit_ideal(D)
    if r > min(A.n, A.m):
        return zero_ideal(D)
    ecache = _ProductCache(D, A.cols)
    hcache = _ProductCache(D, A.rows, invert=True)
    gens = []
    for rows in combinations(range(A.n), r):
        for cols in combinations(range(A.m), r):
            d = mat_det(D, submatrix(A.entries, rows, cols))
            if d == 0:
                continue
            I = ideal_mul(ecache(cols), hcache(rows))
            gens.extend(d * g for g in I.gens)
    if not gens:
        return zero_ideal(D)
    return simplify(FgIdeal(D, gens))


def determinantal_chain(A: PseudoMatrix) -> list[FgIdeal]:
    """``[D_1, ..., D_min(n,m)]``."""
    return [determinantal_ideal(A, r) for r in range(1, min(A.n, A.m) + 1)]


def pm_rank(A: PseudoMatrix) -> int:
    return mat_rank(A.domain, A.entries, A.m)


def pm_is_invertible(A: PseudoMatrix) -> bool:
    if A.n != A.m:
        return False
    return det_ideal(A).is_one()


def pm_inverse(A: PseudoMatrix) -> PseudoMatrix:
    if A.n != A.m:
        raise DimensionError("inverse of a non-square pseudo-matrix")
    d = det_ideal(A)
    if not d.is_one():
        raise NotInvertibleError(f"determinant ideal is {d}, not <1>", ideal=d)
    inv = mat_inverse(A.domain, A.entries) if A.n else []
    return PseudoMatrix(A.domain, A.cols, A.rows, inv)


def elementary_pm(D: PruferDomain, ideals: Sequence[FgIdeal], i: int, j: int, lam) -> PseudoMatrix:
    """Strictly square elementary pseudo-matrix ``I + lam E_ij``.

    Multiplying on the right adds ``lam`` times column ``i`` to column ``j``;
    this requires ``lam e_j <= e_i``.
    """
    if i == j:
        raise DimensionError("elementary pseudo-matrix needs i != j")
    M = mat_identity(D, len(ideals))
    M[i][j] = D.K(lam)
    return PseudoMatrix(D, ideals, ideals, M)


def bezout_matrix(D: PruferDomain, n: int, i: int, j: int, u, v, s, t):
    """Identity except ``[[u, v], [s, t]]`` at rows/columns ``i < j``; ``ut - sv == 1``."""
    u, v, s, t = (D.K(x) for x in (u, v, s, t))
    if not i < j < n:
        raise DimensionError("Bezout matrix needs 0 <= i < j < n")
    if u * t - s * v != 1:
        raise MalformedInputError("Bezout matrix needs ut - sv = 1")
    M = mat_identity(D, n)
    M[i][i], M[i][j], M[j][i], M[j][j] = u, v, s, t
    return M


def pm_block(A: PseudoMatrix, p: int, q: int):
    """Split after row ``p`` and column ``q`` into ``(A11, A12, A21, A22)``."""
    if not (0 <= p <= A.n and 0 <= q <= A.m):
        raise DimensionError(f"split ({p}, {q}) outside a {A.n}x{A.m} pseudo-matrix")
    D = A.domain
    E = A.entries
    top, bot = range(p), range(p, A.n)
    left, right = range(q), range(q, A.m)

    def blk(rs, cs):
        return PseudoMatrix(D, [A.rows[i] for i in rs], [A.cols[j] for j in cs],
                            [[E[i][j] for j in cs] for i in rs], check=False)

    return blk(top, left), blk(top, right), blk(bot, left), blk(bot, right)


def pm_reassemble(A11, A12, A21, A22) -> PseudoMatrix:
    if not (chains_equal(A11.rows, A12.rows) and chains_equal(A21.rows, A22.rows)
            and chains_equal(A11.cols, A21.cols) and chains_equal(A12.cols, A22.cols)):
        raise DimensionError("blocks do not share their ideal chains")
    entries = [r1 + r2 for r1, r2 in zip(A11.entries, A12.entries)]
    entries += [r1 + r2 for r1, r2 in zip(A21.entries, A22.entries)]
    return PseudoMatrix(A11.domain, A11.rows + A21.rows, A11.cols + A12.cols, entries, check=False)


class PseudoBasis:
    """The module ``e_1 * I_1 + ... + e_r * I_r`` inside ``K^N``.

    The vectors ``e_k`` must be linearly independent over ``K``.
    """

    def __init__(self, domain: PruferDomain, vectors, ideals: Sequence[FgIdeal], dim: int | None = None):
        self.domain = domain
        self.vectors = [[domain.K(x) for x in v] for v in vectors]
        self.ideals = tuple(ideals)
        if len(self.vectors) != len(self.ideals):
            raise DimensionError("one ideal per basis vector is needed")
        self.dim = len(self.vectors[0]) if self.vectors else (dim or 0)
        if any(len(v) != self.dim for v in self.vectors):
            raise DimensionError("basis vectors of different lengths")
        if any(I.is_zero for I in self.ideals):
            raise MalformedInputError("pseudo-basis ideals must be nonzero")
        if mat_rank(domain, self.vectors, self.dim) != len(self.vectors):
            raise DimensionError("pseudo-basis vectors are linearly dependent")

    def __len__(self):
        return len(self.vectors)

    def __repr__(self):
        D = self.domain
        parts = ["([" + ", ".join(D.fmt(x) for x in v) + f"], {I})"
                 for v, I in zip(self.vectors, self.ideals)]
        return "PseudoBasis(" + ", ".join(parts) + ")"

    def coordinates(self, v):
        """Coefficients of ``v`` on the vectors over ``K``, or ``None`` outside their span."""
        if not self.vectors:
            return [] if all(x == 0 for x in v) else None
        cols = mat_transpose(self.vectors, 0)
        return mat_solve(self.domain, cols, [self.domain.K(x) for x in v], len(self.vectors))

    def contains(self, v) -> bool:
        x = self.coordinates(v)
        return x is not None and all(member(c, I) for c, I in zip(x, self.ideals))

    def generators(self):
        """Finite Z-module generating family ``e_k * g`` for ``g`` in ``I_k``."""
        return [[g * x for x in v] for v, I in zip(self.vectors, self.ideals) for g in I.gens]

    def includes(self, other: "PseudoBasis") -> bool:
        return all(self.contains(v) for v in other.generators())


def module_eq(P: PseudoBasis, Q: PseudoBasis) -> bool:
    return P.dim == Q.dim and P.includes(Q) and Q.includes(P)


def change_pseudobasis(basis: PseudoBasis, P: PseudoMatrix) -> PseudoBasis:
    """New pseudo-basis ``e'_j = sum_i p_ij e_i`` on the column ideals of ``P``."""
    if P.n != len(basis) or not chains_equal(P.rows, basis.ideals):
        raise DimensionError("row ideals of the transition matrix differ from the basis ideals")
    if not pm_is_invertible(P):
        raise NotInvertibleError("transition pseudo-matrix is not invertible", det_ideal(P))
    D = basis.domain
    new = []
    for j in range(P.m):
        v = [D.zero] * basis.dim
        for i in range(P.n):
            p = P.entries[i][j]
            if p:
                v = [a + p * b for a, b in zip(v, basis.vectors[i])]
        new.append(v)
    return PseudoBasis(D, new, P.cols, basis.dim)


def standard_basis(D: PruferDomain, ideals: Sequence[FgIdeal]) -> PseudoBasis:
    n = len(ideals)
    return PseudoBasis(D, mat_identity(D, n), ideals, n)


def pm_to_json(A: PseudoMatrix) -> dict:
    D = A.domain
    return {"row_ideals": [ideal_to_json(I) for I in A.rows],
            "col_ideals": [ideal_to_json(I) for I in A.cols],
            "entries": [[D.to_json(x) for x in r] for r in A.entries]}


def pm_from_json(D: PruferDomain, data) -> PseudoMatrix:
    if not isinstance(data, dict):
        raise MalformedInputError("pseudo-matrix must be an object")
    try:
        entries = data["entries"]
    except KeyError as exc:
        raise MalformedInputError("pseudo-matrix needs 'entries'") from exc
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise MalformedInputError("'entries' must be a list of rows")
    n = len(entries)
    m = len(entries[0]) if entries else 0
    if any(len(r) != m for r in entries):
        raise DimensionError("ragged entry matrix")
    one = unit_ideal(D)
    rows = [ideal_from_json(D, x) for x in data["row_ideals"]] if "row_ideals" in data else [one] * n
    cols = [ideal_from_json(D, x) for x in data["col_ideals"]] if "col_ideals" in data else [one] * m
    if not entries:
        m = len(cols)
    return PseudoMatrix(D, rows, cols, [[D.element_from_json(x) for x in r] for r in entries])
