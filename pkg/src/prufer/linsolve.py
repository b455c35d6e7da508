"""Linear systems ``A X = B`` for pseudo-matrices.

``A = (h; e; A)`` is ``n x m`` and ``B = (h; b; B)`` is a single column; a
solution is a column ``X`` over ``K`` with ``x_j * b <= e_j``.  Usual systems
over the domain are the case where every ideal is ``<1>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import comax_certificate
from .errors import DimensionError, DomainError, InvariantViolation, PreconditionError
from .hermite import HermiteForm, double_hermite
from .ideals import ideal_includes, ideal_mul, member, unit_ideal
from .matrix import mat_inverse, mat_mul, mat_rank
from .pseudo import (PseudoBasis, PseudoMatrix, chains_equal, det_ideal, determinantal_ideal,
                     pm_mul, pm_rank)


@dataclass
class LinearSolution:
    """Outcome of a solve.

    When ``solvable`` is false, ``failing_index`` names the coordinate of
    ``L B`` (double Hermite frame) that could not be matched and ``reason``
    says whether the system already fails over ``K``.
    """

    solvable: bool
    particular: PseudoMatrix | None = None
    kernel: PseudoBasis | None = None
    failing_index: int | None = None
    reason: str = ""
    form: HermiteForm | None = field(default=None, repr=False)


def _check_rhs(A: PseudoMatrix, B: PseudoMatrix):
    if B.m != 1:
        raise DimensionError("right-hand side must be a single column")
    if B.n != A.n or not chains_equal(A.rows, B.rows):
        raise DimensionError("row ideals of A and B differ")


def augmented(A: PseudoMatrix, B: PseudoMatrix) -> PseudoMatrix:
    """The pseudo-matrix ``[A | B]``."""
    _check_rhs(A, B)
    return PseudoMatrix(A.domain, A.rows, A.cols + B.cols,
                        [ra + rb for ra, rb in zip(A.entries, B.entries)], check=False)


def solvable_by_ideals(A: PseudoMatrix, B: PseudoMatrix) -> bool:
    """Solvable iff ``[A | B]`` has the same determinantal ideals as ``A``."""
    AB = augmented(A, B)
    r = pm_rank(A)
    if pm_rank(AB) != r:
        return False
    return all(determinantal_ideal(A, k) == determinantal_ideal(AB, k) for k in range(1, r + 1))


def _verify(A: PseudoMatrix, X: PseudoMatrix, B: PseudoMatrix) -> None:
    if pm_mul(A, X, check=False).entries != B.entries:
        raise InvariantViolation("substitution check A X = B failed")


def cramer_special(A: PseudoMatrix, B: PseudoMatrix) -> LinearSolution:
    """Solve over ``K`` when every order-one minor ideal of ``B`` lies in ``det(A)``."""
    _check_rhs(A, B)
    if A.n != A.m:
        raise DimensionError("Cramer solving needs a square pseudo-matrix")
    d = det_ideal(A)
    if d.is_zero:
        raise PreconditionError("determinant ideal is zero")
    for i in range(B.n):
        if not ideal_includes(d, B.minor1(i, 0)):
            raise PreconditionError(f"minor ideal of B at row {i} is not inside det(A)")
    D = A.domain
    X = mat_mul(D, mat_inverse(D, A.entries), B.entries, inner=A.n, ncols=1) if A.n else []
    sol = PseudoMatrix(D, A.cols, B.cols, X)
    _verify(A, sol, B)
    return LinearSolution(True, sol, PseudoBasis(D, [], [], A.m))


def solve_full(A: PseudoMatrix, B: PseudoMatrix, bezout_only: bool = False) -> LinearSolution:
    """General solution through a double Hermite reduction ``L A C = [[T, 0], [0, 0]]``."""
    _check_rhs(A, B)
    D = A.domain
    n, m = A.shape
    dh = double_hermite(A, bezout_only)
    r = dh.rank
    Cm = dh.C.entries
    kernel = PseudoBasis(D, [[Cm[i][j] for i in range(m)] for j in range(r, m)], dh.C.cols[r:], m)
    LB = mat_mul(D, dh.L.entries, B.entries, inner=n, ncols=1)
    for i in range(r, n):
        if LB[i][0] != 0:
            return LinearSolution(False, None, kernel, i, "inconsistent over the fraction field", dh)
    T = dh.T
    ecols = dh.C.cols
    bgens = B.cols[0].gens
    z = []
    for i in range(r):
        acc = LB[i][0]
        for j in range(i):
            acc = acc - T[i][j] * z[j]
        zi = acc / T[i][i]
        if not all(member(zi * g, ecols[i]) for g in bgens):
            return LinearSolution(False, None, kernel, i,
                                  "solution over the fraction field violates an ideal constraint", dh)
        z.append(zi)
    y = z + [D.zero] * (m - r)
    X = [[sum((Cm[i][j] * y[j] for j in range(m) if y[j] != 0), D.zero)] for i in range(m)]
    sol = PseudoMatrix(D, A.cols, B.cols, X)
    _verify(A, sol, B)
    for v in kernel.vectors:
        if any(sum((A.entries[i][j] * v[j] for j in range(m)), D.zero) != 0 for i in range(n)):
            raise InvariantViolation("kernel vector is not annihilated")
    return LinearSolution(True, sol, kernel, None, "", dh)


def patch_local(solutions, A: PseudoMatrix, B: PseudoMatrix) -> PseudoMatrix:
    """Glue local solutions ``A Y_i = s_i^k_i B`` for comaximal ``s_i`` into ``A X = B``.

    ``solutions`` is a list of triples ``(s_i, Y_i, k_i)`` with ``Y_i`` a
    pseudo-matrix column over the domain.
    """
    _check_rhs(A, B)
    D = A.domain
    if not solutions:
        raise PreconditionError("no local solutions given")
    k = max(ki for _, _, ki in solutions)
    powers, cols = [], []
    for s, Y, ki in solutions:
        s = D.K(s)
        if not D.is_integral(s):
            raise DomainError("localizing elements must be integral")
        scale = s ** (k - ki)
        pk = s ** k
        Ys = [[scale * row[0]] for row in Y.entries]
        if mat_mul(D, A.entries, Ys, inner=A.m, ncols=1) != [[pk * row[0]] for row in B.entries]:
            raise PreconditionError("a local solution does not satisfy A Y = s^k B")
        powers.append(pk)
        cols.append(Ys)
    if all(p == 0 for p in powers):
        raise PreconditionError("localizing elements are not comaximal")
    sigma = comax_certificate(D, powers)
    u = []
    for p, sg in zip(powers, sigma):
        ui = sg / p if sg != 0 else D.zero
        if not D.is_integral(ui):
            raise PreconditionError("localizing elements are not comaximal")
        u.append(ui)
    if sum((ui * p for ui, p in zip(u, powers)), D.zero) != D.one:
        raise InvariantViolation("patching coefficients do not sum to 1")
    X = [[sum((ui * Ys[i][0] for ui, Ys in zip(u, cols)), D.zero)] for i in range(A.m)]
    sol = PseudoMatrix(D, A.cols, B.cols, X)
    _verify(A, sol, B)
    return sol
