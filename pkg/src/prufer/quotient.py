"""Finite quotient rings ``A / <delta>`` of Z and of quadratic orders.

Elements are represented by canonical lifts in ``A``: the Z-coordinates are
reduced modulo the Hermite basis of the lattice ``delta * A``.  The ring is
zero-dimensional, which shows up concretely in :meth:`QuotientRing.split`:
every element is a unit on one idempotent component and nilpotent on the
other.
"""

from __future__ import annotations

from itertools import product

from .arith import PruferDomain
from .domains import lattice_hnf
from .errors import DomainError, InvariantViolation
from .intlinalg import solve_int_linear


class QuotientRing:
    """The ring ``A / <delta>`` for an integral ``delta != 0``."""

    def __init__(self, domain: PruferDomain, delta):
        delta = domain.K(delta)
        if delta == 0:
            raise DomainError("quotient by the zero ideal is not finite")
        if not domain.is_integral(delta):
            raise DomainError(f"{domain.fmt(delta)} is not integral")
        self.domain = domain
        self.delta = delta
        if domain.rank == 1:
            self._basis = (abs(domain.coords(delta)[0]),)
        elif domain.rank == 2:
            M = domain.mul_matrix(delta)
            self._basis = lattice_hnf([(M[0][0], M[1][0]), (M[0][1], M[1][1])])
        else:
            raise DomainError("quotients are only implemented for Z-rank 1 and 2")
        self._delta_matrix = domain.mul_matrix(delta)

    def __repr__(self):
        return f"QuotientRing({self.domain.name}, {self.domain.fmt(self.delta)})"

    @property
    def size(self) -> int:
        if self.domain.rank == 1:
            return self._basis[0]
        a, _, c = self._basis
        return a * c

    def _reduce_coords(self, c):
        if self.domain.rank == 1:
            return (c[0] % self._basis[0],)
        a, b, cc = self._basis
        x, y = c
        q = y // cc
        x, y = x - q * b, y - q * cc
        return (x % a, y)

    def reduce(self, x):
        """Canonical lift of ``x`` (an integral element of ``A``)."""
        D = self.domain
        return D.from_coords(self._reduce_coords(D.coords(D.K(x))))

    def eq(self, x, y) -> bool:
        return self.is_zero(self.domain.K(x) - self.domain.K(y))

    def is_zero(self, x) -> bool:
        return all(v == 0 for v in self._reduce_coords(self.domain.coords(self.domain.K(x))))

    def add(self, x, y):
        return self.reduce(self.domain.K(x) + y)

    def mul(self, x, y):
        return self.reduce(self.domain.K(x) * y)

    def power(self, x, k: int):
        result = self.reduce(self.domain.one)
        base = self.reduce(x)
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def divide(self, a, b):
        """Return ``q`` with ``q * a == b`` in the quotient, or ``None``."""
        D = self.domain
        Ma = D.mul_matrix(D.K(a))
        Md = self._delta_matrix
        r = D.rank
        system = [Ma[i] + Md[i] for i in range(r)]
        sol = solve_int_linear(system, list(D.coords(D.K(b))))
        if sol is None:
            return None
        return self.reduce(D.from_coords(sol[0][:r]))

    def is_unit(self, x) -> bool:
        return self.divide(x, self.domain.one) is not None

    def inverse(self, x):
        q = self.divide(x, self.domain.one)
        if q is None:
            raise DomainError(f"{self.domain.fmt(x)} is not a unit modulo {self.domain.fmt(self.delta)}")
        return q

    def split(self, s):
        """Idempotent splitting attached to ``s``.

        Returns ``(e, s_inv)`` with ``e*e == e``, ``s * s_inv == e`` and
        ``s`` nilpotent modulo ``e`` (that is, ``(1 - e) * s**k == 0`` for some
        ``k``).  Found by waiting for ``<s^k> == <s^(k+1)>``.
        """
        one = self.domain.one
        s = self.reduce(s)
        limit = max(2, self.size.bit_length() + 2)
        sk = s
        for k in range(1, limit + 1):
            y = self.divide(self.mul(sk, s), sk)
            if y is not None:
                break
            sk = self.mul(sk, s)
        else:
            raise InvariantViolation("powers did not stabilize in a finite ring")
        # s^k = s^(k+1) y, hence s^k = s^(2k) y^k and e = (s y)^k
        yk = self.power(y, k)
        e = self.mul(sk, yk)
        s_inv = self.mul(self.power(s, k - 1), yk)
        if not (self.eq(self.mul(e, e), e) and self.eq(self.mul(s, s_inv), e)):
            raise InvariantViolation("idempotent splitting failed")
        if not self.is_zero((one - e) * sk):
            raise InvariantViolation("element is not nilpotent off its idempotent")
        return e, self.reduce(s_inv * e)

    def nilpotency_index(self, x) -> int | None:
        x = self.reduce(x)
        p = x
        for k in range(1, self.size.bit_length() + 2):
            if self.is_zero(p):
                return k
            p = self.mul(p, x)
        return None

    def elements(self):
        """Enumerate all residues (canonical lifts).  Only for small rings."""
        D = self.domain
        if D.rank == 1:
            for v in range(self._basis[0]):
                yield D.from_coords((v,))
            return
        a, _, c = self._basis
        for x, y in product(range(a), range(c)):
            yield D.from_coords((x, y))

    def units(self):
        return [x for x in self.elements() if self.is_unit(x)]
