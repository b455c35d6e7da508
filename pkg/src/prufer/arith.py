"""Exact base-domain arithmetic and the explicit Prüfer domain contract.

A :class:`PruferDomain` bundles what every algorithm in the package needs
from the ring ``A`` and its fraction field ``K``:

* exact arithmetic on field elements (Python operators on the element type),
* a zero test and an exact-divisibility test with quotient,
* the certificate oracle: for a nonzero generator list ``(a_1, ..., a_n)`` of
  ``K``, elements ``s_i`` of ``A`` with ``sum(s_i) == 1`` and
  ``s_i * a_j / a_i`` in ``A`` for every ``i, j`` with ``a_i != 0``.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Iterable, Sequence

from .errors import DomainError, EmptyIdealError, InvariantViolation, MalformedInputError


class PruferDomain(ABC):
    """Abstract explicit Prüfer domain with explicit divisibility."""

    #: Z-rank of the ring (1 for Z, 2 for a quadratic order).
    rank: int
    name: str

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def K(self, value) -> Any:
        """Coerce ``value`` into a canonical field element."""

    @abstractmethod
    def fraction(self, num, den) -> Any:
        """Build ``num / den`` from two domain elements; ``den`` must be nonzero."""

    @abstractmethod
    def is_integral(self, x) -> bool:
        """Whether the field element ``x`` lies in the domain."""

    @abstractmethod
    def denominator(self, x) -> int:
        """Least positive integer ``d`` with ``d * x`` integral."""

    @abstractmethod
    def coords(self, x) -> tuple[int, ...]:
        """Integer coordinates of an integral element on the Z-basis."""

    @abstractmethod
    def from_coords(self, c: Sequence[int]) -> Any: ...

    def mul_matrix(self, a) -> list[list[int]]:
        """Integer matrix of ``x -> a*x`` on the Z-basis (columns are images)."""
        basis = [self.from_coords([int(i == j) for i in range(self.rank)])
                 for j in range(self.rank)]
        cols = [self.coords(a * b) for b in basis]
        return [[cols[j][i] for j in range(self.rank)] for i in range(self.rank)]

    @abstractmethod
    def certificate(self, gens: Sequence) -> list:
        """The certificate oracle (black box) on a nonzero list of field elements."""

    @abstractmethod
    def lattice(self, gens: Sequence) -> tuple:
        """Canonical Z-basis of the fractional ideal generated by ``gens``.

        Independent of the certificate machinery; used as a brute-force oracle
        and for canonical output.
        """

    def principal_generator(self, gens: Sequence):
        """A single generator of the ideal when the domain can compute one, else None."""
        return None

    @abstractmethod
    def random_element(self, rng, bound: int = 5) -> Any: ...

    @abstractmethod
    def to_json(self, x) -> Any: ...

    @abstractmethod
    def element_from_json(self, data) -> Any: ...

    @abstractmethod
    def descriptor(self) -> dict: ...

    def fmt(self, x) -> str:
        return str(x)

    def clear_denominators(self, gens: Sequence) -> tuple[list, int]:
        """Scale ``gens`` by the least common positive integer denominator."""
        from math import lcm

        D = 1
        for g in gens:
            D = lcm(D, self.denominator(g))
        return [g * D for g in gens], D


def field_normalize(domain: PruferDomain, num, den):
    """Canonical field element for ``num / den``.

    Raises :class:`MalformedInputError` when ``den`` is zero.
    """
    if den == 0:
        raise MalformedInputError("zero denominator")
    return domain.fraction(num, den)


def divides(domain: PruferDomain, a, b):
    """Return ``q`` with ``b == q * a`` when ``b`` lies in ``<a>``, else ``None``."""
    if a == 0:
        raise DomainError("divisibility test by zero")
    q = domain.K(b) / domain.K(a)
    return q if domain.is_integral(q) else None


def certificate_is_valid(domain: PruferDomain, gens: Sequence, cert: Sequence) -> bool:
    """Check the certificate contract: sum is 1 and ``s_i a_j / a_i`` integral."""
    if len(gens) != len(cert):
        return False
    total = domain.zero
    for s in cert:
        if not domain.is_integral(s):
            return False
        total = total + s
    if total != domain.one:
        return False
    for a_i, s_i in zip(gens, cert):
        if s_i == 0:
            continue
        if a_i == 0:
            return False
        for a_j in gens:
            if not domain.is_integral(s_i * a_j / a_i):
                return False
    return True


def comax_certificate(domain: PruferDomain, gens: Iterable) -> list:
    """Certificate of local principality for a nonzero generator list.

    Zero generators receive ``s_i = 0``.  The output is re-validated before it
    is returned.
    """
    gens = [domain.K(g) for g in gens]
    if not gens or all(g == 0 for g in gens):
        raise EmptyIdealError("certificate requested for the zero ideal")
    cert = domain.certificate(gens)
    if not certificate_is_valid(domain, gens, cert):
        raise InvariantViolation(f"certificate oracle returned invalid {cert} for {gens}")
    return cert
