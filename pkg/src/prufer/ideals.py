"""Finitely generated fractional ideals carrying comaximality certificates.

Every nonzero :class:`FgIdeal` stores generators ``a_1, ..., a_n`` in ``K``
together with a certificate ``s_1, ..., s_n`` in ``A`` such that
``sum(s_i) == 1`` and ``s_i * a_j / a_i`` is integral.  All the operations of
this module (sum, intersection, product, inverse, membership) are computed
from certificates alone; the Z-lattice view of a domain is used only for
output and as an independent oracle in tests.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .arith import PruferDomain, certificate_is_valid, comax_certificate
from .errors import DomainError, EmptyIdealError, InvariantViolation, MalformedInputError


class FgIdeal:
    """A finitely generated fractional ideal of ``domain``.

    The zero ideal has no generators.  ``I == J`` is equality of ideals, not
    of generator lists, so ideals are unhashable.
    """

    __slots__ = ("domain", "gens", "cert", "_inverse")

    def __init__(self, domain: PruferDomain, gens: Iterable = (), cert: Sequence | None = None):
        gens = tuple(domain.K(g) for g in gens)
        self.domain = domain
        self._inverse = None
        if all(g == 0 for g in gens):
            self.gens, self.cert = (), ()
            return
        if cert is None:
            cert = comax_certificate(domain, gens)
        else:
            cert = [domain.K(c) for c in cert]
            if not certificate_is_valid(domain, gens, cert):
                raise InvariantViolation(f"invalid certificate {cert} for {gens}")
        self.gens = gens
        self.cert = tuple(cert)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def __len__(self):
        return len(self.gens)

    def __contains__(self, x) -> bool:
        return member(x, self)

    def __eq__(self, other):
        if not isinstance(other, FgIdeal):
            return NotImplemented
        return ideal_eq(self, other)

    __hash__ = None

    def __le__(self, other: "FgIdeal") -> bool:
        return ideal_includes(other, self)

    def __ge__(self, other: "FgIdeal") -> bool:
        return ideal_includes(self, other)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        if isinstance(other, FgIdeal):
            return ideal_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __and__(self, other):
        return ideal_intersect(self, other)

    def __repr__(self):
        if self.is_zero:
            return "<0>"
        return "<" + ", ".join(self.domain.fmt(g) for g in canonical_gens(self)) + ">"

    def scale(self, lam) -> "FgIdeal":
        """The ideal ``lam * I``; the certificate carries over unchanged."""
        lam = self.domain.K(lam)
        if lam == 0 or self.is_zero:
            return FgIdeal(self.domain)
        return FgIdeal(self.domain, [lam * g for g in self.gens], self.cert)

    def is_integral(self) -> bool:
        return all(self.domain.is_integral(g) for g in self.gens)

    def is_one(self) -> bool:
        return not self.is_zero and self.is_integral() and member(self.domain.one, self)

    def inverse(self) -> "FgIdeal":
        return ideal_inverse(self)


def zero_ideal(domain: PruferDomain) -> FgIdeal:
    return FgIdeal(domain)


def unit_ideal(domain: PruferDomain) -> FgIdeal:
    return FgIdeal(domain, [domain.one], [domain.one])


def principal(domain: PruferDomain, x) -> FgIdeal:
    x = domain.K(x)
    if x == 0:
        return FgIdeal(domain)
    return FgIdeal(domain, [x], [domain.one])


def _require_nonzero(I: FgIdeal, what: str):
    if I.is_zero:
        raise DomainError(f"{what} of the zero ideal")


def loc_matrix(I: FgIdeal) -> list[list]:
    """Principal localization matrix ``c_ij = s_i a_j / a_i``."""
    _require_nonzero(I, "localization matrix")
    D = I.domain
    rows = []
    for a_i, s_i in zip(I.gens, I.cert):
        if s_i == 0:
            rows.append([D.zero] * len(I.gens))
        else:
            rows.append([s_i * a_j / a_i for a_j in I.gens])
    return rows


def drop_superfluous(I: FgIdeal) -> FgIdeal:
    """Remove the generators whose certificate entry is zero."""
    if I.is_zero:
        return I
    keep = [k for k, s in enumerate(I.cert) if s != 0]
    if len(keep) == len(I.gens):
        return I
    return FgIdeal(I.domain, [I.gens[k] for k in keep], [I.cert[k] for k in keep])


def simplify(I: FgIdeal) -> FgIdeal:
    """An equal ideal with few generators.

    Over Z this is the positive generator; over a quadratic order, lists longer
    than two are replaced by the Hermite Z-basis, which also generates the
    ideal.
    """
    if I.is_zero:
        return I
    D = I.domain
    g = D.principal_generator(I.gens)
    if g is not None:
        if len(I.gens) == 1 and I.gens[0] == g:
            return I
        return principal(D, g)
    J = drop_superfluous(I)
    if len(J.gens) <= 2:
        return J
    lat = D.lattice(J.gens)
    if D.rank == 2:
        a, b, c = lat
        return FgIdeal(D, [D.K(a), D.K(b) + D.K(c) * D.w])
    return J


def colon_split(I: FgIdeal, J: FgIdeal):
    """Return ``(s, t)`` in ``A`` with ``s + t == 1``, ``s J <= I`` and ``t I <= J``."""
    _require_nonzero(I, "colon split")
    _require_nonzero(J, "colon split")
    D = I.domain
    s = D.zero
    t = D.zero
    for a_i, s_i in zip(I.gens, I.cert):
        if s_i == 0:
            continue
        for b_j, t_j in zip(J.gens, J.cert):
            if t_j == 0:
                continue
            u, v = comax_certificate(D, [a_i, b_j])
            w = s_i * t_j
            s = s + u * w
            t = t + v * w
    return s, t


def ideal_sum(I: FgIdeal, J: FgIdeal) -> FgIdeal:
    if I.is_zero:
        return J
    if J.is_zero:
        return I
    D = I.domain
    u = [D.zero] * len(I.gens)
    v = [D.zero] * len(J.gens)
    for i, (a_i, s_i) in enumerate(zip(I.gens, I.cert)):
        if s_i == 0:
            continue
        for j, (b_j, t_j) in enumerate(zip(J.gens, J.cert)):
            if t_j == 0:
                continue
            uij, vij = comax_certificate(D, [a_i, b_j])
            w = s_i * t_j
            u[i] = u[i] + uij * w
            v[j] = v[j] + vij * w
    return FgIdeal(D, I.gens + J.gens, u + v)


def ideal_intersect(I: FgIdeal, J: FgIdeal) -> FgIdeal:
    if I.is_zero or J.is_zero:
        return FgIdeal(I.domain)
    s, t = colon_split(I, J)
    return FgIdeal(I.domain, [s * b for b in J.gens] + [t * a for a in I.gens])


def ideal_mul(I: FgIdeal, J: FgIdeal) -> FgIdeal:
    """Product ideal; the certificate is the product of the two certificates."""
    if I.is_zero or J.is_zero:
        return FgIdeal(I.domain)
    gens, cert = [], []
    for a, s in zip(I.gens, I.cert):
        if s == 0:
            continue
        for b, t in zip(J.gens, J.cert):
            if t == 0:
                continue
            gens.append(a * b)
            cert.append(s * t)
    return FgIdeal(I.domain, gens, cert)


def ideal_prod(ideals: Iterable[FgIdeal], domain: PruferDomain) -> FgIdeal:
    result = unit_ideal(domain)
    for I in ideals:
        result = simplify(ideal_mul(result, I))
    return result


def ideal_inverse(I: FgIdeal) -> FgIdeal:
    """``I^-1 = (1/a_k) <c_1k, ..., c_nk>`` for the first ``k`` with ``s_k != 0``."""
    _require_nonzero(I, "inverse")
    if I._inverse is not None:
        return I._inverse
    D = I.domain
    k = next(i for i, s in enumerate(I.cert) if s != 0)
    a_k = I.gens[k]
    col = [s_i * a_k / a_i for a_i, s_i in zip(I.gens, I.cert) if s_i != 0]
    inv = FgIdeal(D, [c / a_k for c in col])
    inv._inverse = I
    I._inverse = inv
    return inv


def ideal_div(I: FgIdeal, J: FgIdeal) -> FgIdeal:
    """``I * J^-1``."""
    return ideal_mul(I, ideal_inverse(J))


def member(x, I: FgIdeal) -> bool:
    """``x`` lies in ``I`` iff every ``s_i x / a_i`` is integral."""
    D = I.domain
    x = D.K(x)
    if x == 0:
        return True
    if I.is_zero:
        return False
    for a_i, s_i in zip(I.gens, I.cert):
        if s_i != 0 and not D.is_integral(s_i * x / a_i):
            return False
    return True


def ideal_includes(I: FgIdeal, J: FgIdeal) -> bool:
    """Whether ``J <= I``."""
    return all(member(g, I) for g in J.gens)


def ideal_eq(I: FgIdeal, J: FgIdeal) -> bool:
    if I is J:
        return True
    if I.is_zero or J.is_zero:
        return I.is_zero and J.is_zero
    return ideal_includes(I, J) and ideal_includes(J, I)


def canonical(I: FgIdeal) -> tuple:
    """Canonical Z-lattice description, equal for equal ideals."""
    if I.is_zero:
        return ()
    return I.domain.lattice(I.gens)


def canonical_gens(I: FgIdeal) -> list:
    """Generators read off the canonical Z-lattice: equal ideals give equal lists."""
    if I.is_zero:
        return []
    D = I.domain
    lat = D.lattice(I.gens)
    if D.rank == 1:
        return [D.K(lat[0])]
    a, b, c = lat
    if b == 0 and c == a:
        return [D.K(a)]
    return [D.K(a), D.K(b) + D.K(c) * D.w]


def ideal_to_json(I: FgIdeal) -> dict:
    """``{"num_gens": [...], "den": ...}`` with one common integer denominator."""
    D = I.domain
    if I.is_zero:
        return {"num_gens": [], "den": "1"}
    ints, den = D.clear_denominators(canonical_gens(I))
    return {"num_gens": [D.to_json(g) for g in ints], "den": str(den)}


def ideal_from_json(domain: PruferDomain, data) -> FgIdeal:
    if not isinstance(data, dict) or "num_gens" not in data:
        raise MalformedInputError("ideal must be an object with 'num_gens'")
    gens = data["num_gens"]
    if not isinstance(gens, list):
        raise MalformedInputError("'num_gens' must be a list")
    den = domain.element_from_json(data.get("den", 1))
    if den == 0:
        raise MalformedInputError("ideal with zero denominator")
    if not all(domain.is_integral(domain.element_from_json(g)) for g in gens) or \
            not domain.is_integral(den):
        raise MalformedInputError("ideal numerators and denominator must be integral")
    return FgIdeal(domain, [domain.element_from_json(g) / den for g in gens])


def ideal_fmt(I: FgIdeal) -> str:
    return repr(I)


__all__ = [
    "FgIdeal", "zero_ideal", "unit_ideal", "principal", "loc_matrix", "drop_superfluous",
    "simplify", "colon_split", "ideal_sum", "ideal_intersect", "ideal_mul", "ideal_prod",
    "ideal_inverse", "ideal_div", "member", "ideal_includes", "ideal_eq", "canonical",
    "canonical_gens", "ideal_to_json", "ideal_from_json", "ideal_fmt", "EmptyIdealError",
]
