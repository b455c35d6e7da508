"""Concrete explicit Prüfer domains: Z and maximal orders of quadratic fields.

Elements of Z and Q are :class:`fractions.Fraction`.  Elements of a
quadratic field ``Q(sqrt d)`` are :class:`QuadraticNumber` values
``(x + y*w) / den`` on the basis ``{1, w}`` of the maximal order, with
``w = sqrt d`` when ``d != 1 (mod 4)`` and ``w = (1 + sqrt d) / 2`` otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Sequence

from .arith import PruferDomain
from .errors import DomainError, EmptyIdealError, InvariantViolation, MalformedInputError
from .intlinalg import solve_int_linear, xgcd

#: Desk-scale guards, overridable by callers (the CLI exposes ``--max-dim``).
LIMITS = {"max_abs_d": 10**6, "max_dim": 64}


def _lattice_add(state, x: int, y: int):
    """Add ``(x, y)`` to a Z-lattice of rank <= 2 kept in Hermite shape.

    ``state = (a, b, c)`` stands for the span of ``(a, 0)`` and ``(b, c)``,
    with ``a >= 0``, ``c >= 0`` and ``b = 0`` whenever ``c == 0``.
    """
    a, b, c = state
    if y == 0:
        a = gcd(a, x)
    elif c == 0:
        b, c = (x, y) if y > 0 else (-x, -y)
    else:
        g, u, v = xgcd(c, y)
        e = (c // g) * x - (y // g) * b
        b, c = u * b + v * x, g
        a = gcd(a, e)
    if a:
        b %= a
    return a, b, c


def lattice_hnf(vectors) -> tuple[int, int, int]:
    state = (0, 0, 0)
    for x, y in vectors:
        state = _lattice_add(state, x, y)
    return state


def _canonical_fraction_gcd(values) -> Fraction:
    D = 1
    for v in values:
        D = lcm(D, v.denominator)
    g = 0
    for v in values:
        g = gcd(g, int(v * D))
    return Fraction(g, D)


class IntegerRing(PruferDomain):
    """The ring Z with fraction field Q (a Bezout domain)."""

    rank = 1
    name = "Z"

    def __repr__(self):
        return "IntegerRing()"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def K(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool):
            raise MalformedInputError("booleans are not ring elements")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(int(value))
            except ValueError as exc:
                raise MalformedInputError(f"not an integer: {value!r}") from exc
        raise MalformedInputError(f"cannot read {value!r} as an element of Q")

    def fraction(self, num, den):
        den = self.K(den)
        if den == 0:
            raise MalformedInputError("zero denominator")
        return self.K(num) / den

    def is_integral(self, x):
        return x.denominator == 1

    def denominator(self, x):
        return x.denominator

    def coords(self, x):
        if x.denominator != 1:
            raise DomainError(f"{x} is not integral")
        return (x.numerator,)

    def from_coords(self, c):
        return Fraction(c[0])

    def mul_matrix(self, a):
        return [[self.coords(a)[0]]]

    def certificate(self, gens):
        ints, _ = self.clear_denominators(gens)
        ints = [int(v) for v in ints]
        coeffs: dict[int, int] = {}
        g = 0
        for i, a in enumerate(ints):
            if a == 0:
                continue
            if not coeffs:
                coeffs[i], g = 1, a
                continue
            if a % g == 0:
                continue
            g, x, y = xgcd(g, a)
            for k in coeffs:
                coeffs[k] *= x
            coeffs[i] = y
        if not coeffs:
            raise EmptyIdealError("certificate requested for the zero ideal")
        cert = [Fraction(0)] * len(ints)
        for i, x in coeffs.items():
            cert[i] = Fraction(x * ints[i], g)
        return cert

    def lattice(self, gens):
        gens = [self.K(g) for g in gens]
        return (_canonical_fraction_gcd(gens),)

    def principal_generator(self, gens):
        return _canonical_fraction_gcd([self.K(g) for g in gens])

    def random_element(self, rng, bound=5):
        return Fraction(rng.randint(-bound, bound))

    def to_json(self, x):
        x = self.K(x)
        if x.denominator == 1:
            return str(x.numerator)
        return {"num": str(x.numerator), "den": str(x.denominator)}

    def element_from_json(self, data):
        if isinstance(data, dict):
            try:
                return self.fraction(self.element_from_json(data["num"]),
                                     self.element_from_json(data.get("den", 1)))
            except KeyError as exc:
                raise MalformedInputError("field element needs a 'num' entry") from exc
        if isinstance(data, list):
            raise MalformedInputError("coordinate pairs are not elements of Z")
        return self.K(data)

    def descriptor(self):
        return {"type": "int"}


def is_squarefree(d: int) -> bool:
    n = abs(d)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1 if p == 2 else 2
    return True


class QuadraticNumber:
    """Element ``(x + y*w) / den`` of a quadratic field, in canonical form.

    ``den > 0`` and ``gcd(x, y, den) == 1``; equality is tuple equality.
    """

    __slots__ = ("x", "y", "den", "ring")

    def __init__(self, ring: "QuadraticOrder", x: int, y: int, den: int = 1):
        if den == 0:
            raise MalformedInputError("zero denominator")
        if den < 0:
            x, y, den = -x, -y, -den
        g = gcd(gcd(x, y), den)
        if g > 1:
            x, y, den = x // g, y // g, den // g
        self.x, self.y, self.den, self.ring = x, y, den, ring

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.ring is not self.ring and other.ring != self.ring:
                raise DomainError("elements of different quadratic fields")
            return other
        if isinstance(other, int):
            return QuadraticNumber(self.ring, other, 0, 1)
        if isinstance(other, Fraction):
            return QuadraticNumber(self.ring, other.numerator, 0, other.denominator)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return QuadraticNumber(self.ring, self.x + o.x, self.y + o.y, self.den)
        return QuadraticNumber(self.ring, self.x * o.den + o.x * self.den,
                               self.y * o.den + o.y * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(self.ring, -self.x, -self.y, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        A, B = self.ring.w_square
        yy = self.y * o.y
        return QuadraticNumber(self.ring, self.x * o.x + A * yy,
                               self.x * o.y + self.y * o.x + B * yy, self.den * o.den)

    __rmul__ = __mul__

    def conjugate(self):
        B = self.ring.w_square[1]
        return QuadraticNumber(self.ring, self.x + B * self.y, -self.y, self.den)

    def norm(self) -> Fraction:
        A, B = self.ring.w_square
        n = self.x * self.x + B * self.x * self.y - A * self.y * self.y
        return Fraction(n, self.den * self.den)

    def inverse(self):
        if not self:
            raise DomainError("division by zero")
        A, B = self.ring.w_square
        n = self.x * self.x + B * self.x * self.y - A * self.y * self.y
        cx, cy = self.x + B * self.y, -self.y
        return QuadraticNumber(self.ring, cx * self.den, cy * self.den, n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadraticNumber(self.ring, 1, 0, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.x or self.y)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.x, self.y, self.den) == (o.x, o.y, o.den)

    def __hash__(self):
        if self.y == 0:
            return hash(Fraction(self.x, self.den))
        return hash((self.x, self.y, self.den))

    def __repr__(self):
        return self.ring.fmt(self)


class QuadraticOrder(PruferDomain):
    """Maximal order of ``Q(sqrt d)`` for squarefree ``d != 0, 1``."""

    rank = 2

    def __init__(self, d: int, order: str = "maximal", max_abs_d: int | None = None):
        if isinstance(d, bool) or not isinstance(d, int):
            raise MalformedInputError(f"d must be an integer, got {d!r}")
        bound = LIMITS["max_abs_d"] if max_abs_d is None else max_abs_d
        if abs(d) > bound:
            raise MalformedInputError(f"|d| = {abs(d)} exceeds the desk-scale bound {bound}")
        if d in (0, 1) or not is_squarefree(d):
            raise MalformedInputError(f"d = {d} is not a squarefree integer different from 0, 1")
        if order not in ("maximal", "sqrt"):
            raise MalformedInputError(f"unknown order {order!r}")
        if order == "sqrt" and d % 4 == 1:
            raise MalformedInputError(
                f"Z[sqrt({d})] is not the maximal order (d = 1 mod 4); it is not a Prüfer domain")
        self.d = d
        if d % 4 == 1:
            self.w_square = ((d - 1) // 4, 1)
        else:
            self.w_square = (d, 0)
        self.name = f"O(sqrt {d})"

    def __repr__(self):
        return f"QuadraticOrder({self.d})"

    def __eq__(self, other):
        return isinstance(other, QuadraticOrder) and other.d == self.d

    def __hash__(self):
        return hash(("quadratic", self.d))

    @property
    def zero(self):
        return QuadraticNumber(self, 0, 0)

    @property
    def one(self):
        return QuadraticNumber(self, 1, 0)

    @property
    def w(self):
        return QuadraticNumber(self, 0, 1)

    def __call__(self, x: int = 0, y: int = 0, den: int = 1):
        return QuadraticNumber(self, x, y, den)

    def K(self, value):
        if isinstance(value, QuadraticNumber):
            if value.ring != self:
                raise DomainError("element of another quadratic field")
            return value
        if isinstance(value, bool):
            raise MalformedInputError("booleans are not ring elements")
        if isinstance(value, int):
            return QuadraticNumber(self, value, 0)
        if isinstance(value, Fraction):
            return QuadraticNumber(self, value.numerator, 0, value.denominator)
        if isinstance(value, str):
            try:
                return QuadraticNumber(self, int(value), 0)
            except ValueError as exc:
                raise MalformedInputError(f"not an integer: {value!r}") from exc
        if isinstance(value, (tuple, list)) and len(value) == 2:
            try:
                return QuadraticNumber(self, int(value[0]), int(value[1]))
            except (TypeError, ValueError) as exc:
                raise MalformedInputError(f"bad coordinates {value!r}") from exc
        raise MalformedInputError(f"cannot read {value!r} as an element of {self.name}")

    def fraction(self, num, den):
        den = self.K(den)
        if not den:
            raise MalformedInputError("zero denominator")
        return self.K(num) / den

    def is_integral(self, x):
        return x.den == 1

    def denominator(self, x):
        return x.den

    def coords(self, x):
        if x.den != 1:
            raise DomainError(f"{x} is not integral")
        return (x.x, x.y)

    def from_coords(self, c):
        return QuadraticNumber(self, int(c[0]), int(c[1]))

    def mul_matrix(self, a):
        A, B = self.w_square
        x, y = self.coords(a)
        # a*1 = (x, y); a*w = (A y, x + B y)
        return [[x, A * y], [y, x + B * y]]

    def norm(self, x) -> Fraction:
        return self.K(x).norm()

    # --- ideals as Z-lattices -------------------------------------------------

    def _int_lattice(self, ints) -> tuple[int, int, int]:
        vecs = []
        for g in ints:
            vecs.append((g.x, g.y))
            gw = g * self.w
            vecs.append((gw.x, gw.y))
        return lattice_hnf(vecs)

    def ideal_zbasis(self, gens) -> tuple:
        """Hermite Z-basis ``(a, b + c*w)`` of the integral ideal spanned by ``gens``."""
        ints = [self.K(g) for g in gens]
        if not ints or all(not g for g in ints):
            raise EmptyIdealError("Z-basis of the zero ideal requested")
        if any(g.den != 1 for g in ints):
            raise DomainError("ideal_zbasis expects integral generators")
        a, b, c = self._int_lattice(ints)
        return (self(a), self(b, c))

    def lattice(self, gens):
        gens = [self.K(g) for g in gens]
        if all(not g for g in gens):
            return ()
        ints, D = self.clear_denominators(gens)
        a, b, c = self._int_lattice(ints)
        return (Fraction(a, D), Fraction(b, D), Fraction(c, D))

    def lattice_contains(self, gens, x) -> bool:
        """Brute-force membership through the Hermite Z-basis (independent oracle)."""
        x = self.K(x)
        if not x:
            return True
        lat = self.lattice(gens)
        if not lat:
            return False
        a, b, c = lat
        # x = (X + Y w) / den; need Y/den = q c and X/den - q b in a Z
        X, Y = Fraction(x.x, x.den), Fraction(x.y, x.den)
        q = Y / c
        if q.denominator != 1:
            return False
        r = (X - q * b) / a
        return r.denominator == 1

    def ideal_norm(self, ints) -> int:
        a, _, c = self._int_lattice(ints)
        return a * c

    def certificate(self, gens):
        ints, _ = self.clear_denominators(gens)
        selected: list[int] = []
        state = (0, 0, 0)
        for i, g in enumerate(ints):
            if not g:
                continue
            new = state
            for v in (g, g * self.w):
                new = _lattice_add(new, v.x, v.y)
            if new != state:
                selected.append(i)
                state = new
        if not selected:
            raise EmptyIdealError("certificate requested for the zero ideal")
        a_, _, c_ = state
        N = a_ * c_
        sel = [ints[i] for i in selected]
        r = len(sel)
        # Lambda = {w in O : w a_j in N O for all j}; unknowns (u, v, k_j1, k_j2)
        rows = []
        for j, aj in enumerate(sel):
            M = self.mul_matrix(aj)
            for t in range(2):
                row = [M[t][0], M[t][1]] + [0] * (2 * r)
                row[2 + 2 * j + t] = -N
                rows.append(row)
        sol = solve_int_linear(rows, [0] * len(rows))
        if sol is None:
            raise InvariantViolation("homogeneous system has no solution")
        lam = lattice_hnf((vec[0], vec[1]) for vec in sol[1])
        if lam[0] == 0 or lam[2] == 0:
            raise InvariantViolation("denominator lattice is degenerate")
        w1 = self(lam[0], 0)
        w2 = self(lam[1], lam[2])
        # sum_i (p_i w1 + q_i w2) a_i = N
        cols = []
        for ai in sel:
            cols.append(self.coords(w1 * ai))
            cols.append(self.coords(w2 * ai))
        A = [[col[t] for col in cols] for t in range(2)]
        sol = solve_int_linear(A, [N, 0])
        if sol is None:
            raise InvariantViolation(
                f"no certificate for {sel}: ideal not invertible, which is impossible "
                "in a maximal order")
        pq = sol[0]
        cert = [self.zero] * len(ints)
        for k, i in enumerate(selected):
            gamma_num = w1 * pq[2 * k] + w2 * pq[2 * k + 1]
            cert[i] = gamma_num * ints[i] / N
        return cert

    def random_element(self, rng, bound=5):
        return self(rng.randint(-bound, bound), rng.randint(-bound, bound))

    def to_json(self, x):
        x = self.K(x)
        pair = [str(x.x), str(x.y)]
        if x.den == 1:
            return pair
        return {"num": pair, "den": str(x.den)}

    def element_from_json(self, data):
        if isinstance(data, dict):
            try:
                return self.fraction(self.element_from_json(data["num"]),
                                     self.element_from_json(data.get("den", 1)))
            except KeyError as exc:
                raise MalformedInputError("field element needs a 'num' entry") from exc
        return self.K(data)

    def descriptor(self):
        return {"type": "quadratic", "d": self.d}

    def fmt(self, x) -> str:
        """Human rendering with sqrt notation, e.g. ``(1 + sqrt(-5))/2``."""
        x = self.K(x)
        if self.w_square[1] == 0:
            r, s = Fraction(x.x, x.den), Fraction(x.y, x.den)
        else:
            r, s = Fraction(2 * x.x + x.y, 2 * x.den), Fraction(x.y, 2 * x.den)
        if s == 0:
            return str(r)
        root = f"√{self.d}" if self.d > 0 else f"√({self.d})"
        D = lcm(r.denominator, s.denominator)
        p, q = int(r * D), int(s * D)
        coeff = "" if abs(q) == 1 else str(abs(q))
        if p == 0:
            body = ("-" if q < 0 else "") + coeff + root
        else:
            body = f"{p} {'-' if q < 0 else '+'} {coeff}{root}"
        if D == 1:
            return body
        return f"({body})/{D}"


def make_domain(desc: dict) -> PruferDomain:
    """Build a domain from a descriptor such as ``{"type": "quadratic", "d": -5}``."""
    if not isinstance(desc, dict) or "type" not in desc:
        raise MalformedInputError("domain descriptor must be an object with a 'type'")
    kind = desc["type"]
    if kind == "int":
        return ZZ
    if kind == "quadratic":
        if "d" not in desc:
            raise MalformedInputError("quadratic domain needs 'd'")
        d = desc["d"]
        if isinstance(d, str):
            try:
                d = int(d)
            except ValueError as exc:
                raise MalformedInputError(f"bad d {d!r}") from exc
        return QuadraticOrder(d, desc.get("order", "maximal"))
    raise MalformedInputError(f"unknown domain type {kind!r}")


ZZ = IntegerRing()
