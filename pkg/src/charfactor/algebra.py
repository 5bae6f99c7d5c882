"""Exact arithmetic over Q and the cyclotomic fields Q(w) = Q[x]/(Phi_t).

``w`` is a symbolic primitive t-th root of unity: elements are coefficient
vectors of length ``phi(t)`` reduced modulo the cyclotomic polynomial, so
every identity is checked with zero tolerance.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence


class NonGenericPoint(ZeroDivisionError):
    """Raised when an evaluation point makes a Weyl denominator vanish."""


def _poly_divmod(num, den):
    """Quotient and remainder of rational polynomials (lowest degree first)."""
    num = [Fraction(c) for c in num]
    lead = Fraction(den[-1])
    if len(num) < len(den):
        return [Fraction(0)], num
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    for shift in range(len(q) - 1, -1, -1):
        c = num[shift + len(den) - 1] / lead
        if c:
            q[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(t: int) -> tuple:
    """Integer coefficients of Phi_t, lowest degree first."""
    if t < 1:
        raise ValueError("t must be positive")
    poly = [-1] + [0] * (t - 1) + [1]
    for d in range(1, t):
        if t % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    return tuple(int(c) for c in poly)


@lru_cache(maxsize=None)
def _reduction_table(t):
    """Rows ``x^e mod Phi_t`` for e in [0, 2*deg - 2] and the powers of w."""
    phi = cyclotomic_polynomial(t)
    deg = len(phi) - 1
    table = []
    for e in range(max(2 * deg - 1, t)):
        row = [0] * deg
        if e < deg:
            row[e] = 1
        else:
            prev = table[e - 1]
            # x * (prev) with x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1})
            row = [0] + prev[:-1]
            top = prev[-1]
            for i in range(deg):
                row[i] -= top * phi[i]
        table.append(row)
    return tuple(tuple(r) for r in table)


class Cyclotomic:
    """An element of Q(w) for a fixed conductor ``t``.

    >>> w = Cyclotomic.omega(3)
    >>> 1 + w + w * w == 0
    True
    """

    __slots__ = ("t", "coeffs", "_hash")

    def __init__(self, t: int, coeffs: Sequence):
        deg = len(cyclotomic_polynomial(t)) - 1
        coeffs = tuple(coeffs)
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for t={t}")
        self.t = t
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def _raw(cls, t, coeffs):
        obj = object.__new__(cls)
        obj.t = t
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, t, value):
        deg = len(cyclotomic_polynomial(t)) - 1
        return cls._raw(t, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def omega_power(cls, t, j, scale=1):
        """``scale * w**j`` reduced mod Phi_t."""
        row = _reduction_table(t)[j % t]
        scale = Fraction(scale)
        return cls._raw(t, tuple(scale * c for c in row))

    @classmethod
    def omega(cls, t):
        return cls.omega_power(t, 1)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.t != self.t:
                raise ValueError("cannot mix different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.t, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic._raw(self.t, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.t, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic._raw(self.t, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.t, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        deg = len(a)
        if deg == 1:
            return Cyclotomic._raw(self.t, (a[0] * b[0],))
        prod = [0] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        table = _reduction_table(self.t)
        out = prod[:deg]
        for e in range(deg, 2 * deg - 1):
            c = prod[e]
            if c:
                row = table[e]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return Cyclotomic._raw(self.t, tuple(Fraction(c) for c in out))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(w)")
        if len(self.coeffs) == 1:
            return Cyclotomic._raw(self.t, (1 / self.coeffs[0],))
        # extended Euclid: find u with u * self = 1 mod Phi_t
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.t)]
        r0, r1 = phi, _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            q, r = _poly_divmod(r0, r1)
            r = _trim(r or [Fraction(0)])
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
        unit = r1[0]
        u = [c / unit for c in s1]
        deg = len(self.coeffs)
        if len(u) > deg:
            _, u = _poly_divmod(u, phi)
        u = list(u) + [Fraction(0)] * (deg - len(u))
        return Cyclotomic._raw(self.t, tuple(Fraction(c) for c in u))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.from_rational(self.t, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, Cyclotomic):
            return self.t == other.t and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.t, self.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self.t}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if j == 0 else f"({c})*w^{j}")
        return " + ".join(terms) or "0"

    def to_json(self) -> dict:
        return {"t": self.t, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["t"]), [parse_rational(c) for c in data["coeffs"]])


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def parse_rational(text) -> Fraction:
    """Parse the ``"p/q"`` text form (integers are accepted as well)."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str) or "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text.strip())


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def laurent_eval(base, exponent: int):
    """``base ** exponent`` for a nonzero base and any integer exponent."""
    if base == 0:
        raise ZeroDivisionError("zero base in Laurent monomial")
    if isinstance(base, int):
        base = Fraction(base)
    return base ** exponent


def determinant(matrix):
    """Exact determinant by Gaussian elimination with first-nonzero pivoting.

    Entries may be ``Fraction`` or :class:`Cyclotomic`; a singular matrix
    gives 0.  The empty matrix has determinant 1.
    """
    rows = [list(r) for r in matrix]
    d = len(rows)
    if any(len(r) != d for r in rows):
        raise ValueError("matrix is not square")
    det = Fraction(1)
    for col in range(d):
        pivot = next((r for r in range(col, d) if rows[r][col] != 0), None)
        if pivot is None:
            return _zero_like(rows[0][0])
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det = p * det
        inv = 1 / p
        for r in range(col + 1, d):
            factor = rows[r][col]
            if factor != 0:
                factor = factor * inv
                row, prow = rows[r], rows[col]
                for c in range(col + 1, d):
                    row[c] = row[c] - factor * prow[c]
    return det


def _zero_like(x):
    if isinstance(x, Cyclotomic):
        return Cyclotomic.from_rational(x.t, 0)
    return Fraction(0)


@dataclass(frozen=True)
class EvalPoint:
    """Sample data for the specialization ``X, wX, ..., w^(t-1)X, y, ..., w^(m-1)y``."""

    t: int
    n: int
    m: int
    xs: tuple
    y: Fraction

    def is_generic(self) -> bool:
        t = self.t
        if any(x == 0 for x in self.xs) or self.y in (0, 1, -1):
            return False
        powers = [x ** t for x in self.xs]
        if len(set(powers)) != len(powers):
            return False
        inverses = {1 / p for p in powers}
        if inverses & set(powers):
            return False
        yt = self.y ** t
        return yt not in set(powers) | inverses

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "n": self.n,
            "m": self.m,
            "x": [format_rational(x) for x in self.xs],
            "y": format_rational(self.y),
        }


def random_eval_point(t: int, n: int, m: int = 1, rng=None, bound: int = 50) -> EvalPoint:
    """Draw a generic point with numerators and denominators at most ``bound``."""
    rng = rng if rng is not None else random.Random(0)

    def draw():
        num = rng.randint(1, bound) * rng.choice((1, -1))
        return Fraction(num, rng.randint(1, bound))

    while True:
        pt = EvalPoint(t, n, m, tuple(draw() for _ in range(n)), draw())
        if pt.is_generic():
            return pt
