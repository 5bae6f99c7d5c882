"""Classical characters as ratios of alternants, and their factorizations.

Families are named ``"gl"`` (Schur polynomial), ``"oo"`` (odd orthogonal),
``"sp"`` (symplectic) and ``"oe"`` (even orthogonal).  The odd orthogonal
alternant uses the integer-exponent form ``x^(b+1) - x^(-b)`` so that all
arithmetic stays in the Laurent ring.

The ``factor_*`` functions return a :class:`Factorization`, a structured
right-hand side that :func:`evaluate_factorization` turns into a number at
any generic :class:`~charfactor.algebra.EvalPoint`.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .algebra import Cyclotomic, EvalPoint, NonGenericPoint, determinant
from .asymmetric import (
    classify_even,
    classify_odd,
    classify_schur,
    classify_symp,
)
from .partitions import (
    beta_set,
    padded,
    partition,
    residue_profile,
    sigma_permutation,
    t_quotient,
)

FAMILIES = ("gl", "oo", "sp", "oe")


@dataclass(frozen=True)
class TwistedPoint:
    """The point ``scale * w**j`` in Q(w); powers are computed in closed form."""

    t: int
    j: int
    scale: Fraction

    def __pow__(self, k):
        return Cyclotomic.omega_power(self.t, self.j * k, self.scale ** k)

    @property
    def value(self) -> Cyclotomic:
        return Cyclotomic.omega_power(self.t, self.j, self.scale)


def _entry_exponents(family, beta):
    """Pairs (positive exponent, negative exponent or None, sign of second term)."""
    if family == "gl":
        return [(b, None, 0) for b in beta]
    if family == "oo":
        return [(b + 1, b, -1) for b in beta]
    if family == "sp":
        return [(b + 1, b + 1, -1) for b in beta]
    if family == "oe":
        return [(b, b, 1) for b in beta]
    raise ValueError(f"unknown family {family!r}")


def _alternant(family, exponents, points):
    """``det(f(x_i, e_j))`` where ``f`` is the family's entry function."""
    shapes = _entry_exponents(family, exponents)
    matrix = []
    for x in points:
        cache = {}

        def power(k, x=x, cache=cache):
            if k not in cache:
                cache[k] = x ** k
            return cache[k]

        row = []
        for pos, neg, sgn in shapes:
            entry = power(pos)
            if neg is not None:
                entry = entry + power(-neg) if sgn > 0 else entry - power(-neg)
            row.append(entry)
        matrix.append(row)
    return determinant(matrix)


_DENOMINATORS = {}


def _weyl_denominator(family, points):
    key = (family, tuple(points))
    value = _DENOMINATORS.get(key)
    if value is None:
        n = len(points)
        exps = [n - 1 - j for j in range(n)]
        value = _alternant("gl" if family == "genschur" else family, exps, points)
        if len(_DENOMINATORS) > 4096:
            _DENOMINATORS.clear()
        _DENOMINATORS[key] = value
    return value


def weyl_character_direct(family: str, lam, points):
    """Evaluate ``family``'s character indexed by ``lam`` at ``points``.

    Points may be ``Fraction``, :class:`Cyclotomic` or :class:`TwistedPoint`
    values.  Returns 0 when there are fewer points than parts.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    lam = partition(lam)
    points = list(points)
    n = len(points)
    if n < len(lam):
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    den = _weyl_denominator(family, points)
    if den == 0:
        raise NonGenericPoint(f"{family} denominator vanishes at {points}")
    num = _alternant(family, beta_set(lam, n), points)
    value = num / den
    if family == "oe":
        last = padded(lam, n)[-1]
        value = value * 2 / (2 if last == 0 else 1)
    return value


def generalized_schur(index, points):
    """Schur bialternant for a weakly decreasing integer vector (entries may be negative)."""
    index = tuple(index)
    points = list(points)
    n = len(points)
    if len(index) != n:
        raise ValueError(f"index {index} needs {len(index)} points, got {n}")
    if any(index[i] < index[i + 1] for i in range(n - 1)):
        raise ValueError(f"index {index} is not weakly decreasing")
    if n == 0:
        return Fraction(1)
    den = _weyl_denominator("genschur", points)
    if den == 0:
        raise NonGenericPoint(f"coincident points {points}")
    exps = [index[j] + n - 1 - j for j in range(n)]
    return _alternant("gl", exps, points) / den


def oe_half_shifted(lam, roots):
    """``oe`` indexed by ``(lam_1 + 1/2, ..., lam_n + 1/2)`` at ``x_i = roots_i ** 2``.

    Every half-integer power of ``x_i`` is an integer power of ``roots_i``,
    so the type-D bialternant stays rational.
    """
    lam = partition(lam)
    roots = list(roots)
    n = len(roots)
    if n < len(lam):
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    exps = [2 * b + 1 for b in beta_set(lam, n)]
    num = determinant([[u ** e + u ** -e for e in exps] for u in roots])
    den = _weyl_denominator("oe", [u * u for u in roots])
    if den == 0:
        raise NonGenericPoint(f"oe denominator vanishes at {roots}")
    # lam_n + 1/2 is never 0, so the (1 + delta) factor is 1
    return 2 * num / den


def _interpolate(nodes, values):
    """Coefficients (low degree first) of the polynomial through ``nodes``, by Newton's scheme."""
    nodes = list(nodes)
    dd = list(values)
    for j in range(1, len(nodes)):
        for i in range(len(nodes) - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j])
    coeffs = [Fraction(0)] * len(nodes)
    for i in range(len(nodes) - 1, -1, -1):
        # coeffs <- coeffs * (z - nodes[i]) + dd[i]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [a - nodes[i] * b for a, b in zip(shifted, coeffs)]
        coeffs[0] += dd[i]
    return coeffs


def genschur_laurent(index, points):
    """``generalized_schur(index, points + [z])`` as a dict exponent -> coefficient in ``z``.

    The exponents of ``z`` lie in ``[index[-1], index[0]]``; the Laurent
    polynomial is recovered by exact interpolation at rational nodes.
    """
    index = tuple(index)
    lo, hi = index[-1], index[0]
    avoid = set(points) | {Fraction(0)}
    nodes, z = [], Fraction(2)
    while len(nodes) < hi - lo + 1:
        if z not in avoid:
            nodes.append(z)
        z += 1
    values = [generalized_schur(index, list(points) + [z]) / z ** lo for z in nodes]
    coeffs = _interpolate(nodes, values)
    return {lo + d: c for d, c in enumerate(coeffs) if c}


def binomial_limit_at_one(index, mu: int, t: int, points):
    """Value at y = 1 of ``(y^(1-mu) S(y^t) - y^mu S(y^-t)) / (y - 1)``.

    ``S(z)`` is the generalized Schur function of ``index`` at ``points + [z]``.
    The numerator is built as an exact Laurent polynomial in ``y`` and divided
    by ``y - 1`` synthetically; a nonzero remainder raises ``ArithmeticError``.
    """
    numer = {}
    for e, c in genschur_laurent(index, points).items():
        for k, v in ((1 - mu + t * e, c), (mu - t * e, -c)):
            numer[k] = numer.get(k, 0) + v
    if not numer:
        return Fraction(0)
    low = min(numer)
    poly = [numer.get(low + d, 0) for d in range(max(numer) - low + 1)]
    # synthetic division by (y - 1), highest degree first
    acc, quotient = Fraction(0), []
    for c in reversed(poly):
        acc = acc + c
        quotient.append(acc)
    if quotient.pop() != 0:
        raise ArithmeticError("numerator does not vanish at y = 1")
    # the y^low shift is 1 at y = 1
    return sum(quotient, Fraction(0))


def twisted_points(pt: EvalPoint, m: Optional[int] = None):
    m = pt.m if m is None else m
    pts = [TwistedPoint(pt.t, j, x) for j in range(pt.t) for x in pt.xs]
    pts += [TwistedPoint(pt.t, j, pt.y) for j in range(m)]
    return pts


def specialize_points(pt: EvalPoint, family: str = "gl"):
    """The tuple ``(w^j x_i)_{j,i}`` followed by ``y, wy, ..., w^(m-1) y``.

    For the orthogonal and symplectic families ``m`` is always 1.
    """
    m = pt.m if family == "gl" else 1
    return [p.value for p in twisted_points(pt, m)]


def specialized_character(family: str, lam, pt: EvalPoint) -> Cyclotomic:
    """Direct value of the character at the twisted point tuple of ``pt``."""
    m = pt.m if family == "gl" else 1
    value = weyl_character_direct(family, lam, twisted_points(pt, m))
    if isinstance(value, Fraction):
        value = Cyclotomic.from_rational(pt.t, value)
    return value


# ---------------------------------------------------------------------------
# factorizations

RECIPES = (
    "X^t",
    "X^t,y^t",
    "X^t,Xbar^t",
    "X^t,Xbar^t,y^t",
    "X^t,Xbar^t,ybar^t",
    "-X^t",
    "-X^t,-y^t",
    "y",
)


def recipe_points(recipe: str, pt: EvalPoint):
    t = pt.t
    xt = [x ** t for x in pt.xs]
    yt = pt.y ** t
    table = {
        "X^t": xt,
        "X^t,y^t": xt + [yt],
        "X^t,Xbar^t": xt + [1 / v for v in xt],
        "X^t,Xbar^t,y^t": xt + [1 / v for v in xt] + [yt],
        "X^t,Xbar^t,ybar^t": xt + [1 / v for v in xt] + [1 / yt],
        "-X^t": [-v for v in xt],
        "-X^t,-y^t": [-v for v in xt] + [-yt],
        "y": [pt.y],
    }
    if recipe not in table:
        raise ValueError(f"unknown argument recipe {recipe!r}")
    return table[recipe]


@dataclass(frozen=True)
class Factor:
    """One character factor: ``kind`` is a family name or ``"genschur"``."""

    kind: str
    index: tuple
    recipe: str

    def evaluate(self, pt: EvalPoint):
        points = recipe_points(self.recipe, pt)
        if self.kind == "genschur":
            return generalized_schur(self.index, points)
        return weyl_character_direct(self.kind, self.index, points)

    def to_json(self) -> dict:
        return {"kind": self.kind, "index": list(self.index), "args": self.recipe}


@dataclass(frozen=True)
class YPrefactor:
    """A factor that involves ``y`` beyond a plain character evaluation.

    ``kind`` is one of

    * ``"binomial_y_minus_1"``: (y^(1-mu) S(y^t) - y^mu S(ybar^t)) / (y - 1)
    * ``"binomial_y_minus_ybar"``: (y^(-mu) S(y^t) - y^mu S(ybar^t)) / (y - ybar)
    * ``"symmetric_sum"``: y^(-mu) S(y^t) + y^mu S(ybar^t)
    * ``"small_character"``: the one-row character ``family_(c)(y)``
    * ``"y_power"``: the monomial y^mu

    where ``S(z)`` is the generalized Schur function of ``index`` at
    ``(X^t, Xbar^t, z)``.
    """

    kind: str
    mu: int = 0
    index: tuple = ()
    family: str = ""

    def evaluate(self, pt: EvalPoint):
        y = pt.y
        if self.kind == "small_character":
            return weyl_character_direct(self.family, self.index, [y])
        if self.kind == "y_power":
            return y ** self.mu
        upper = Factor("genschur", self.index, "X^t,Xbar^t,y^t").evaluate(pt)
        lower = Factor("genschur", self.index, "X^t,Xbar^t,ybar^t").evaluate(pt)
        mu = self.mu
        if self.kind == "binomial_y_minus_1":
            return (y ** (1 - mu) * upper - y ** mu * lower) / (y - 1)
        if self.kind == "binomial_y_minus_ybar":
            return (y ** (-mu) * upper - y ** mu * lower) / (y - 1 / y)
        if self.kind == "symmetric_sum":
            return y ** (-mu) * upper + y ** mu * lower
        raise ValueError(f"unknown prefactor {self.kind!r}")

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "small_character":
            out.update(family=self.family, index=list(self.index))
        elif self.kind == "y_power":
            out.update(mu=self.mu)
        else:
            out.update(mu=self.mu, index=list(self.index))
        return out


@dataclass(frozen=True)
class Factorization:
    """Right-hand side of a factorization theorem, or the zero value."""

    family: str
    zero: bool = False
    sign: int = 1
    scalar: Optional[Cyclotomic] = None
    prefactor: Optional[YPrefactor] = None
    factors: tuple = field(default_factory=tuple)
    i0: Optional[int] = None
    case: Optional[int] = None

    def to_json(self) -> dict:
        if self.zero:
            return {"family": self.family, "zero": True}
        out = {
            "family": self.family,
            "zero": False,
            "sign": self.sign,
            "factors": [f.to_json() for f in self.factors],
        }
        if self.scalar is not None:
            out["scalar"] = self.scalar.to_json()
        if self.prefactor is not None:
            out["prefactor"] = self.prefactor.to_json()
        if self.case is not None:
            out.update(i0=self.i0, case=self.case)
        return out


def evaluate_factorization(f: Factorization, pt: EvalPoint) -> Cyclotomic:
    if f.zero:
        return Cyclotomic.from_rational(pt.t, 0)
    value = Fraction(f.sign)
    if f.prefactor is not None:
        value *= f.prefactor.evaluate(pt)
    for factor in f.factors:
        value *= factor.evaluate(pt)
    if f.scalar is not None:
        return f.scalar * value
    return Cyclotomic.from_rational(pt.t, value)


class _Quotient:
    """Quotient data of ``lam`` at a fixed padding, with padded components."""

    def __init__(self, lam, t, ell):
        self.t = t
        self.counts = residue_profile(lam, ell, t)
        self.components = t_quotient(lam, t, ell)

    def comp(self, i):
        return padded(self.components[i], self.counts[i])

    def first(self, i):
        c = self.components[i]
        return c[0] if c else 0

    def pi(self, i, j):
        """``lam^(j)_1 + (lam^(i), 0, ..., 0, -rev(lam^(j)))``."""
        top = self.first(j)
        head = [top + a for a in self.comp(i)]
        tail = [top - b for b in reversed(self.comp(j))]
        return tuple(head + tail)


def _check_bound(lam, bound):
    from .asymmetric import LengthBoundError

    if len(lam) > bound:
        raise LengthBoundError(f"{lam} has more than {bound} parts")


def factor_schur(lam, t: int, n: int, m: int) -> Factorization:
    """Twisted GL factorization at ``X, ..., w^(t-1)X, y, ..., w^(m-1)y``."""
    lam = partition(lam)
    ell = t * n + m
    _check_bound(lam, ell)
    nu = classify_schur(lam, t, n, m)
    if nu is None:
        return Factorization("gl", zero=True)
    first = beta_set(nu, m)
    # the reference sign is taken at the core itself; the empty partition
    # agrees with it only when n is even
    sign = sigma_permutation(lam, ell, t, first).sign * sigma_permutation(nu, ell, t, first).sign
    roots = [Cyclotomic.omega_power(t, j) for j in range(m)]
    scalar = weyl_character_direct("gl", nu, roots)
    if isinstance(scalar, Fraction):
        scalar = Cyclotomic.from_rational(t, scalar)
    quo = t_quotient(lam, t, ell)
    factors = [Factor("gl", quo[e], "X^t,y^t") for e in first]
    factors += [Factor("gl", quo[j], "X^t") for j in range(t) if j not in first]
    # s_nu(y, wy, ...) = y^|nu| s_nu(1, w, ...): the scalar alone is not homogeneous
    pre = YPrefactor("y_power", mu=sum(nu)) if nu else None
    return Factorization("gl", sign=sign, scalar=scalar, prefactor=pre, factors=tuple(factors))


def _parity(value):
    return -1 if value % 2 else 1


def factor_oo(lam, t: int, n: int) -> Factorization:
    """Odd orthogonal factorization at ``X, wX, ..., w^(t-1)X, y``."""
    lam = partition(lam)
    ell = t * n + 1
    _check_bound(lam, ell)
    cls = classify_odd(lam, t, n)
    if cls.vanishes:
        return Factorization("oo", zero=True)
    i0 = cls.i0
    q = _Quotient(lam, t, ell)
    c = q.counts
    eps = sum(c[i] for i in range(t - i0, t)) + sum(
        comb(c[i] + 1, 2) + t * n * (c[i] - n) for i in range((t + 1) // 2, t)
    )
    sigma = sigma_permutation(lam, ell, t).sign
    mid = (t - 1) // 2
    factors = []
    if cls.case == 1:
        # no extra (-1)^n in this case
        sign = _parity(eps) * sigma
        pre = YPrefactor("small_character", index=(mid,), family="oo")
        factors.append(Factor("oo", q.components[mid], "X^t,y^t"))
        factors += [Factor("genschur", q.pi(i, t - 1 - i), "X^t,Xbar^t") for i in range(mid)]
    else:
        sign = _parity(eps) * sigma
        mu = t * (q.first(t - 1 - i0) + c[t - 1 - i0] - n) - i0
        pre = YPrefactor("binomial_y_minus_1", mu=mu, index=q.pi(i0, t - 1 - i0))
        factors += [
            Factor("genschur", q.pi(i, t - 1 - i), "X^t,Xbar^t")
            for i in range((t - 2) // 2 + 1)
            if i != i0
        ]
        if t % 2:
            factors.append(Factor("oo", q.components[mid], "X^t"))
    return Factorization("oo", sign=sign, prefactor=pre, factors=tuple(factors), i0=i0, case=cls.case)


def factor_sp(lam, t: int, n: int) -> Factorization:
    """Symplectic factorization at ``X, wX, ..., w^(t-1)X, y``."""
    lam = partition(lam)
    ell = t * n + 1
    _check_bound(lam, ell)
    cls = classify_symp(lam, t, n)
    if cls.vanishes:
        return Factorization("sp", zero=True)
    i0 = cls.i0
    q = _Quotient(lam, t, ell)
    c = q.counts
    eps = sum(c[i - 1] for i in range(t - i0, t)) + sum(
        comb(c[i - 1] + 1, 2) + (t - 1) * n * (c[i - 1] - n) for i in range((t + 2) // 2, t)
    )
    if t % 2 == 0:
        eps += comb(n + 1, 2)
    sigma = sigma_permutation(lam, ell, t).sign
    pis = [Factor("genschur", q.pi(i, t - 2 - i), "X^t,Xbar^t") for i in range((t - 3) // 2 + 1)]
    half = (t - 2) // 2
    factors = []
    if cls.case == 1:
        sign = _parity(eps) * sigma
        pre = YPrefactor("small_character", index=(t - 1,), family="sp")
        factors.append(Factor("sp", q.components[t - 1], "X^t,y^t"))
        factors += pis
        if t % 2 == 0:
            factors.append(Factor("oo", q.components[half], "X^t"))
    elif cls.case == 2:
        sign = _parity(eps) * sigma
        pre = YPrefactor("small_character", index=(half,), family="sp")
        factors.append(Factor("sp", q.components[t - 1], "X^t"))
        factors += pis
        factors.append(Factor("oo", q.components[half], "X^t,y^t"))
    else:
        sign = _parity(eps) * sigma
        # the trailing -1 keeps sp_() equal to 1
        mu = t * (q.first(t - 2 - i0) + c[t - 2 - i0] - n) - i0 - 1
        pre = YPrefactor("binomial_y_minus_ybar", mu=mu, index=q.pi(i0, t - 2 - i0))
        factors += [f for i, f in enumerate(pis) if i != i0]
        factors.append(Factor("sp", q.components[t - 1], "X^t"))
        if t % 2 == 0:
            factors.append(Factor("oo", q.components[half], "X^t"))
    return Factorization("sp", sign=sign, prefactor=pre, factors=tuple(factors), i0=i0, case=cls.case)


def factor_oe(lam, t: int, n: int) -> Factorization:
    """Even orthogonal factorization at ``X, wX, ..., w^(t-1)X, y``."""
    lam = partition(lam)
    ell = t * n + 1
    _check_bound(lam, ell)
    cls = classify_even(lam, t, n)
    if cls.vanishes:
        return Factorization("oe", zero=True)
    i0 = cls.i0
    q = _Quotient(lam, t, ell)
    c = q.counts
    eps = sum(c[i] for i in range(t + 1 - i0, t)) + sum(
        comb(c[i], 2) + (t - 1) * n * (c[i] - n) for i in range((t + 2) // 2, t)
    )
    eps += n * comb(t, 2) + (comb(n + 1, 2) + n if t % 2 == 0 else 0)
    sigma = sigma_permutation(lam, ell, t).sign
    pis = {i: Factor("genschur", q.pi(i, t - i), "X^t,Xbar^t") for i in range(1, (t - 1) // 2 + 1)}
    half = t // 2
    factors = []
    if cls.case == 1:
        sign = _parity(eps) * sigma
        pre = None
        factors.append(Factor("oe", q.components[0], "X^t,y^t"))
        factors += pis.values()
        if t % 2 == 0:
            sign *= _parity(sum(q.components[half]))
            factors.append(Factor("oo", q.components[half], "-X^t"))
    elif cls.case == 2:
        sign = _parity(eps + n + sum(q.components[half])) * sigma
        pre = YPrefactor("small_character", index=(half,), family="oe")
        factors.append(Factor("oe", q.components[0], "X^t"))
        factors += pis.values()
        factors.append(Factor("oo", q.components[half], "-X^t,-y^t"))
    else:
        sign = _parity(eps + n) * sigma
        mu = t * (q.first(t - i0) + c[t - i0] - n) - i0
        pre = YPrefactor("symmetric_sum", mu=mu, index=q.pi(i0, t - i0))
        factors.append(Factor("oe", q.components[0], "X^t"))
        factors += [f for i, f in pis.items() if i != i0]
        if t % 2 == 0:
            sign *= _parity(sum(q.components[half]))
            factors.append(Factor("oo", q.components[half], "-X^t"))
    return Factorization("oe", sign=sign, prefactor=pre, factors=tuple(factors), i0=i0, case=cls.case)


def factorize(family: str, lam, t: int, n: int, m: int = 1) -> Factorization:
    if family == "gl":
        return factor_schur(lam, t, n, m)
    return {"oo": factor_oo, "sp": factor_sp, "oe": factor_oe}[family](lam, t, n)
