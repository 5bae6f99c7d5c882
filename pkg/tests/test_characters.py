import random
from fractions import Fraction
from itertools import product

import pytest

from charfactor.algebra import Cyclotomic, EvalPoint, NonGenericPoint, determinant, random_eval_point
from charfactor.characters import (
    binomial_limit_at_one,
    evaluate_factorization,
    factorize,
    generalized_schur,
    genschur_laurent,
    oe_half_shifted,
    specialize_points,
    specialized_character,
    weyl_character_direct,
)
from charfactor.partitions import beta_set, partitions_up_to, residue_profile, t_quotient

F = Fraction


def ssyt_schur(lam, xs):
    """Sum over semistandard tableaux, filled row by row."""
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    n = len(xs)
    total = F(0)
    for filling in product(range(n), repeat=len(cells)):
        tab = dict(zip(cells, filling))
        if all(
            (j == 0 or tab[i, j - 1] <= tab[i, j]) and (i == 0 or tab[i - 1, j] < tab[i, j])
            for i, j in cells
        ):
            term = F(1)
            for v in filling:
                term *= xs[v]
            total += term
    return total


def test_direct_examples():
    assert weyl_character_direct("gl", (), [F(2), F(5)]) == 1
    assert weyl_character_direct("gl", (1,), [F(2), F(-2)]) == 0
    assert weyl_character_direct("gl", (2, 1, 1), [F(2), F(-2), F(3)]) == -36
    x = F(5, 3)
    assert weyl_character_direct("oo", (1,), [x]) == x + 1 + 1 / x
    assert weyl_character_direct("sp", (1,), [x]) == x + 1 / x
    assert weyl_character_direct("oe", (1,), [x]) == x + 1 / x
    for family in ("oo", "sp", "oe"):
        assert weyl_character_direct(family, (), [F(2), F(7, 3)]) == 1


def test_direct_schur_matches_tableaux():
    xs = [F(2), F(-1, 3), F(5, 2)]
    for lam in partitions_up_to(5, 3):
        assert weyl_character_direct("gl", lam, xs) == ssyt_schur(lam, xs), lam


def test_length_beyond_points_vanishes():
    assert weyl_character_direct("gl", (1, 1, 1), [F(2), F(3)]) == 0
    assert weyl_character_direct("sp", (1, 1, 1), [F(2), F(3)]) == 0


def test_generalized_schur_examples():
    a, b = F(3), F(-2, 7)
    assert generalized_schur((0, 0, 0), [a, b, F(5)]) == 1
    assert generalized_schur((1, 1), [a, b]) == a * b
    assert generalized_schur((0, -1), [a, b]) == generalized_schur((1, 0), [a, b]) / (a * b)
    with pytest.raises(NonGenericPoint):
        generalized_schur((1, 0), [a, a])
    with pytest.raises(ValueError):
        generalized_schur((0, 1), [a, b])


def test_specialize_points():
    pt = EvalPoint(2, 1, 1, (F(2),), F(3))
    assert specialize_points(pt) == [2, -2, 3]
    q = F(7, 2)
    w = Cyclotomic.omega(3)
    got = specialize_points(EvalPoint(3, 1, 0, (q,), F(5)))
    assert got == [Cyclotomic.from_rational(3, q), w * q, w * w * q]
    # the orthogonal and symplectic families always take one y
    assert len(specialize_points(EvalPoint(3, 2, 2, (F(2), F(5)), F(7)), "sp")) == 7


def test_factor_schur_example():
    f = factorize("gl", (2, 1, 1), 2, 1, 1)
    assert f.sign == -1
    assert [(g.kind, g.index, g.recipe) for g in f.factors] == [("gl", (1, 1), "X^t,y^t"), ("gl", (), "X^t")]
    pt = EvalPoint(2, 1, 1, (F(2),), F(3))
    assert evaluate_factorization(f, pt) == -36 == specialized_character("gl", (2, 1, 1), pt)


def test_zero_and_empty_factorizations():
    pt = EvalPoint(2, 1, 1, (F(3, 2),), F(5, 7))
    assert factorize("gl", (1,), 2, 1, 0).zero
    assert factorize("oo", (6, 4, 2), 3, 1).zero
    assert factorize("sp", (2, 1), 2, 1).zero
    assert factorize("oe", (2, 1), 2, 1).zero
    assert evaluate_factorization(factorize("sp", (2, 1), 2, 1), pt) == 0
    for family in ("gl", "oo", "sp", "oe"):
        assert evaluate_factorization(factorize(family, (), 2, 1, 1), pt) == 1


def test_factor_sp_example():
    pt = EvalPoint(2, 1, 1, (F(2),), F(3))
    assert evaluate_factorization(factorize("sp", (1,), 2, 1), pt) == F(10, 3)
    assert specialized_character("sp", (1,), pt) == F(10, 3)


def test_factorization_json():
    f = factorize("oo", (2, 1), 3, 1)
    data = f.to_json()
    assert data["family"] == "oo" and data["zero"] is False
    assert data["prefactor"]["kind"] == "binomial_y_minus_1"
    assert factorize("sp", (2, 1), 2, 1).to_json()["zero"] is True


@pytest.mark.parametrize("family", ["gl", "oo", "sp", "oe"])
@pytest.mark.parametrize("t,n", [(2, 1), (3, 1), (5, 1), (2, 2)])
def test_factorization_sweep(family, t, n):
    rng = random.Random(f"{family}{t}{n}")
    ms = range(t) if family == "gl" else [1]
    for m in ms:
        pt = random_eval_point(t, n, m, rng)
        for lam in partitions_up_to(7, t * n + m):
            f = factorize(family, lam, t, n, m)
            assert evaluate_factorization(f, pt) == specialized_character(family, lam, pt), (lam, m)


@pytest.mark.parametrize("t,n", [(2, 2), (3, 2), (4, 1), (3, 3)])
def test_quotient_formula_e1(t, n):
    # runners holding exactly n beads give s_{lam^(p)}(X^t) as a ratio of alternants
    rng = random.Random(t + 7 * n)
    xt = [x ** t for x in random_eval_point(t, n, 1, rng).xs]
    vander = determinant([[v ** (n - 1 - j) for j in range(n)] for v in xt])
    hits = 0
    for lam in partitions_up_to(10, t * n):
        ell = t * n
        counts = residue_profile(lam, ell, t)
        quotient = t_quotient(lam, t, ell)
        beta = beta_set(lam, ell)
        for p in range(t):
            if counts[p] != n:
                continue
            exps = [(b - p) // t for b in beta if b % t == p]
            alt = determinant([[v ** e for e in exps] for v in xt])
            assert alt / vander == weyl_character_direct("gl", quotient[p], xt)
            hits += 1
    assert hits


def shifted_rhs(lam, roots):
    xs = [u * u for u in roots]
    value = weyl_character_direct("oo", lam, [-x for x in xs])
    for u in roots:
        value *= u + 1 / u
    return (-1) ** sum(lam) * value


def sample_roots(rng, n):
    while True:
        roots = [F(rng.randint(2, 12), rng.randint(1, 7)) * rng.choice((1, -1)) for _ in range(n)]
        sq = [u * u for u in roots]
        if len(set(sq)) == n and all(a * b != 1 for a in sq for b in sq):
            return roots


def test_oe_half_shifted_identity():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 3)
        lam = rng.choice(list(partitions_up_to(8, n)))
        roots = sample_roots(rng, n)
        assert oe_half_shifted(lam, roots) == shifted_rhs(lam, roots), (lam, roots)


def test_genschur_laurent_interpolation():
    pts = [F(4), F(1, 4), F(9, 2), F(2, 9)]
    for index in [(2, 0, 0, 0, 0), (3, 1, 0, -1, -2), (0, 0, 0, 0, -3)]:
        poly = genschur_laurent(index, pts)
        assert min(poly) >= index[-1] and max(poly) <= index[0]
        for z in (F(7, 3), F(-5, 2)):
            assert sum(c * z ** e for e, c in poly.items()) == generalized_schur(index, pts + [z])


def test_binomial_limit_matches_derivative():
    # the divided difference at y = 1 is (1 - 2 mu) S(1) + 2 t S'(1)
    pts = [F(8), F(1, 8)]
    index, mu, t = (2, 1, 0), 4, 3
    poly = genschur_laurent(index, pts)
    s1 = sum(poly.values())
    ds = sum(e * c for e, c in poly.items())
    assert binomial_limit_at_one(index, mu, t, pts) == (1 - 2 * mu) * s1 + 2 * t * ds
