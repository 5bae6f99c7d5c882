"""Sweeps comparing direct character values with the factorized forms."""

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .algebra import random_eval_point
from .characters import evaluate_factorization, factorize, specialized_character
from .partitions import partitions_up_to


def expected_cases(family: str, t: int) -> set:
    """Factorization cases that can occur for ``family`` at this ``t``."""
    if family == "oo":
        return {1, 2} if t % 2 else {2}
    if family == "sp":
        return {1} | ({2} if t % 2 == 0 else set()) | ({3} if t >= 3 else set())
    if family == "oe":
        return {1} | ({2} if t % 2 == 0 else set()) | ({3} if t >= 3 else set())
    return set()


@dataclass
class SweepReport:
    family: str
    t: int
    n: int
    m: int
    checked: int = 0
    zeros: int = 0
    cases: Counter = field(default_factory=Counter)
    mismatches: list = field(default_factory=list)
    zero_disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.zero_disagreements

    @property
    def missing_cases(self) -> set:
        return expected_cases(self.family, self.t) - set(self.cases)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "t": self.t,
            "n": self.n,
            "m": self.m,
            "checked": self.checked,
            "zeros": self.zeros,
            "cases": {str(k): v for k, v in sorted(self.cases.items())},
            "mismatches": self.mismatches,
            "zero_disagreements": self.zero_disagreements,
        }


def sweep_points(family, t, n, m, count, seed):
    """``count`` generic points, reproducible from ``seed`` and the sweep parameters."""
    rng = random.Random(f"{seed}:{family}:{t}:{n}:{m}")
    return [random_eval_point(t, n, m if family == "gl" else 1, rng) for _ in range(count)]


def _value_json(value):
    return value.to_json()


def check_partition(family, lam, t, n, m, points):
    """Compare both sides at every point; returns (case, zero, mismatches, zero_flag_ok)."""
    f = factorize(family, lam, t, n, m)
    values = [specialized_character(family, lam, pt) for pt in points]
    mismatches = []
    for pt, direct in zip(points, values):
        factored = evaluate_factorization(f, pt)
        if factored != direct:
            mismatches.append(
                {
                    "lambda": list(lam),
                    "point": pt.to_json(),
                    "direct": _value_json(direct),
                    "factored": _value_json(factored),
                }
            )
    # vanishing is judged at the first two (independent) points
    direct_zero = all(v == 0 for v in values[:2])
    return f.case, f.zero, mismatches, direct_zero == f.zero


def _check_chunk(args):
    family, chunk, t, n, m, points = args
    return [check_partition(family, lam, t, n, m, points) for lam in chunk]


def sweep(family, t, n, m=1, max_size=8, points=3, seed=0, workers=1) -> SweepReport:
    """Check every partition of size at most ``max_size`` that fits the length bound."""
    if points < 2:
        raise ValueError("need at least two points to judge vanishing")
    if family != "gl":
        m = 1
    pts = sweep_points(family, t, n, m, points, seed)
    lams = list(partitions_up_to(max_size, t * n + m))
    if workers > 1:
        size = max(1, len(lams) // (4 * workers))
        chunks = [lams[i : i + size] for i in range(0, len(lams), size)]
        with ProcessPoolExecutor(workers) as pool:
            parts = pool.map(_check_chunk, [(family, c, t, n, m, pts) for c in chunks])
            results = [r for part in parts for r in part]
    else:
        results = [check_partition(family, lam, t, n, m, pts) for lam in lams]
    report = SweepReport(family, t, n, m)
    for lam, (case, zero, mismatches, agree) in zip(lams, results):
        report.checked += 1
        report.zeros += zero
        if not zero and case is not None:
            report.cases[case] += 1
        report.mismatches += mismatches
        if not agree:
            report.zero_disagreements.append(list(lam))
    return report
