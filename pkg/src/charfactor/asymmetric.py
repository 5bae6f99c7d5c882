"""(z1, z2, k)-asymmetric partitions and the nonvanishing classifiers.

A partition is (z1, z2, k)-asymmetric when its Frobenius coordinates read
``(a_1, ..., a_r | a_1+z1, ..., omit a_k+z1, ..., a_r+z1, z2)``; ``k = 0``
means nothing is omitted and no ``z2`` column is added.

The classifiers below decide, from the residue profile at padding
``t*n + 1`` (or ``t*n + m`` for GL), whether a specialized character is
nonzero and which case of its factorization applies.
"""

from dataclasses import dataclass
from typing import Optional

from .partitions import (
    FrobeniusCoords,
    Partition,
    beta_set,
    core_from_profile,
    frobenius,
    from_frobenius,
    partitions_up_to,
    is_t_core,
    residue_profile,
    t_core,
)


class LengthBoundError(ValueError):
    """Raised when a partition is too long for the requested group."""


@dataclass(frozen=True)
class AsymmetricSpec:
    z1: int
    z2: int
    k: int = 0

    def __post_init__(self):
        if not self.z1 > self.z2 >= 0:
            raise ValueError(f"need z1 > z2 >= 0, got {self.z1}, {self.z2}")
        if self.k < 0:
            raise ValueError("k must be nonnegative")


@dataclass(frozen=True)
class Classification:
    """Outcome of a nonvanishing test: ``i0 is None`` means the value is 0."""

    i0: Optional[int] = None
    case: Optional[int] = None

    @property
    def vanishes(self) -> bool:
        return self.i0 is None

    def to_json(self) -> dict:
        if self.vanishes:
            return {"vanishes": True}
        return {"vanishes": False, "i0": self.i0, "case": self.case}


VANISHES = Classification()


def asymmetric_beta_side(alpha, spec: AsymmetricSpec) -> tuple:
    r = len(alpha)
    if spec.k > r:
        raise ValueError(f"k={spec.k} exceeds rank {r}")
    if spec.k == 0:
        return tuple(a + spec.z1 for a in alpha)
    kept = tuple(a + spec.z1 for j, a in enumerate(alpha, 1) if j != spec.k)
    return kept + (spec.z2,)


def build_asymmetric(alpha, spec: AsymmetricSpec) -> Partition:
    alpha = tuple(alpha)
    beta = asymmetric_beta_side(alpha, spec)
    if any(beta[i] <= beta[i + 1] for i in range(len(beta) - 1)):
        raise ValueError(f"leg side {beta} is not strictly decreasing")
    return from_frobenius(alpha, beta)


def detect_asymmetric(lam: Partition, z1: int, z2: int) -> Optional[int]:
    """The unique k for which ``lam`` is (z1, z2, k)-asymmetric, else None."""
    AsymmetricSpec(z1, z2)
    alpha, beta = frobenius(lam)
    for k in range(len(alpha) + 1):
        if asymmetric_beta_side(alpha, AsymmetricSpec(z1, z2, k)) == beta:
            return k
    return None


def beta_deletion_check(lam: Partition, ell: int, spec: AsymmetricSpec) -> bool:
    """Beta-set characterization of asymmetry.

    ``beta(lam, ell)`` must equal ``(a_1+ell, ..., a_r+ell, ell-1, ..., 0)``
    with ``ell-1-z2`` and every ``ell-1-z1-a_j`` (j != k) deleted.
    """
    beta = beta_set(lam, ell)
    alpha = frobenius(lam).alpha
    r = len(alpha)
    if spec.k > r:
        return False
    deleted = [ell - 1 - spec.z1 - a for j, a in enumerate(alpha, 1) if j != spec.k]
    if spec.k:
        deleted.append(ell - 1 - spec.z2)
    if len(set(deleted)) != len(deleted) or any(not 0 <= d < ell for d in deleted):
        return False
    remaining = [v for v in range(ell - 1, -1, -1) if v not in set(deleted)]
    return tuple(a + ell for a in alpha) + tuple(remaining) == beta


def _check_length(lam, bound):
    if len(lam) > bound:
        raise LengthBoundError(f"{lam} has more than {bound} parts")


def classify_schur(lam: Partition, t: int, n: int, m: int) -> Optional[Partition]:
    """The t-core ``nu`` if the twisted GL character is nonzero, else None."""
    if not 0 <= m <= t - 1:
        raise ValueError(f"m must lie in [0, {t - 1}]")
    _check_length(lam, t * n + m)
    nu = t_core(lam, t, t * n + m)
    if len(nu) <= m and (not nu or nu[0] <= t - m):
        return nu
    return None


def _pair_deviation(counts, pairs, n):
    """Index of the unique pair whose sum exceeds 2n by 1 (2 if self-paired).

    Returns ``False`` when the pattern is violated and ``None`` when every
    pair sums to exactly ``2n``.
    """
    found = None
    for i, j in pairs:
        excess = counts[i] + counts[j] - 2 * n
        if excess == 0:
            continue
        if excess == 1 + (i == j) and found is None:
            found = i
        else:
            return False
    return found


def classify_odd(lam: Partition, t: int, n: int) -> Classification:
    """Nonvanishing test for the odd orthogonal character at ``t*n + 1`` points."""
    _check_length(lam, t * n + 1)
    counts = residue_profile(lam, t * n + 1, t)
    pairs = [(i, t - 1 - i) for i in range((t - 1) // 2 + 1)]
    i0 = _pair_deviation(counts, pairs, n)
    if i0 is None or i0 is False:
        return VANISHES
    return Classification(i0, 1 if 2 * i0 == t - 1 else 2)


def odd_surplus_runner(lam: Partition, t: int, n: int) -> Optional[int]:
    """Residue ``j`` in the pair ``{i0, t-1-i0}`` with ``n_j >= n + 1``.

    The pair sum is ``2n + 1`` (or the middle runner holds ``n + 1``), so
    exactly one member carries the surplus bead.  None when the character vanishes.
    """
    cls = classify_odd(lam, t, n)
    if cls.vanishes:
        return None
    counts = residue_profile(lam, t * n + 1, t)
    i0 = cls.i0
    return i0 if counts[i0] > n else t - 1 - i0


def classify_symp(lam: Partition, t: int, n: int) -> Classification:
    """Nonvanishing test for the symplectic character at ``t*n + 1`` points."""
    _check_length(lam, t * n + 1)
    counts = residue_profile(lam, t * n + 1, t)
    pairs = [(i, t - 2 - i) for i in range((t - 2) // 2 + 1)]
    i0 = _pair_deviation(counts, pairs, n)
    if i0 is False:
        return VANISHES
    last = counts[t - 1] - n
    if i0 is None and last == 1:
        i0 = t - 1
    elif i0 is None or last != 0:
        return VANISHES
    if i0 == t - 1:
        return Classification(i0, 1)
    return Classification(i0, 2 if 2 * i0 == t - 2 else 3)


def classify_even(lam: Partition, t: int, n: int) -> Classification:
    """Nonvanishing test for the even orthogonal character at ``t*n + 1`` points."""
    _check_length(lam, t * n + 1)
    counts = residue_profile(lam, t * n + 1, t)
    pairs = [(i, t - i) for i in range(1, t // 2 + 1)]
    if counts[0] == n + 1:
        if all(counts[i] + counts[j] == 2 * n for i, j in pairs):
            return Classification(0, 1)
        return VANISHES
    if counts[0] != n:
        return VANISHES
    i0 = _pair_deviation(counts, pairs, n)
    if i0 is None or i0 is False:
        return VANISHES
    return Classification(i0, 2 if 2 * i0 == t else 3)


def converse_sym_index(core: Partition, t: int, n: int, z: int) -> Optional[int]:
    """Residue profile criterion for membership of a t-core in the z-family.

    Returns the distinguished residue ``i0`` or None.  The family is
    ``Q(z+2, 0) | Q(z+2, z+1)``, read at padding ``t*n + 1``.  For ``z = -1``
    residue 0 is unpaired and ``n_0 = n + 1`` flags ``i0 = 0``.
    """
    if not 0 < z + 2 <= t + 2:
        raise ValueError("need 0 < z + 2 <= t + 2")
    counts = residue_profile(core, t * n + 1, t)
    w = t - z - 1
    found = None
    start = 0
    if z == -1:
        # residue 0 has no partner when w = t; it is a singleton like [t-z, t-1]
        start = 1
        if counts[0] == n + 1:
            found = 0
        elif counts[0] != n:
            return None
    for i in range(start, w // 2 + 1) if w >= 0 else ():
        excess = counts[i] + counts[(w - i) % t] - 2 * n
        if excess == 0:
            continue
        if excess == 1 + (2 * i == w) and found is None:
            found = i
        else:
            return None
    for i in range(t - z, t):
        excess = counts[i] - n
        if excess == 0:
            continue
        if excess == 1 and found is None:
            found = i
        else:
            return None
    return found


def enumerate_t_cores(t: int, max_size: int) -> list:
    """All t-cores of size at most ``max_size``, sorted by (size, parts).

    Cores are grown breadth-first over the residue-count lattice: moving one
    bead from runner ``j`` to runner ``i`` of the abacus changes the charge
    vector by ``e_i - e_j``.  Size is a convex quadratic in the charge, so
    the search is cut off once it exceeds ``max_size``.
    """
    start = (1,) + (0,) * (t - 1)  # bead counts at padding 1: beta-set {0}
    seen = {start}
    frontier = [start]
    found = []
    while frontier:
        nxt = []
        for counts in frontier:
            core = _core_from_charge(counts, t)
            if sum(core) > max_size:
                continue
            found.append(core)
            for i in range(t):
                for j in range(t):
                    if i == j:
                        continue
                    c = list(counts)
                    c[i] += 1
                    c[j] -= 1
                    c = tuple(c)
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
        frontier = nxt
    return sorted(set(found), key=lambda p: (sum(p), p))


def _core_from_charge(charge, t):
    # shift so that every runner holds a nonnegative number of beads
    lift = max(0, -min(charge))
    counts = [c + lift for c in charge]
    return core_from_profile(counts, t)


def enumerate_asymmetric_tcores(spec: AsymmetricSpec, t: int, max_size: int) -> list:
    return [
        core
        for core in enumerate_t_cores(t, max_size)
        if detect_asymmetric(core, spec.z1, spec.z2) == spec.k
    ]


def brute_force_t_cores(t: int, max_size: int) -> list:
    return [lam for lam in partitions_up_to(max_size) if is_t_core(lam, t)]
