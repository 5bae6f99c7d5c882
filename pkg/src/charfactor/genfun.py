"""Counting asymmetric partitions and the lattice labelling of asymmetric t-cores.

Two pieces live here:

* the staircase bijection for (z1, z2, k)-asymmetric partitions and the
  generating function it yields, and
* the map ``psi`` from the t-cores of ``Q(z+2, 0) | Q(z+2, z+1)`` to lattice
  labels ``(v, check)``, its inverse, and the size formula.
"""

from dataclasses import dataclass
from itertools import product

from .asymmetric import (
    AsymmetricSpec,
    build_asymmetric,
    converse_sym_index,
    detect_asymmetric,
    enumerate_t_cores,
)
from .partitions import (
    core_from_profile,
    frobenius,
    is_t_core,
    partition,
    partitions_up_to,
    residue_profile,
)


# ---------------------------------------------------------------------------
# staircase bijection and generating function


def _staircase_values(r, k):
    """Part value attached to ``a_i - a_(i+1)`` for i = 1..r."""
    return [2 * i - 1 if i >= k else 2 * i for i in range(1, r + 1)]


def staircase_image(lam, z1: int, z2: int, k: int):
    """The staircase partition of a (z1, z2, k)-asymmetric ``lam``.

    For ``k >= 1`` the leading part is ``z1*(r-1) + r``; for ``k = 0`` (no
    omitted coordinate, no z2 column) it is ``(z1+1)*r`` and all other parts
    are even.
    """
    lam = partition(lam)
    if detect_asymmetric(lam, z1, z2) != k:
        raise ValueError(f"{lam} is not ({z1},{z2},{k})-asymmetric")
    alpha = frobenius(lam).alpha
    r = len(alpha)
    if r == 0:
        return ()
    if k == 0:
        head, values, tail = (z1 + 1) * r, [2 * i for i in range(1, r + 1)], 0
    else:
        head, values, tail = z1 * (r - 1) + r, _staircase_values(r, k), z2
    parts = [head]
    for i in range(r, 0, -1):
        nxt = alpha[i] if i < r else 0
        parts += [values[i - 1]] * (alpha[i - 1] - nxt)
    parts += [1] * tail
    return partition(parts)


def _leading_rank(first, z1, k):
    if k == 0:
        r, rem = divmod(first, z1 + 1)
    else:
        r, rem = divmod(first + z1, z1 + 1)
    return r if rem == 0 and r >= max(k, 1) else None


def is_staircase_shape(mu, z1: int, z2: int, k: int) -> bool:
    """Shape test for the image of :func:`staircase_image` (without inverting it)."""
    mu = partition(mu)
    if not mu:
        return k == 0
    r = _leading_rank(mu[0], z1, k)
    if r is None:
        return False
    values = [2 * i for i in range(1, r + 1)] if k == 0 else _staircase_values(r, k)
    tail = 0 if k == 0 else z2
    counts = {}
    for p in mu[1:]:
        counts[p] = counts.get(p, 0) + 1
    if tail:
        if counts.get(1, 0) < tail:
            return False
        counts[1] -= tail
    if set(p for p, c in counts.items() if c) - set(values):
        return False
    # a strictly decreasing: every step but the last is at least 1
    return all(counts.get(v, 0) >= 1 for v in values[:-1])


def staircase_preimage(mu, z1: int, z2: int, k: int):
    """Inverse of :func:`staircase_image`."""
    mu = partition(mu)
    if not is_staircase_shape(mu, z1, z2, k):
        raise ValueError(f"{mu} is not a staircase partition for ({z1},{z2},{k})")
    if not mu:
        return ()
    r = _leading_rank(mu[0], z1, k)
    values = [2 * i for i in range(1, r + 1)] if k == 0 else _staircase_values(r, k)
    rest = list(mu[1:])
    if k:
        rest = rest[: len(rest) - z2]
    alpha = [0] * r
    acc = 0
    for i in range(r, 0, -1):
        acc += rest.count(values[i - 1])
        alpha[i - 1] = acc
    return build_asymmetric(alpha, AsymmetricSpec(z1, z2, k))


def _series_inverse_product(factors, M):
    """Coefficients of prod 1/(1 - q^f) up to degree M."""
    coeffs = [0] * (M + 1)
    coeffs[0] = 1
    for f in factors:
        for d in range(f, M + 1):
            coeffs[d] += coeffs[d - f]
    return coeffs


def gf_coefficients(z1: int, z2: int, k: int, M: int) -> list:
    """Coefficients c_0..c_M of the generating function of (z1, z2, k)-asymmetric partitions.

    Rank ``r`` contributes ``q^(z2 + z1(r-1) + r^2 - r + k)`` over
    ``prod_{j<k} (1 - q^(2j)) * prod_{j=k}^{r} (1 - q^(2j-1))``, summed over
    ``r >= max(k, 1)``.  For ``k = 0`` the rank-r term is
    ``q^((z1+1) r + r(r-1)) / prod_{j=1}^{r} (1 - q^(2j))``.
    """
    AsymmetricSpec(z1, z2, k)
    total = [0] * (M + 1)
    if k == 0:
        total[0] = 1
    r = max(k, 1)
    while True:
        if k == 0:
            shift = (z1 + 1) * r + r * (r - 1)
            factors = [2 * j for j in range(1, r + 1)]
        else:
            shift = z2 + z1 * (r - 1) + r * r - r + k
            factors = [2 * j for j in range(1, k)] + [2 * j - 1 for j in range(k, r + 1)]
        if shift > M:
            break
        series = _series_inverse_product(factors, M - shift)
        for d, c in enumerate(series):
            total[shift + d] += c
        r += 1
    return total


def brute_force_asymmetric_counts(z1: int, z2: int, k: int, M: int) -> list:
    counts = [0] * (M + 1)
    for lam in partitions_up_to(M):
        if detect_asymmetric(lam, z1, z2) == k:
            counts[sum(lam)] += 1
    return counts


def rank_one_count(z1: int, z2: int, size: int) -> int:
    """Number of (z1, z2, 1)-asymmetric partitions of ``size`` with Frobenius rank 1."""
    return 1 if size >= z2 + 1 else 0


# ---------------------------------------------------------------------------
# lattice labels of asymmetric t-cores


@dataclass(frozen=True)
class LatticeLabel:
    t: int
    z: int
    v: tuple
    check: int

    def to_json(self) -> dict:
        return {"t": self.t, "z": self.z, "v": list(self.v), "check": self.check}


def _check_params(t, z):
    if not 0 < z + 2 <= t + 2:
        raise ValueError(f"need 0 < z + 2 <= t + 2, got t={t}, z={z}")


def label_dimension(t: int, z: int) -> int:
    return (t - z) // 2


def free_dimension(t: int, z: int) -> int:
    """Coordinates of ``v`` that actually vary; for ``z = -1`` the entry v_0 is pinned to 0."""
    return label_dimension(t, z) - (1 if z == -1 else 0)


def check_range(t: int, z: int) -> list:
    low = list(range(0, (t - z - 1) // 2 + 1))
    return low + [i for i in range(t - z, t) if i not in low]


def b_vector(t: int, z: int) -> tuple:
    return tuple(t - z - 1 - 2 * i for i in range(label_dimension(t, z)))


def _first_branch(t, z, check):
    """True when the distinguished residue sits outside the stored pairs."""
    w = t - z - 1
    if t - z <= check <= t - 1 or 2 * check == w:
        return True
    return z == -1 and check == 0


def _padding_n(lam, t):
    return max(1, -(-(len(lam) - 1) // t))


def family_index(core, t: int, z: int):
    """``i0`` of a family t-core, or None when ``core`` is not in the family."""
    if not is_t_core(core, t):
        return None
    return converse_sym_index(core, t, _padding_n(core, t), z)


def psi(core, t: int, z: int) -> LatticeLabel:
    """Label ``(v, check)`` of a t-core in ``Q(z+2, 0) | Q(z+2, z+1)``.

    ``v_i = n_i(core, tn+1) - n`` on the stored indices, except that for
    ``z = -1`` the flag ``n_0 = n + 1`` is carried by ``check = 0`` and v_0 is 0.
    """
    _check_params(t, z)
    core = partition(core)
    i0 = family_index(core, t, z)
    if i0 is None:
        raise ValueError(f"{core} is not a t-core of the z={z} family for t={t}")
    n = _padding_n(core, t)
    counts = residue_profile(core, t * n + 1, t)
    v = [counts[i] - n for i in range(label_dimension(t, z))]
    if z == -1 and v:
        v[0] -= 1 if i0 == 0 else 0
    return LatticeLabel(t, z, tuple(v), i0)


def _validate_label(label):
    t, z = label.t, label.z
    _check_params(t, z)
    if len(label.v) != label_dimension(t, z):
        raise ValueError(f"label needs {label_dimension(t, z)} coordinates")
    if label.check not in check_range(t, z):
        raise ValueError(f"check {label.check} outside {check_range(t, z)}")
    if z == -1 and label.v and label.v[0] != 0:
        raise ValueError("for z = -1 the coordinate v_0 must be 0")


def label_profile(label: LatticeLabel):
    """Residue counts ``r_i`` at padding ``t*n + 1`` and the ``n`` used."""
    _validate_label(label)
    t, z, v, check = label.t, label.z, label.v, label.check
    w = t - z - 1
    n = max((abs(x) for x in v), default=0) + 1
    r = [n] * t
    for i, x in enumerate(v):
        r[i] = n + x
        if 0 <= w - i < t and w - i != i:
            r[w - i] = n - x
    if _first_branch(t, z, check):
        r[check] += 1
    else:
        r[w - check] += 1
    return r, n


def psi_inverse(label: LatticeLabel):
    r, _ = label_profile(label)
    return core_from_profile(r, label.t)


def size_formula(label: LatticeLabel) -> int:
    """``t|v|^2 - b.v`` plus the check-dependent correction."""
    _validate_label(label)
    t, z, v, check = label.t, label.z, label.v, label.check
    base = t * sum(x * x for x in v) - sum(b * x for b, x in zip(b_vector(t, z), v))
    if _first_branch(t, z, check):
        return base + check
    return base - t * v[check] + (t - z - 1 - check)


def enumerate_labels(t: int, z: int, max_size: int) -> list:
    """All labels whose size formula is at most ``max_size``."""
    _check_params(t, z)
    dim = label_dimension(t, z)
    # |v_j| = B already costs at least t*B^2 - (2t + |b_j|)*B - t*dim
    bound = 1
    while t * bound * bound - (3 * t + 2) * bound - t * dim <= max_size:
        bound += 1
    axis = range(-bound, bound + 1)
    out = []
    for v in product(axis, repeat=dim):
        if z == -1 and v and v[0] != 0:
            continue
        for check in check_range(t, z):
            label = LatticeLabel(t, z, tuple(v), check)
            if size_formula(label) <= max_size:
                out.append(label)
    return out


def family_cores(t: int, z: int, max_size: int) -> list:
    """Family t-cores of size at most ``max_size``, by filtering all t-cores."""
    return [c for c in enumerate_t_cores(t, max_size) if family_index(c, t, z) is not None]


def infinitude_witness(t: int, z: int, count: int) -> list:
    """``count`` family t-cores of strictly increasing size, starting at the empty core."""
    _check_params(t, z)
    if t < z:
        raise ValueError("need t >= z")
    if free_dimension(t, z) == 0:
        raise ValueError(f"the family for t={t}, z={z} is finite")
    base = psi((), t, z)
    axis = 1 if z == -1 else 0
    out, last, s = [()], 0, 1
    while len(out) < count:
        v = list(base.v)
        v[axis] += s
        core = psi_inverse(LatticeLabel(t, z, tuple(v), base.check))
        if sum(core) > last:
            out.append(core)
            last = sum(core)
        s += 1
    return out
