"""Partitions, beta-sets, Frobenius coordinates, t-cores and t-quotients.

A partition is stored as a plain tuple of positive integers in weakly
decreasing order (trailing zeros trimmed).  Every operation that depends on
a beta-set takes the padding length ``ell`` explicitly, because the t-quotient
is only defined up to a cyclic rotation that is fixed by ``ell``.
"""

from typing import Iterator, NamedTuple, Sequence

Partition = tuple


class PaddingTooShort(ValueError):
    """Raised when a padding length is smaller than the partition length."""


class FrobeniusCoords(NamedTuple):
    alpha: tuple
    beta: tuple

    @property
    def rank(self) -> int:
        return len(self.alpha)


class SignedPermutation(NamedTuple):
    one_line: tuple
    sign: int


def partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return the canonical (zero-trimmed) tuple."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def size(lam: Partition) -> int:
    return sum(lam)


def padded(lam: Partition, length: int) -> tuple:
    if len(lam) > length:
        raise PaddingTooShort(f"{lam} has more than {length} parts")
    return tuple(lam) + (0,) * (length - len(lam))


def _check_padding(lam, ell):
    if ell < len(lam):
        raise PaddingTooShort(f"padding {ell} shorter than length of {lam}")


def beta_set(lam: Partition, ell: int) -> tuple:
    """The strictly decreasing sequence ``lam_i + ell - i``, i = 1..ell."""
    _check_padding(lam, ell)
    lam = padded(lam, ell)
    return tuple(lam[i] + ell - 1 - i for i in range(ell))


def partition_from_beta(beta: Sequence[int]) -> Partition:
    ell = len(beta)
    return partition(beta[i] - (ell - 1 - i) for i in range(ell))


def beta_set_to_partition(entries) -> Partition:
    """Partition of an arbitrary finite set of nonnegative integers."""
    return partition_from_beta(sorted(entries, reverse=True))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def rank(lam: Partition) -> int:
    return sum(1 for i, p in enumerate(lam) if p >= i + 1)


def frobenius(lam: Partition) -> FrobeniusCoords:
    r = rank(lam)
    conj = conjugate(lam)
    return FrobeniusCoords(
        tuple(lam[i] - i - 1 for i in range(r)),
        tuple(conj[j] - j - 1 for j in range(r)),
    )


def from_frobenius(alpha: Sequence[int], beta: Sequence[int]) -> Partition:
    """Inverse of :func:`frobenius`; both sides must be strict of equal length."""
    alpha, beta = tuple(alpha), tuple(beta)
    r = len(alpha)
    if len(beta) != r:
        raise ValueError("Frobenius coordinates of unequal length")
    for side in (alpha, beta):
        if any(a < 0 for a in side) or any(side[i] <= side[i + 1] for i in range(r - 1)):
            raise ValueError(f"not a strict partition: {side}")
    rows = [alpha[i] + i + 1 for i in range(r)]
    cols = [beta[j] + j + 1 for j in range(r)]
    # rows below the diagonal block are read off from the column lengths
    i = r + 1
    while True:
        row = sum(1 for c in cols if c >= i)
        if row == 0:
            break
        rows.append(row)
        i += 1
    return partition(rows)


def residue_profile(lam: Partition, ell: int, t: int) -> tuple:
    """Counts ``n_i`` of beta-set entries congruent to ``i`` mod ``t``."""
    if t < 2:
        raise ValueError("t must be at least 2")
    counts = [0] * t
    for b in beta_set(lam, ell):
        counts[b % t] += 1
    return tuple(counts)


def core_from_profile(counts: Sequence[int], t: int) -> Partition:
    """The t-core whose beta-set at padding ``sum(counts)`` has these counts."""
    entries = [t * j + i for i in range(t) for j in range(counts[i])]
    return beta_set_to_partition(entries)


def t_core(lam: Partition, t: int, ell: int = None) -> Partition:
    if ell is None:
        ell = len(lam)
    return core_from_profile(residue_profile(lam, ell, t), t)


def is_t_core(lam: Partition, t: int) -> bool:
    return t_core(lam, t) == tuple(lam)


def t_quotient(lam: Partition, t: int, ell: int = None) -> tuple:
    """The t-quotient ``(lam^(0), ..., lam^(t-1))`` read at padding ``ell``."""
    if ell is None:
        ell = len(lam)
    beta = beta_set(lam, ell)
    components = []
    for i in range(t):
        reduced = [(b - i) // t for b in beta if b % t == i]
        components.append(partition_from_beta(reduced))
    return tuple(components)


def sigma_permutation(lam: Partition, ell: int, t: int, first=()) -> SignedPermutation:
    """Column permutation grouping ``beta(lam, ell)`` by residue class.

    Residues listed in ``first`` (strictly decreasing) come first in that
    order; the remaining residues follow in increasing order.  Within a
    class the entries stay in decreasing order.
    """
    first = tuple(first)
    if any(e < 0 or e >= t for e in first) or any(
        first[i] <= first[i + 1] for i in range(len(first) - 1)
    ):
        raise ValueError(f"invalid residue list {first} for t={t}")
    order = first + tuple(i for i in range(t) if i not in first)
    beta = beta_set(lam, ell)
    one_line = tuple(
        j + 1 for e in order for j in range(ell) if beta[j] % t == e
    )
    return SignedPermutation(one_line, permutation_sign(one_line))


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of a permutation in one-line notation, by cycle decomposition."""
    pos = {v: i for i, v in enumerate(sorted(seq))}
    perm = [pos[v] for v in seq]
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def partitions_of(m: int, max_part: int = None, max_length: int = None) -> Iterator[Partition]:
    """All partitions of ``m`` in reverse lexicographic order."""
    if max_part is None:
        max_part = m
    if max_length is None:
        max_length = m
    if m == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions_of(m - first, first, max_length - 1):
            yield (first,) + rest


def partitions_up_to(max_size: int, max_length: int = None) -> Iterator[Partition]:
    for m in range(max_size + 1):
        yield from partitions_of(m, max_length=max_length)
