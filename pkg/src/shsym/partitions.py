"""Integer partitions: enumeration, counting, and Frobenius coordinates.

Partitions are plain tuples of non-increasing positive integers; the empty
tuple is the unique partition of 0.  The signed half-integers attached to
the diagonal hooks are kept exact by storing their doubled values.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]


class FrobeniusCoords(NamedTuple):
    """Arm and leg lengths of the diagonal cells of a Young diagram."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate an iterable of parts and return it as a canonical tuple."""
    lam = tuple(int(p) for p in parts)
    prev = None
    for p in lam:
        if p < 1:
            raise ValueError(f"parts must be positive integers: {lam!r}")
        if prev is not None and p > prev:
            raise ValueError(f"parts must be non-increasing: {lam!r}")
        prev = p
    return lam


def _descending(n: int, max_part: int, min_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), min_part - 1, -1):
        rest = n - first
        if rest and rest < min_part:
            continue
        for tail in _descending(rest, first, min_part):
            yield (first,) + tail


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(_descending(n, n, 1))


@lru_cache(maxsize=None)
def enumerate_min_part(n: int, m: int) -> tuple[Partition, ...]:
    """Partitions of n whose every part is >= m, lexicographically decreasing."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if m < 1:
        raise ValueError("m must be positive")
    return tuple(_descending(n, n, m))


# Counting uses the pentagonal-number recurrence; the table is append-only,
# so concurrent readers of already-computed entries are safe.
_P_TABLE = [1]


def count_partitions(n: int) -> int:
    """The number p(n) of partitions of n; zero for negative n."""
    if n < 0:
        return 0
    while len(_P_TABLE) <= n:
        m = len(_P_TABLE)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _P_TABLE[m - g1]
            if g2 <= m:
                total += sign * _P_TABLE[m - g2]
            k += 1
        _P_TABLE.append(total)
    return _P_TABLE[n]


def conjugate(lam: Iterable[int]) -> Partition:
    """Transpose of the Young diagram."""
    lam = check_partition(lam)
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def frobenius(lam: Iterable[int]) -> FrobeniusCoords:
    """Frobenius coordinates: arm/leg lengths a_i, b_i of the diagonal cells.

    The i-th diagonal cell (0-indexed) exists while lam[i] > i; its arm is
    the number of cells strictly to the right, its leg the number strictly
    below.
    """
    lam = check_partition(lam)
    conj = conjugate(lam)
    arms = []
    legs = []
    for i, part in enumerate(lam):
        if part <= i:
            break
        arms.append(part - i - 1)
        legs.append(conj[i] - i - 1)
    return FrobeniusCoords(tuple(arms), tuple(legs))


def c_set(lam: Iterable[int]) -> tuple[int, ...]:
    """Signed half-integers of the diagonal hooks, doubled, in ascending order.

    Entry 2c is stored for each c in {-b_i - 1/2} followed by {a_i + 1/2}.
    """
    arms, legs = frobenius(lam)
    neg = tuple(-2 * b - 1 for b in legs)
    pos = tuple(2 * a + 1 for a in reversed(arms))
    return neg + pos


def format_partition(lam: Iterable[int]) -> str:
    """Textual form "(4,3,3)"; the empty partition is "()"."""
    return "(" + ",".join(str(p) for p in lam) + ")"


def parse_partition(text: str) -> Partition:
    """Inverse of format_partition."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"partition must look like (4,3,3): {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return ()
    try:
        parts = [int(tok) for tok in inner.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None
    return check_partition(parts)
