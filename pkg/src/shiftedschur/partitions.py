"""Partitions, skew shapes and standard-tableau counting.

Partitions are stored without trailing zeros, so structural equality and
hashing coincide with mathematical equality.  The canonical total order
used everywhere for deterministic output is: weight ascending, then
descending lexicographic among equal weights.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .errors import DomainError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; () is the empty partition."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 0:
                raise DomainError(f"negative part {p} in partition {parts}")
            if p == 0:
                raise DomainError(f"interior zero part in partition {parts}")
            if i + 1 < len(parts) and parts[i + 1] > p:
                raise DomainError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The 1-indexed part, 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def contains(self, inner: "Partition") -> bool:
        return contains(self, inner)

    def text(self) -> str:
        """Comma-separated form; the empty partition renders as "0"."""
        return ",".join(str(p) for p in self) if self else "0"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __getnewargs__(self):
        return (tuple(self),)


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated list of parts; "" and "0" give the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return EMPTY
    parts = []
    for token in text.split(","):
        token = token.strip()
        try:
            parts.append(int(token))
        except ValueError:
            raise DomainError(f"non-integer part {token!r} in partition {text!r}") from None
    return Partition(parts)


def contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    """Containment of Young diagrams: inner[i] <= outer[i] with zero padding."""
    outer = tuple(outer)
    inner = tuple(inner)
    if len(inner) > len(outer) and any(p > 0 for p in inner[len(outer):]):
        return False
    return all(q <= p for p, q in zip(outer, inner))


class SkewShape:
    """A skew diagram outer/inner; construction checks inner is contained in outer."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer: Partition, inner: Partition = EMPTY):
        outer = Partition(outer)
        inner = Partition(inner)
        if not contains(outer, inner):
            raise DomainError(f"{inner} is not contained in {outer}")
        self.outer = outer
        self.inner = inner

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells (row, col), 0-indexed, of the skew diagram."""
        for r, p in enumerate(self.outer):
            for c in range(self.inner.part(r + 1), p):
                yield (r, c)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewShape)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    def __repr__(self) -> str:
        return f"SkewShape({tuple(self.outer)!r}, {tuple(self.inner)!r})"


@lru_cache(maxsize=None)
def _dim_skew(outer: Partition, inner: Partition) -> int:
    # Chains in Young's lattice from inner to outer, counted by peeling
    # corner cells off the outer shape.
    if outer == inner:
        return 1
    total = 0
    for r in range(len(outer)):
        below = outer[r + 1] if r + 1 < len(outer) else 0
        if outer[r] > below and outer[r] - 1 >= inner.part(r + 1):
            reduced = list(outer)
            reduced[r] -= 1
            total += _dim_skew(Partition(reduced), inner)
    return total


def count_standard_tableaux(shape: SkewShape) -> int:
    """Number of standard tableaux of the skew shape (1 for the empty shape)."""
    return _dim_skew(shape.outer, shape.inner)


def hook_h(shape: SkewShape) -> Fraction:
    """|shape|! divided by the number of standard tableaux of the shape."""
    return Fraction(factorial(shape.size), count_standard_tableaux(shape))


def canonical_key(p: Partition) -> tuple:
    """Sort key realizing the canonical order: weight, then descending lex."""
    return (sum(p), tuple(-a for a in p))


def conjugate(p: Partition) -> Partition:
    """The transposed diagram."""
    p = Partition(p)
    if not p:
        return p
    return Partition(sum(1 for a in p if a > c) for c in range(p[0]))


def _partitions_of(total: int, max_part: int, max_len: int) -> Iterator[tuple[int, ...]]:
    # Yields partitions of `total` in descending lexicographic order.
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions_of(total - first, first, max_len - 1):
            yield (first,) + rest


def partitions_up_to(weight: int, max_length: int) -> list[Partition]:
    """All partitions of weight <= `weight` and length <= `max_length`, canonically ordered."""
    if weight < 0 or max_length < 0:
        raise DomainError("weight and max_length must be nonnegative")
    out: list[Partition] = []
    for w in range(weight + 1):
        out.extend(Partition(p) for p in _partitions_of(w, w, max_length))
    return out


def partitions_between(lower: Partition, upper: Partition) -> list[Partition]:
    """All partitions rho with lower <= rho <= upper in containment order."""
    if not contains(upper, lower):
        return []
    rows: list[Partition] = []

    def extend(prefix: list[int], r: int, prev: int) -> None:
        if r == len(upper):
            rows.append(Partition(prefix))
            return
        lo = lower.part(r + 1)
        hi = min(upper[r], prev)
        for v in range(max(lo, 1), hi + 1):
            extend(prefix + [v], r + 1, v)
        if lo == 0:
            # The partition may end here; all later rows of `lower` are zero too.
            rows.append(Partition(prefix))

    extend([], 0, upper[0] if upper else 0)
    return sorted(rows, key=canonical_key)
