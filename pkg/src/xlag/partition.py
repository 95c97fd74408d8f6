"""Integer partitions, degree sequences and exceptional-degree bookkeeping."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterable, Iterator, Sequence, Union


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers (the empty tuple is allowed)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive integers, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing, got {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def first(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return format_partition(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def degrees(self) -> tuple[int, ...]:
        return degrees(self)


PartitionLike = Union[Partition, Sequence[int]]


def as_partition(lam: PartitionLike) -> Partition:
    if isinstance(lam, Partition):
        return lam
    return Partition(tuple(lam))


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2"`` style text; the empty string (or ``"-"``) is the empty partition."""
    text = text.strip()
    if text in ("", "-", "()", "∅"):
        return Partition(())
    try:
        parts = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}: expected comma-separated integers") from exc
    return Partition(parts)


def format_partition(lam: PartitionLike) -> str:
    return ",".join(str(p) for p in as_partition(lam).parts)


def conjugate(lam: PartitionLike) -> Partition:
    lam = as_partition(lam)
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p >= i) for i in range(1, lam.first + 1)))


def degrees(lam: PartitionLike) -> tuple[int, ...]:
    """Strictly decreasing degrees n_j = lambda_j + r - j (1-based j)."""
    lam = as_partition(lam)
    r = lam.length
    return tuple(p + r - j for j, p in enumerate(lam.parts, start=1))


def from_degrees(degs: Iterable[int]) -> Partition:
    """Inverse of :func:`degrees`; zero degrees at the tail are dropped, as they give zero parts."""
    degs = sorted((int(d) for d in degs), reverse=True)
    if len(set(degs)) != len(degs) or (degs and degs[-1] < 0):
        raise ValueError(f"degrees must be distinct non-negative integers, got {degs}")
    r = len(degs)
    parts = [d - r + j for j, d in enumerate(degs, start=1)]
    return Partition(tuple(p for p in parts if p > 0))


def is_even(lam: PartitionLike) -> bool:
    parts = as_partition(lam).parts
    if len(parts) % 2:
        return False
    return all(parts[2 * j] == parts[2 * j + 1] for j in range(len(parts) // 2))


def degree_set(lam: PartitionLike, mu: PartitionLike, n: int) -> bool:
    """Membership test for the degree sequence N_{lambda,mu}."""
    lam, mu = as_partition(lam), as_partition(mu)
    if n < 0:
        return False
    w = lam.weight + mu.weight
    if n < w - lam.length:
        return False
    return all(n - w != p - j for j, p in enumerate(lam.parts, start=1))


def admissible_degrees(lam: PartitionLike, mu: PartitionLike, start: int = 0) -> Iterator[int]:
    """Iterate over N_{lambda,mu} in increasing order (infinite)."""
    for n in count(max(start, 0)):
        if degree_set(lam, mu, n):
            yield n


def exceptional_degrees(lam: PartitionLike, mu: PartitionLike) -> list[int]:
    """The |lambda|+|mu| non-negative integers outside N_{lambda,mu}."""
    lam, mu = as_partition(lam), as_partition(mu)
    # every excluded degree is below |lambda| + |mu| + lambda_1
    bound = lam.weight + mu.weight + lam.first + 1
    return [n for n in range(bound) if not degree_set(lam, mu, n)]


def partitions_of(total: int) -> Iterator[Partition]:
    """All partitions of ``total`` in reverse lexicographic order."""

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - p, p):
                yield (p,) + rest

    for parts in rec(total, total):
        yield Partition(parts)


def partition_pairs(max_total: int) -> Iterator[tuple[Partition, Partition]]:
    """All pairs (lambda, mu) with |lambda| + |mu| <= max_total."""
    for total in range(max_total + 1):
        for a in range(total + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(total - a):
                    yield lam, mu
