"""Maya diagrams: origin shifts, canonical forms and the partition correspondences.

A Maya diagram is encoded as ``(left | right)``: ``right`` lists the filled boxes at
positions ``n >= 0`` and ``left`` lists the empty boxes at negative positions ``k``
through the label ``n' = -k - 1``. Both lists are strictly decreasing.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count, islice
from typing import Iterator, Sequence

from .partition import Partition, degrees, from_degrees


def _check_strict(seq, name):
    if any(v < 0 for v in seq):
        raise ValueError(f"{name} entries must be non-negative, got {seq}")
    if any(a <= b for a, b in zip(seq, seq[1:])):
        raise ValueError(f"{name} must be strictly decreasing, got {seq}")


@dataclass(frozen=True)
class MayaDiagram:
    left: tuple[int, ...] = ()
    right: tuple[int, ...] = ()

    def __post_init__(self):
        left = tuple(int(v) for v in self.left)
        right = tuple(int(v) for v in self.right)
        _check_strict(left, "left")
        _check_strict(right, "right")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def __str__(self):
        fmt = lambda s: ",".join(map(str, s)) if s else "∅"
        return f"({fmt(self.left)} | {fmt(self.right)})"

    # box-level view

    def is_filled(self, pos: int) -> bool:
        if pos >= 0:
            return pos in self.right
        return (-pos - 1) not in self.left

    def filled_positions(self) -> Iterator[int]:
        """All filled positions in decreasing order (an infinite sequence)."""
        top = self.right[0] if self.right else -1
        for pos in count(top, -1):
            if self.is_filled(pos):
                yield pos

    def extended_right(self, length: int) -> list[int]:
        """First ``length`` terms of the infinite decreasing sequence of filled positions."""
        return list(islice(self.filled_positions(), length))

    def __add__(self, t: int) -> "MayaDiagram":
        return shift(self, t)

    def __sub__(self, t: int) -> "MayaDiagram":
        return shift(self, -t)


def shift(M: MayaDiagram, t: int) -> MayaDiagram:
    """The equivalent diagram ``M + t``: every box moves ``t`` places to the right."""
    if t == 0:
        return M
    lo = min([-(v + 1) for v in M.left] + [0]) - abs(t) - 1
    hi = max(list(M.right) + [0]) + abs(t) + 1
    filled = [p + t for p in range(lo, hi + 1) if M.is_filled(p)]
    # everything below lo is filled and stays negative after the shift
    right = tuple(sorted((p for p in filled if p >= 0), reverse=True))
    filled_set = set(filled)
    left = tuple(sorted((-p - 1 for p in range(lo + t, 0) if p not in filled_set), reverse=True))
    return MayaDiagram(left, right)


def canonical_shift(M: MayaDiagram) -> int:
    """t(M): the shift taking M to the form with no empty box left of the origin and a gap at 0."""
    if M.left:
        return M.left[0] + 1
    e = 0
    while e in M.right:
        e += 1
    return -e


def canonical(M: MayaDiagram) -> MayaDiagram:
    return shift(M, canonical_shift(M))


def partition_of(M: MayaDiagram) -> Partition:
    return from_degrees(canonical(M).right)


def from_partition(lam: Partition) -> MayaDiagram:
    """Canonical diagram ``(∅ | n_1, ..., n_r)`` built from the degrees of ``lam``."""
    return MayaDiagram((), degrees(lam))


def frobenius(M: MayaDiagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Encoding with as many empty boxes left of the origin as filled boxes to its right."""
    C = canonical(M)
    # moving the origin one step right changes (#left - #right) by exactly one
    for t in range(0, -(len(C.right) + 1), -1):
        E = shift(C, t)
        if len(E.left) == len(E.right):
            return E.left, E.right
    raise AssertionError("no Frobenius position found")  # unreachable


def conjugate_shift(M: MayaDiagram) -> int:
    """Shift to the encoding with no filled box right of the origin and position -1 filled."""
    if M.right:
        return -(M.right[0] + 1)
    e = 0
    while e in M.left:
        e += 1
    return e


def conjugate_encoding(M: MayaDiagram) -> MayaDiagram:
    return shift(M, conjugate_shift(M))


def conjugate_partition_of(M: MayaDiagram) -> Partition:
    """Partition read from the all-empty-right encoding, lambda'_j = n'_j - s + j."""
    E = conjugate_encoding(M)
    s = len(E.left)
    parts = [v - s + j for j, v in enumerate(E.left, start=1)]
    return Partition(tuple(p for p in parts if p > 0))


def parse_maya(left: str, right: str) -> MayaDiagram:
    def seq(text: str) -> Sequence[int]:
        text = text.strip()
        if text in ("", "-", "∅"):
            return ()
        return tuple(int(tok) for tok in text.split(",") if tok.strip())

    return MayaDiagram(seq(left), seq(right))


def encodings(M: MayaDiagram) -> dict:
    """The three named encodings, as used by the CLI."""
    C = canonical(M)
    F = frobenius(M)
    K = conjugate_encoding(M)
    return {
        "input": {"left": list(M.left), "right": list(M.right)},
        "canonical": {"left": list(C.left), "right": list(C.right), "shift": canonical_shift(M)},
        "frobenius": {"left": list(F[0]), "right": list(F[1])},
        "conjugate_canonical": {"left": list(K.left), "right": list(K.right), "shift": conjugate_shift(M)},
        "partition": list(partition_of(M).parts),
        "conjugate_partition": list(conjugate_partition_of(M).parts),
    }
