"""Shared hypothesis strategies and acceptance bookkeeping for the test suite."""
from fractions import Fraction

from hypothesis import strategies as st

from xlag.partition import Partition


def partitions(max_len: int = 4, max_part: int = 4):
    return st.lists(st.integers(1, max_part), max_size=max_len).map(
        lambda xs: Partition(tuple(sorted(xs, reverse=True)))
    )


def rationals(span: int = 6, max_den: int = 7):
    return st.builds(Fraction, st.integers(-span * max_den, span * max_den), st.integers(1, max_den))


def strict_lists(max_len: int = 3, max_value: int = 4):
    return st.sets(st.integers(0, max_value), max_size=max_len).map(lambda s: tuple(sorted(s, reverse=True)))


ACCEPTANCE_LINES: list[str] = []

