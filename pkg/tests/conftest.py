"""Shared grid builders for the test suite."""

from fractions import Fraction


def positive_grid(num_bound: int, den_bound: int) -> list[Fraction]:
    """All distinct positive rationals p/q with p <= num_bound, q <= den_bound."""
    values = set()
    for q in range(1, den_bound + 1):
        for p in range(1, num_bound + 1):
            values.add(Fraction(p, q))
    return sorted(values)


def signed_grid(num_bound: int, den_bound: int, include_zero: bool = False) -> list[Fraction]:
    """Positive grid mirrored through zero, optionally with zero itself."""
    pos = positive_grid(num_bound, den_bound)
    values = [-v for v in reversed(pos)]
    if include_zero:
        values.append(Fraction(0))
    values.extend(pos)
    return values
