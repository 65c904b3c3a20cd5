"""Two-generator numerical semigroups: membership, Frobenius number, duality.

S(a, b) = a*N + b*N for coprime a, b >= 1.  Everything here runs at desk
scale, so membership is a direct divisibility scan and the duality check is
a full sweep of [0, a*b - a - b]; simplicity is the point, since these serve
as ground truth for the torus necessity argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class SemigroupPair:
    """Coprime generators a, b >= 1 of the semigroup a*N + b*N."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise ValueError("generators must be >= 1")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"generators must be coprime, got gcd = {gcd(self.a, self.b)}")


def sg_contains(sg: SemigroupPair, n: int) -> bool:
    """True iff n = i*a + j*b for some integers i, j >= 0."""
    if n < 0:
        raise ValueError("membership is defined on nonnegative integers")
    if sg.a == 1 or sg.b == 1:
        return True
    return any((n - i * sg.a) % sg.b == 0 for i in range(n // sg.a + 1))


def _require_proper(sg: SemigroupPair) -> None:
    if sg.a == 1 or sg.b == 1:
        raise ValueError("semigroup is all of N; no gaps exist")


def frobenius_number(sg: SemigroupPair) -> int:
    """Largest integer not in the semigroup: a*b - a - b for coprime a, b >= 2."""
    _require_proper(sg)
    return sg.a * sg.b - sg.a - sg.b


def nonrealizing_set(sg: SemigroupPair) -> list[int]:
    """All nonnegative integers outside the semigroup, ascending.

    Complete because nothing above the Frobenius number is missing.
    """
    _require_proper(sg)
    top = frobenius_number(sg)
    return [n for n in range(top + 1) if not sg_contains(sg, n)]


def sylvester_duality_holds(sg: SemigroupPair) -> bool:
    """Check n in S  <=>  a*b - a - b - n not in S, for every n in [0, a*b-a-b]."""
    _require_proper(sg)
    top = frobenius_number(sg)
    return all(sg_contains(sg, n) != sg_contains(sg, top - n) for n in range(top + 1))
