"""The nonnegative-commutator relation as a queryable preorder on nonzero rationals.

alpha precedes beta iff the commutator of their dilated floor functions is
everywhere nonnegative.  The relation is reflexive and transitive; restricted
to positive integers it is divisibility, and restricted to negatives it is
already a partial order.  This module offers pairwise queries, equivalence,
an exhaustive transitivity audit over a finite grid, and grid equivalence
classes under a canonical representative.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .classify import is_member
from .exact import Rat
from .floorfn import DilationPair


def precedes(alpha: Rat, beta: Rat) -> bool:
    """True iff the commutator of (alpha, beta) is nonnegative everywhere."""
    if alpha == 0 or beta == 0:
        raise ValueError("the preorder is defined on nonzero dilations")
    return is_member(DilationPair(alpha, beta))


def equivalent(alpha: Rat, beta: Rat) -> bool:
    """True iff each of alpha, beta precedes the other."""
    return precedes(alpha, beta) and precedes(beta, alpha)


def audit_transitivity(grid: Iterable[Rat]) -> tuple[Rat, Rat, Rat] | None:
    """Scan all ordered triples for a transitivity violation; None if sound.

    Pairwise verdicts are memoized, so the triple scan is pure lookups.
    """
    values: Sequence[Rat] = list(grid)
    rel = {(x, y): precedes(x, y) for x in values for y in values}
    for a in values:
        for b in values:
            if not rel[a, b]:
                continue
            for c in values:
                if rel[b, c] and not rel[a, c]:
                    return a, b, c
    return None


def equivalence_classes(grid: Iterable[Rat]) -> list[list[Rat]]:
    """Partition a grid by mutual precedence.

    Each class is sorted with its canonical representative first (smallest
    denominator, then smallest numerator); classes are ordered by their
    representatives under the same key.
    """
    values = list(dict.fromkeys(grid))
    classes: list[list[Rat]] = []
    assigned: set[Rat] = set()
    for value in values:
        if value in assigned:
            continue
        cls = [other for other in values if equivalent(value, other)]
        assigned.update(cls)
        cls.sort(key=lambda v: (v.denominator, v.numerator))
        classes.append(cls)
    classes.sort(key=lambda cls: (cls[0].denominator, cls[0].numerator))
    return classes
