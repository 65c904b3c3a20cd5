"""Exact rational scalars: construction, parsing, floor and ceiling.

Every quantity in this package is a ``fractions.Fraction`` (aliased ``Rat``),
kept in lowest terms with a positive denominator, so equality is structural
and no computation ever rounds.  The textual format is ``p`` or ``p/q`` with
q >= 1; decimal notation is rejected on purpose, because it cannot represent
the dilation factors exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rat = Fraction

_RAT_PATTERN = re.compile(r"(-?[0-9]+)(?:/([1-9][0-9]*))?")


def rat(num: int, den: int = 1) -> Rat:
    """Return num/den in lowest terms, sign carried on the numerator."""
    if den == 0:
        raise ValueError(f"zero denominator: {num}/0")
    return Fraction(num, den)


def rat_floor(x: Rat | int) -> int:
    """Greatest integer <= x."""
    return x.numerator // x.denominator


def rat_ceil(x: Rat | int) -> int:
    """Least integer >= x; equals -rat_floor(-x)."""
    return -((-x.numerator) // x.denominator)


def parse_rat(text: str) -> Rat:
    """Parse ``p`` or ``p/q`` (q >= 1) into a canonical Rat."""
    match = _RAT_PATTERN.fullmatch(text.strip())
    if match is None:
        raise ValueError(f"not a rational in p or p/q form: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) else 1
    return Fraction(num, den)


def format_rat(x: Rat | int) -> str:
    """Render in lowest terms: ``p`` for integers, ``p/q`` otherwise."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
