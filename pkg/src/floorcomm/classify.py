"""Witness-producing membership decisions for the nonnegative-commutator set.

Membership of (alpha, beta) splits by sign: the axes and the quadrant
alpha < 0 < beta always belong, alpha > 0 > beta never does, and the two
same-sign quadrants are decided by finite searches for integer parameters
placing the pair on one of the member families:

    positive:  m*alpha*beta + n*alpha = beta         m, n >= 0, not both 0
    negative:  m*alpha*beta - n*beta  = -alpha       m >= 0, n >= 1
               alpha = -q/p and -1/p <= beta < 0     p, q >= 1 coprime
               alpha = -q/p, beta = -(1/p) / (1 + (m/p + n/q - 1)/r)
                                                     m >= 0, n >= 1, r >= 2,
                                                     0 < m/p + n/q < 1

Each search range is provably sufficient, so an exhausted search is a proof
of non-membership; verdicts are cross-checked against the period oracle
(directly here for non-members, by the test suite for members).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import ClassVar, Union

from .exact import Rat, rat_floor
from .floorfn import DilationPair, oracle_verify


@dataclass(frozen=True)
class AxisZero:
    """alpha = 0 or beta = 0: both compositions vanish identically."""

    kind: ClassVar[str] = "axis_zero"


@dataclass(frozen=True)
class MixedNegPos:
    """alpha < 0 < beta: the left side dominates pointwise."""

    kind: ClassVar[str] = "mixed_neg_pos"


@dataclass(frozen=True)
class PositiveLinear:
    """m*alpha*beta + n*alpha = beta with m, n >= 0, not both zero."""

    m: int
    n: int
    kind: ClassVar[str] = "positive_linear"

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0 or (self.m == 0 and self.n == 0):
            raise ValueError("need m, n >= 0, not both zero")


@dataclass(frozen=True)
class NegHyperbola:
    """m*alpha*beta - n*beta = -alpha with m >= 0, n >= 1."""

    m: int
    n: int
    kind: ClassVar[str] = "neg_hyperbola"

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 1:
            raise ValueError("need m >= 0 and n >= 1")


@dataclass(frozen=True)
class NegVertical:
    """alpha = -q/p in lowest terms with -1/p <= beta < 0."""

    p: int
    q: int
    kind: ClassVar[str] = "neg_vertical"

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1 or gcd(self.p, self.q) != 1:
            raise ValueError("need coprime p, q >= 1")


@dataclass(frozen=True)
class NegSporadic:
    """Isolated rational solution below the vertical segment at alpha = -q/p."""

    p: int
    q: int
    m: int
    n: int
    r: int
    kind: ClassVar[str] = "neg_sporadic"

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1 or gcd(self.p, self.q) != 1:
            raise ValueError("need coprime p, q >= 1")
        if self.m < 0 or self.n < 1 or self.r < 2:
            raise ValueError("need m >= 0, n >= 1, r >= 2")
        share = Fraction(self.m, self.p) + Fraction(self.n, self.q)
        if not 0 < share < 1:
            raise ValueError("need 0 < m/p + n/q < 1")


Witness = Union[AxisZero, MixedNegPos, PositiveLinear, NegHyperbola, NegVertical, NegSporadic]


@dataclass(frozen=True)
class Verdict:
    """Membership verdict with a certificate: a witness, or a violating point."""

    pair: DilationPair
    member: bool
    witness: Witness | None
    counterexample: Rat | None


@dataclass(frozen=True)
class MuNu:
    """First-quadrant coordinates (1/alpha, beta/alpha)."""

    mu: Rat
    nu: Rat

    def __post_init__(self) -> None:
        if self.mu <= 0 or self.nu <= 0:
            raise ValueError("mu, nu must be positive")


@dataclass(frozen=True)
class SigmaTau:
    """First-quadrant coordinates (alpha, alpha/beta)."""

    sigma: Rat
    tau: Rat

    def __post_init__(self) -> None:
        if self.sigma <= 0 or self.tau <= 0:
            raise ValueError("sigma, tau must be positive")


def positive_witness(alpha: Rat, beta: Rat) -> PositiveLinear | None:
    """Search m*alpha*beta + n*alpha = beta over m, n >= 0, not both zero.

    In the equivalent form m*alpha + n*(alpha/beta) = 1 both terms are
    nonnegative, so m <= 1/alpha and, for each m, n is determined exactly.
    Smallest m wins (n is unique given m).
    """
    if alpha <= 0 or beta <= 0:
        raise ValueError("dilation factors must be positive")
    ratio = alpha / beta
    for m in range(rat_floor(1 / alpha) + 1):
        n = (1 - m * alpha) / ratio
        if n.denominator == 1 and (m > 0 or n > 0):
            return PositiveLinear(m, int(n))
    return None


def negative_witness(alpha: Rat, beta: Rat) -> NegHyperbola | NegVertical | NegSporadic | None:
    """Search the three negative-quadrant families in a fixed order.

    Hyperbola: from m*alpha - n = -alpha/beta, n = m*alpha + alpha/beta must
    be an integer >= 1; n decreases in m (alpha < 0), bounding the scan.
    Vertical: alpha = -q/p is forced by lowest terms, leaving -1/p <= beta.
    Sporadic: for each admissible (m, n) the defining equation pins r, which
    must come out an integer >= 2.
    """
    if alpha >= 0 or beta >= 0:
        raise ValueError("dilation factors must be negative")
    ratio = alpha / beta
    m_max = rat_floor((ratio - 1) / (-alpha))
    for m in range(m_max + 1):
        n = m * alpha + ratio
        if n.denominator == 1 and n >= 1:
            return NegHyperbola(m, int(n))
    p, q = alpha.denominator, -alpha.numerator
    if beta >= Fraction(-1, p):
        return NegVertical(p, q)
    for m in range(p):
        for n in range(1, q + 1):
            share = Fraction(m, p) + Fraction(n, q)
            if not 0 < share < 1:
                continue
            slope = Fraction(-1, p) / beta - 1  # equals (share - 1)/r
            if slope == 0:
                continue
            r = (share - 1) / slope
            if r.denominator == 1 and r >= 2:
                return NegSporadic(p, q, m, n, int(r))
    return None


def is_member(pair: DilationPair) -> bool:
    """Membership by sign dispatch and witness search, without the oracle."""
    alpha, beta = pair.alpha, pair.beta
    if alpha == 0 or beta == 0:
        return True
    if alpha < 0 < beta:
        return True
    if alpha > 0 > beta:
        return False
    if alpha > 0:
        return positive_witness(alpha, beta) is not None
    return negative_witness(alpha, beta) is not None


def classify(pair: DilationPair) -> Verdict:
    """Full verdict: membership plus a witness or an explicit violating point.

    Non-member verdicts always carry a counterexample x with commutator < 0,
    taken from the oracle's argmin; if the oracle were ever to disagree with
    an exhausted witness search, that is a bug and raises.
    """
    alpha, beta = pair.alpha, pair.beta
    if alpha == 0 or beta == 0:
        return Verdict(pair, True, AxisZero(), None)
    if alpha < 0 < beta:
        return Verdict(pair, True, MixedNegPos(), None)
    witness: Witness | None = None
    if alpha > 0 and beta > 0:
        witness = positive_witness(alpha, beta)
    elif alpha < 0 and beta < 0:
        witness = negative_witness(alpha, beta)
    if witness is not None:
        return Verdict(pair, True, witness, None)
    report = oracle_verify(pair)
    if report.min_value >= 0:
        raise RuntimeError(f"witness search found nothing but the oracle accepts {pair}")
    return Verdict(pair, False, None, report.argmin)


def to_munu(alpha: Rat, beta: Rat) -> MuNu:
    """(alpha, beta) -> (1/alpha, beta/alpha), an involution of the open first quadrant."""
    if alpha <= 0 or beta <= 0:
        raise ValueError("dilation factors must be positive")
    return MuNu(1 / alpha, beta / alpha)


def from_munu(coords: MuNu) -> DilationPair:
    """(mu, nu) -> (1/mu, nu/mu)."""
    return DilationPair(1 / coords.mu, coords.nu / coords.mu)


def to_sigmatau(alpha: Rat, beta: Rat) -> SigmaTau:
    """(alpha, beta) -> (alpha, alpha/beta)."""
    if alpha <= 0 or beta <= 0:
        raise ValueError("dilation factors must be positive")
    return SigmaTau(alpha, alpha / beta)


def from_sigmatau(coords: SigmaTau) -> DilationPair:
    """(sigma, tau) -> (sigma, sigma/tau)."""
    return DilationPair(coords.sigma, coords.sigma / coords.tau)


def _require_positive_pair(pair: DilationPair) -> None:
    if pair.alpha <= 0 or pair.beta <= 0:
        raise ValueError("symmetries are defined on the open positive quadrant")


def symmetry_scale_second(pair: DilationPair, k: int) -> DilationPair:
    """(alpha, beta) -> (alpha, k*beta), k >= 1; maps members to members."""
    _require_positive_pair(pair)
    if k < 1:
        raise ValueError("k must be a positive integer")
    return DilationPair(pair.alpha, k * pair.beta)


def symmetry_shrink(pair: DilationPair, k: int) -> DilationPair:
    """(alpha, beta) -> (alpha/k, beta/k), k >= 1; maps members to members."""
    _require_positive_pair(pair)
    if k < 1:
        raise ValueError("k must be a positive integer")
    return DilationPair(pair.alpha / k, pair.beta / k)


def birational(pair: DilationPair) -> DilationPair:
    """(alpha, beta) -> (alpha/beta, 1/beta), an involutive member-to-member map."""
    _require_positive_pair(pair)
    return DilationPair(pair.alpha / pair.beta, 1 / pair.beta)
