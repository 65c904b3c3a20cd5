"""Avoidance geometry: the enlarged diagonal and the torus corner rectangle.

Two finite deciders live here.  The first asks whether the rectangular
lattice mu*Z x nu*Z avoids the union of open unit squares along the diagonal;
a lattice point in a diagonal square means its common floor value is shared
by both reduced Beatty sets, so the scan window of the beatty module decides.
The second asks whether the cyclic subgroup of the torus R^2/Z^2 generated by
(sigma, tau) avoids the open corner box (0, sigma) x (0, tau) projected to
the torus; for rational parameters the subgroup is finite, of order
lcm(den(sigma), den(tau)), and is enumerated outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .beatty import reduced_contains
from .exact import Rat, rat_floor


@dataclass(frozen=True)
class LatticeParams:
    """Spacings of the rectangular lattice mu*Z x nu*Z; both positive."""

    mu: Rat
    nu: Rat

    def __post_init__(self) -> None:
        if self.mu <= 0 or self.nu <= 0:
            raise ValueError("lattice spacings must be positive")


@dataclass(frozen=True)
class CornerRect:
    """Open box (0, sigma) x (0, tau) with one corner at the origin."""

    sigma: Rat
    tau: Rat

    def __post_init__(self) -> None:
        if self.sigma <= 0 or self.tau <= 0:
            raise ValueError("corner rectangle sides must be positive")


def in_enlarged_diagonal(x: Rat, y: Rat) -> bool:
    """True iff (x, y) lies in some open unit square (n, n+1) x (n, n+1)."""
    return x.denominator != 1 and y.denominator != 1 and rat_floor(x) == rat_floor(y)


def lattice_diag_disjoint(params: LatticeParams) -> tuple[bool, tuple[int, int] | None]:
    """Does mu*Z x nu*Z avoid the enlarged diagonal?

    A hit at floor value m means m is in both reduced Beatty sets, so the
    window [0, lcm(num(mu), num(nu))) is exhaustive.  On failure returns
    lattice indices (k, l) with (k*mu, l*nu) inside a diagonal square.
    """
    mu, nu = params.mu, params.nu
    for m in range(lcm(mu.numerator, nu.numerator)):
        if reduced_contains(mu, m) and reduced_contains(nu, m):
            k = (m * mu.denominator) // mu.numerator + 1  # least k with k*mu > m
            ell = (m * nu.denominator) // nu.numerator + 1
            return False, (k, ell)
    return True, None


def frac_part(x: Rat) -> Rat:
    """Canonical representative of x mod 1, in [0, 1)."""
    return x - rat_floor(x)


def circle_arc_contains(x: Rat, sigma: Rat) -> bool:
    """Per-axis factor of the torus test: is x mod 1 inside the arc (0, sigma)?

    For sigma > 1 the projected arc wraps and covers the whole circle; for
    sigma = 1 it is the circle minus the single point 0.
    """
    if sigma <= 0:
        raise ValueError("arc length must be positive")
    if sigma > 1:
        return True
    return 0 < frac_part(x) < sigma


def torus_point_in_corner(x: Rat, y: Rat, rect: CornerRect) -> bool:
    """True iff (x, y) mod Z^2 lies in the projected open corner rectangle."""
    return circle_arc_contains(x, rect.sigma) and circle_arc_contains(y, rect.tau)


def torus_subgroup_avoids(rect: CornerRect) -> tuple[bool, int | None]:
    """Does the cyclic torus subgroup generated by (sigma, tau) avoid the box?

    The subgroup has exactly lcm(den(sigma), den(tau)) elements, enumerated
    as N*(sigma, tau) mod Z^2.  On failure returns the least hitting N >= 1
    (N = 0 is the identity, which the open box never contains).
    """
    ps, qs = rect.sigma.numerator, rect.sigma.denominator
    pt, qt = rect.tau.numerator, rect.tau.denominator
    for n in range(lcm(qs, qt)):
        # frac(n*sigma) < sigma reduces to (n*ps mod qs) < ps when sigma <= 1
        hit_x = ps > qs or 0 < (n * ps) % qs < ps
        hit_y = pt > qt or 0 < (n * pt) % qt < pt
        if hit_x and hit_y:
            return False, n
    return True, None
