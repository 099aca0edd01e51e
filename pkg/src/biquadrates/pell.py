"""Solutions of the product equation through the Pell equation u^2 - 3v^2 = 1.

Every solution of the Pell equation with v >= 1 plugs into fixed shapes

    x = (1, 2v),  y = (4v^2+1, 2v(2v^2+1)),  z = (4uv^2, 8v^4+4v^2+1)

and satisfies the product equation, because the difference of the two sides
factors through (u^2-3v^2-1).  The ladder of integer solutions is generated
from (2, 1) by (u, v) -> (2u+3v, u+2v), and a rational one-parameter slice
comes from u = (t^2+3)/(t^2-3), v = 2t/(t^2-3).
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from biquadrates.exact import SolutionSix
from biquadrates.families import ParamSolution, family_eq26


class PellSolution(NamedTuple):
    """Integer pair (u, v) with u^2 - 3v^2 = 1."""

    u: int
    v: int


def pell_fundamental(D: int) -> tuple:
    """Smallest (u, v) with v >= 1 and u^2 - D v^2 = 1, for nonsquare D >= 2.

    Walks the continued-fraction expansion of sqrt(D) and returns the first
    convergent that solves the equation.
    """
    if not isinstance(D, int) or D < 2:
        raise ValueError("D must be an integer >= 2")
    a0 = isqrt(D)
    if a0 * a0 == D:
        raise ValueError("D must not be a perfect square")
    m, d, a = 0, 1, a0
    prev_num, num = 1, a0
    prev_den, den = 0, 1
    while num * num - D * den * den != 1:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        prev_num, num = num, a * num + prev_num
        prev_den, den = den, a * den + prev_den
    return (num, den)


def pell3_nth(k: int) -> PellSolution:
    """k-th solution of u^2 - 3v^2 = 1, counting (2, 1) as the first."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    u, v = 2, 1
    for _ in range(k - 1):
        u, v = 2 * u + 3 * v, u + 2 * v
    return PellSolution(u, v)


def pell_to_solution(ps) -> SolutionSix:
    """Map a Pell pair with v >= 1 into a solution of the product equation."""
    u, v = ps
    if u * u - 3 * v * v != 1 or v < 1:
        raise ValueError("need u^2 - 3v^2 = 1 with v >= 1")
    return SolutionSix(
        1,
        2 * v,
        4 * v * v + 1,
        2 * v * (2 * v * v + 1),
        4 * u * v * v,
        8 * v**4 + 4 * v * v + 1,
    )


def rational_pell(t) -> tuple:
    """Rational point (u, v) on u^2 - 3v^2 = 1 with parameter t.

    The denominator t^2 - 3 never vanishes for rational t, so the map is
    total; t = 0 lands on the trivial solution (-1, 0).
    """
    t = Fraction(t)
    den = t * t - 3
    u = (t * t + 3) / den
    v = 2 * t / den
    return (u, v)


def pell_param_family() -> ParamSolution:
    """Polynomial family in t obtained by clearing the rational Pell slice."""
    return family_eq26()
