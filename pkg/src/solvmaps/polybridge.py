"""Bidirectional maps between dependent variables and polynomial coefficients.

Two bridges are provided:

* the quadratic bridge: the unordered pair (x1, x2) as the two
  indistinguishable zeros of z**2 + y1 z + y2;
* the cubic double-root bridge: the ordered pair (x1, x2) as the zeros of
  z**3 + y1 z**2 + y2 z + y3 = (z - x1)**2 (z - x2), where x1 has
  multiplicity 2 and the labels are meaningful.

The double-root inversion is implemented with the algebraically consistent
prefactor 1/3 (the 1/2 printed in the source formula fails the round-trip
test); the printed variant is kept available for the discrepancy report.
"""

from __future__ import annotations

from typing import NamedTuple

from .numeric import ComplexPair, Sign, cpow, principal_sqrt, sqrt_branch


class MonicQuadratic(NamedTuple):
    """Coefficients of z**2 + y1 z + y2."""

    y1: complex
    y2: complex


class MonicCubic(NamedTuple):
    """Coefficients of z**3 + y1 z**2 + y2 z + y3 (double-root family)."""

    y1: complex
    y2: complex
    y3: complex


class DistinctZeroPair(NamedTuple):
    """Ordered pair: x1 is the double zero, x2 the simple zero."""

    x1: complex
    x2: complex


#: Unordered pair of indistinguishable zeros; equality is pair_eq_unordered.
ZeroPair = ComplexPair


def quad_from_zeros(p: ZeroPair) -> MonicQuadratic:
    """Vieta: coefficients of the monic quadratic with the given zeros."""
    x1, x2 = p
    return MonicQuadratic(-(x1 + x2), x1 * x2)


def quad_zeros(m: MonicQuadratic) -> ZeroPair:
    """The unordered zero pair of z**2 + y1 z + y2.

    Uses the cancellation-free form: the larger-magnitude root from the
    sign-matched discriminant, the companion root via division by y2.
    """
    y1, y2 = complex(m[0]), complex(m[1])
    s = principal_sqrt(y1 * y1 - 4 * y2)
    t = -y1
    big = t + s if abs(t + s) >= abs(t - s) else t - s
    if big == 0:
        return (0j, 0j)
    r1 = big / 2
    r2 = y2 / r1
    return (r1, r2)


def cubic_from_zeros(d: DistinctZeroPair) -> MonicCubic:
    """Expand (z - x1)**2 (z - x2) into monic-cubic coefficients."""
    x1, x2 = d
    return MonicCubic(-(2 * x1 + x2), x1 * (x1 + 2 * x2), -(x1 * x1 * x2))


def cubic_zeros_branch(y1: complex, y2: complex, b: Sign) -> DistinctZeroPair:
    """One branch of the double-root inversion.

    x1 solves 3 x1**2 + 2 y1 x1 + y2 = 0; the two branches enumerate both
    solutions, with x2 back-substituted from y1 = -(2 x1 + x2).  A zero
    discriminant yields the triple-root pair for both branches.
    """
    s = principal_sqrt(y1 * y1 - 3 * y2)
    x1 = (-y1 + b * s) / 3
    x2 = -y1 - 2 * x1
    return DistinctZeroPair(x1, x2)


def cubic_zeros_printed(y1: complex, y2: complex, s: Sign) -> DistinctZeroPair:
    """The double-root inversion with the (incorrect) printed 1/2 prefactor.

    Kept only so the verification report can demonstrate that this variant
    fails the round-trip check while :func:`cubic_zeros_branch` passes.
    """
    w = sqrt_branch(y1 * y1 - 3 * y2, s)
    x1 = (-y1 - w) / 2
    x2 = (-y1 + 2 * w) / 2
    return DistinctZeroPair(x1, x2)


def y3_from_y12(y1: complex, y2: complex, s: Sign) -> complex:
    """The dependent cubic coefficient y3 in terms of y1 and y2.

    y3 = (-2 y1**3 + 9 y1 y2 + 2 S (y1**2 - 3 y2)**(3/2)) / 27, with the
    half-integer power evaluated as the cubed branch square root.
    """
    w = sqrt_branch(y1 * y1 - 3 * y2, s)
    return (-2 * cpow(y1, 3) + 9 * y1 * y2 + 2 * cpow(w, 3)) / 27
