"""Complex-scalar primitives used by every other module.

Integer powers follow exact repeated-multiplication semantics (so the parity
convention (-z)**s == (+/-) z**s holds with no branch-cut surprises), square
roots are branch-explicit, and all comparisons go through a single
relative/absolute tolerance type.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import NumericOverflowError, ZeroToNegativePowerError

#: The two inhabitants of the sign type.
PLUS = 1
MINUS = -1
SIGNS = (PLUS, MINUS)

Sign = int
ComplexPair = tuple[complex, complex]


@dataclass(frozen=True)
class Tolerance:
    """Combined relative/absolute comparison tolerance."""

    rel: float = 1e-9
    abs: float = 1e-12

    def __post_init__(self) -> None:
        if self.rel < 0 or self.abs < 0:
            raise ValueError("tolerance components must be non-negative")


#: Default tolerance for verification: absorbs double-precision error over
#: <= 8 steps at unit-scale inputs.
DEFAULT_TOL = Tolerance(rel=1e-9, abs=1e-12)

#: Looser tolerance for orbit deduplication, so roundoff never splits a
#: genuine branch into two.
DEDUPE_TOL = Tolerance(rel=1e-8, abs=1e-12)


def is_finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def ensure_finite(z: complex, step: int | None = None) -> complex:
    """Return ``z`` unchanged, or raise instead of propagating Inf/NaN."""
    if not is_finite(z):
        raise NumericOverflowError("result overflowed to a non-finite value", step=step)
    return z


def cpow(z: complex, n: int, step: int | None = None) -> complex:
    """``z`` raised to the signed integer ``n`` by binary exponentiation.

    ``0**0`` is defined as 1 so closed forms degrade gracefully at ell=0.
    """
    z = complex(z)
    if n == 0:
        return 1 + 0j
    if z == 0:
        if n < 0:
            raise ZeroToNegativePowerError("zero base raised to a negative power", step=step)
        return 0j
    m = -n if n < 0 else n
    result = 1 + 0j
    base = z
    while m:
        if m & 1:
            result *= base
        m >>= 1
        if m:
            base *= base
    if n < 0:
        ensure_finite(result, step=step)
        if result == 0:
            # |z|**|n| underflowed; its reciprocal is an overflow.
            raise NumericOverflowError("reciprocal of underflowed power", step=step)
        result = 1 / result
    return ensure_finite(result, step=step)


def principal_sqrt(z: complex) -> complex:
    """Square root with non-negative real part (tie: non-negative imaginary)."""
    w = cmath.sqrt(z)
    if w.real < 0 or (w.real == 0 and w.imag < 0):
        w = -w
    return w


def sqrt_branch(z: complex, s: Sign) -> complex:
    """``s`` times the principal square root of ``z``."""
    return s * principal_sqrt(z)


def approx_eq(a: complex, b: complex, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff ``|a-b| <= tol.abs + tol.rel * max(|a|, |b|)``."""
    return abs(a - b) <= tol.abs + tol.rel * max(abs(a), abs(b))


def pair_eq_unordered(p: ComplexPair, q: ComplexPair, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Equality of two label-free pairs under some assignment of labels."""
    a1, a2 = p
    b1, b2 = q
    return (approx_eq(a1, b1, tol) and approx_eq(a2, b2, tol)) or (
        approx_eq(a1, b2, tol) and approx_eq(a2, b1, tol)
    )


def pair_eq_ordered(p: ComplexPair, q: ComplexPair, tol: Tolerance = DEFAULT_TOL) -> bool:
    return approx_eq(p[0], q[0], tol) and approx_eq(p[1], q[1], tol)


def complex_to_list(z: complex) -> list[float]:
    """Canonical wire format for complex scalars: ``[re, im]``."""
    return [z.real, z.imag]


def complex_from_obj(obj: object) -> complex:
    """Parse a complex scalar from any accepted literal form.

    Accepts a real number, a two-element ``[re, im]`` array, or a string
    such as ``"1.5"``, ``"2i"``, ``"1+2i"`` (also with ``j``).
    """
    if isinstance(obj, bool):
        raise ValueError(f"not a complex literal: {obj!r}")
    if isinstance(obj, (int, float)):
        return complex(obj)
    if isinstance(obj, complex):
        return obj
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        re, im = obj
        return complex(float(re), float(im))
    if isinstance(obj, str):
        text = obj.strip().replace(" ", "").replace("i", "j")
        try:
            return complex(text)
        except ValueError as exc:
            raise ValueError(f"not a complex literal: {obj!r}") from exc
    raise ValueError(f"not a complex literal: {obj!r}")
