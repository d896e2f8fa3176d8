"""Shared helpers for the test suite: residuals and seeded random draws."""

from __future__ import annotations

import random

ComplexPair = tuple[complex, complex]


def residual(got: complex, want: complex) -> float:
    """Normalized deviation: |got - want| / max(|got|, |want|, 1)."""
    return abs(got - want) / max(abs(got), abs(want), 1.0)


def pair_residual(got: ComplexPair, want: ComplexPair) -> float:
    return max(residual(got[0], want[0]), residual(got[1], want[1]))


def pair_residual_unordered(got: ComplexPair, want: ComplexPair) -> float:
    return min(pair_residual(got, want), pair_residual(got, (want[1], want[0])))


def draw_complex(rng: random.Random, scale: float = 1.25) -> complex:
    return complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))


def draw_pair(rng: random.Random, scale: float = 1.25) -> ComplexPair:
    return (draw_complex(rng, scale), draw_complex(rng, scale))
