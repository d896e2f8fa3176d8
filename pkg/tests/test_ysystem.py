"""The triangular coefficient system: step, closed forms, exponent algebra."""

import random

import pytest

from solvmaps import (
    YParams,
    YState,
    u_exponent,
    y_closed,
    y_closed_special,
    y_iterate,
    y_step,
)
from solvmaps.errors import (
    NumericOverflowError,
    QRMismatchError,
    ZeroToNegativePowerError,
)

from util import draw_complex, residual

NUMERIC_ERRORS = (ZeroToNegativePowerError, NumericOverflowError)


def state_residual(got: YState, want: YState) -> float:
    return max(residual(got.y1, want.y1), residual(got.y2, want.y2))


class TestUExponent:
    @pytest.mark.parametrize(
        "k, q, r, want",
        [(1, 2, 4, 0), (2, 1, 1, -1), (-1, 3, 5, -5)],
    )
    def test_values(self, k, q, r, want):
        assert u_exponent(k, q, r) == want

    def test_special_assignment_gives_zero(self):
        for k in (-3, -2, -1, 1, 2, 3):
            assert u_exponent(k, 2 * k, 2 * (1 + k)) == 0


class TestParams:
    def test_k_zero_rejected(self):
        with pytest.raises(ValueError):
            YParams(1, 1, 0, 0, 2, 4)

    @pytest.mark.parametrize("bad", [1.5, True])
    def test_non_integer_exponents_rejected(self, bad):
        with pytest.raises(TypeError):
            YParams(1, 1, 0, bad, 2, 4)


class TestStep:
    def test_worked_example(self):
        p = YParams(2, 1, 0, 1, 2, 4)
        assert y_step(p, YState(1, 1)) == YState(2, 1)

    def test_second_worked_example(self):
        p = YParams(1, 1, 0, 1, 2, 4)
        assert y_step(p, YState(2, 1)) == YState(4, 4)

    def test_y2_zero_invariant_plane(self):
        # gamma = 0 makes y2 = 0 an invariant plane.
        p = YParams(1.5 + 0.5j, 2, 0, 2, 1, 1)
        got = y_step(p, YState(3 + 1j, 0))
        assert got.y2 == 0
        assert got.y1 == (1.5 + 0.5j) * (3 + 1j) ** 3

    def test_zero_coefficient_skips_power(self):
        # gamma = 0 must not evaluate y1**r even when y1 = 0 and r < 0.
        p = YParams(1, 0, 0, 1, 0, -2)
        assert y_step(p, YState(0, 5)) == YState(0, 0)


class TestClosedForm:
    def test_ell_zero_identity(self):
        p = YParams(2 + 1j, 3, 4 - 1j, 2, 3, -1)
        y0 = YState(0.5 + 0.5j, -1 + 2j)
        closed = y_closed(p, y0, 0)
        assert closed.state == y0
        assert closed.Y2 == y0.y2
        assert closed.u == p.u

    def test_two_step_worked_example(self):
        p = YParams(1, 1, 0, 1, 2, 4)
        closed = y_closed(p, YState(2, 1), 2)
        assert state_residual(closed.state, YState(16, 64)) <= 1e-12

    def test_ell_one_equals_step(self):
        rng = random.Random("ysystem:ell1")
        for _ in range(20):
            p = YParams(
                draw_complex(rng), draw_complex(rng), draw_complex(rng),
                rng.choice([-2, -1, 1, 2]), rng.randint(-3, 4), rng.randint(-3, 4),
            )
            y0 = YState(draw_complex(rng), draw_complex(rng))
            try:
                closed = y_closed(p, y0, 1).state
                stepped = y_step(p, y0)
            except NUMERIC_ERRORS:
                continue
            assert state_residual(closed, stepped) <= 1e-9

    def test_closed_equals_iteration(self):
        rng = random.Random("ysystem:closed")
        checked = 0
        for _ in range(100):
            k = rng.choice([-2, -1, 1, 2])
            p = YParams(
                draw_complex(rng, 1.5), draw_complex(rng, 1.5), draw_complex(rng, 1.5),
                k, rng.randint(-3, 4), rng.randint(-3, 4),
            )
            y0 = YState(draw_complex(rng, 1.5), draw_complex(rng, 1.5))
            ell = rng.randint(0, 6)
            try:
                closed = y_closed(p, y0, ell).state
                iterated = y_iterate(p, y0, ell)
            except NUMERIC_ERRORS:
                continue
            assert state_residual(closed, iterated) <= 1e-9
            checked += 1
        assert checked >= 50

    def test_semigroup_property(self):
        rng = random.Random("ysystem:semigroup")
        checked = 0
        for _ in range(50):
            p = YParams(
                draw_complex(rng), draw_complex(rng), draw_complex(rng),
                rng.choice([-2, -1, 1, 2]), rng.randint(-3, 4), rng.randint(-3, 4),
            )
            y0 = YState(draw_complex(rng), draw_complex(rng))
            a, b = rng.randint(0, 3), rng.randint(0, 3)
            try:
                whole = y_closed(p, y0, a + b).state
                mid = y_closed(p, y0, a).state
                chained = y_closed(p, mid, b).state
            except NUMERIC_ERRORS:
                continue
            assert state_residual(whole, chained) <= 1e-9
            checked += 1
        assert checked >= 25

    def test_negative_ell_rejected(self):
        p = YParams(1, 1, 0, 1, 2, 4)
        with pytest.raises(ValueError):
            y_closed(p, YState(1, 1), -1)


class TestSpecialClosedForm:
    def test_qr_mismatch_raises(self):
        p = YParams(1, 1, 0, 1, 2, 5)
        with pytest.raises(QRMismatchError):
            y_closed_special(p, YState(1, 1), 1)

    def test_worked_example(self):
        p = YParams(3, 3, 0, 1, 2, 4)
        closed = y_closed_special(p, YState(-2, 1), 1)
        assert state_residual(closed.state, YState(12, 36)) <= 1e-12

    def test_agrees_with_general(self):
        rng = random.Random("ysystem:special")
        checked = 0
        for _ in range(50):
            k = rng.choice([-2, -1, 1, 2])
            p = YParams(
                draw_complex(rng), draw_complex(rng), draw_complex(rng),
                k, 2 * k, 2 * (1 + k),
            )
            y0 = YState(draw_complex(rng), draw_complex(rng))
            ell = rng.randint(0, 5)
            try:
                special = y_closed_special(p, y0, ell).state
                general = y_closed(p, y0, ell).state
            except NUMERIC_ERRORS:
                continue
            assert state_residual(special, general) <= 1e-9
            checked += 1
        assert checked >= 25

    def test_equal_ratio_limit(self):
        # alpha = beta: the accumulator grows linearly in ell.
        alpha = 1.5 - 0.5j
        gamma = 0.25 + 1j
        p = YParams(alpha, alpha, gamma, 1, 2, 4)
        y0 = YState(0.7 + 0.2j, -0.3 + 0.9j)
        for ell in range(5):
            closed = y_closed_special(p, y0, ell)
            want = y0.y2 + gamma * y0.y1 * y0.y1 * ell / (alpha * alpha)
            assert residual(closed.Y2, want) <= 1e-12

    def test_beta_zero_supported(self):
        # beta = 0 has no unscaled accumulator but the state is well defined.
        p = YParams(2, 0, 1, 1, 2, 4)
        y0 = YState(1 + 1j, 2 - 1j)
        for ell in range(4):
            closed = y_closed_special(p, y0, ell).state
            iterated = y_iterate(p, y0, ell)
            assert state_residual(closed, iterated) <= 1e-12


class TestExponentIntegrality:
    def test_divisibility_identities(self):
        # Exact integers, no floats anywhere.
        for k in range(-5, 6):
            if k == 0:
                continue
            for ell in range(0, 9):
                growth = (1 + k) ** ell
                assert (growth - 1) % k == 0
                assert (growth - k * ell - 1) % (k * k) == 0
