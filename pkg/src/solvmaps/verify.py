"""Brute-force oracles and property checks certifying the solvability claims.

The central oracle is exhaustive sign-sequence enumeration: expanding all
2**ell per-step sign choices, deduplicating states, and checking that the
reachable set per step collapses to at most two states that coincide with
the closed-form solver branches.  The remaining suites check the algebraic
identities (double-step, reductions between families, conjugation,
common-zero constraint, coefficient-bridge round-trips) on seeded random
draws, and the report records the printed-vs-corrected inversion-prefactor
discrepancy explicitly.

Reports are deterministic: the same seed and suite selection produce a
byte-identical JSON document.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import ConfigError, NumericOverflowError, ZeroToNegativePowerError
from .numeric import (
    DEDUPE_TOL,
    DEFAULT_TOL,
    MINUS,
    PLUS,
    SIGNS,
    ComplexPair,
    Tolerance,
    approx_eq,
    pair_eq_ordered,
    pair_eq_unordered,
)
from .polybridge import (
    DistinctZeroPair,
    cubic_from_zeros,
    cubic_zeros_branch,
    cubic_zeros_printed,
)
from .solver import (
    BranchSolution,
    solve_cubic_family,
    solve_quadratic_family,
)
from .stepmaps import (
    CubicFamilyParams,
    GeneralizedParams,
    K1CoeffTable,
    LinearChange,
    QuadraticFamilyParams,
    SqrtSystemParams,
    conda_residual,
    double_step_cubic,
    k1_coeff_table,
    step_conjugated,
    step_cubic_family,
    step_generalized,
    step_quadratic_family,
    step_sqrt_cubic,
    step_sqrt_quadratic,
    yz_forward,
    yz_invert,
)
from .ysystem import YParams, YState, y_closed, y_closed_special, y_iterate, y_step

_NUMERIC_ERRORS = (ZeroToNegativePowerError, NumericOverflowError)

#: Hard cap on exhaustive enumeration depth (2**ell sequences).
ENUMERATION_CAP = 10

#: Default sampling scale for random complex parameter components.
SAMPLING_SCALE = 1.25


@dataclass
class PropertyResult:
    name: str
    passed: bool
    max_residual: float
    tolerance: float
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    properties: list[PropertyResult] = field(default_factory=list)
    draws: int = 0
    skipped: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)


@dataclass
class VerifyReport:
    seed: int
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "passed": self.passed,
            "suites": [
                {
                    "name": s.name,
                    "passed": s.passed,
                    "draws": s.draws,
                    "skipped": s.skipped,
                    "notes": s.notes,
                    "properties": [
                        {
                            "name": p.name,
                            "passed": p.passed,
                            "max_residual": p.max_residual,
                            "tolerance": p.tolerance,
                            "detail": p.detail,
                        }
                        for p in s.properties
                    ],
                }
                for s in self.suites
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = [f"verify report (seed={self.seed})"]
        for s in self.suites:
            status = "PASS" if s.passed else "FAIL"
            lines.append(f"[{status}] suite {s.name} (draws={s.draws}, skipped={s.skipped})")
            for p in s.properties:
                pstatus = "PASS" if p.passed else "FAIL"
                line = f"  [{pstatus}] {p.name}: max residual {p.max_residual:.3e} (tol {p.tolerance:.1e})"
                if p.detail:
                    line += f" -- {p.detail}"
                lines.append(line)
            for note in s.notes:
                lines.append(f"  note: {note}")
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def _residual(got: complex, want: complex) -> float:
    """Normalized deviation: |got - want| / max(|got|, |want|, 1)."""
    return abs(got - want) / max(abs(got), abs(want), 1.0)


def _pair_residual(got: ComplexPair, want: ComplexPair) -> float:
    return max(_residual(got[0], want[0]), _residual(got[1], want[1]))


def _pair_residual_unordered(got: ComplexPair, want: ComplexPair) -> float:
    return min(
        _pair_residual(got, want),
        _pair_residual(got, (want[1], want[0])),
    )


def _draw_complex(rng: random.Random, scale: float = SAMPLING_SCALE) -> complex:
    return complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))


def _draw_pair(rng: random.Random, scale: float = SAMPLING_SCALE) -> ComplexPair:
    return (_draw_complex(rng, scale), _draw_complex(rng, scale))


def enumerate_sign_orbits(
    step: Callable[[int, ComplexPair], ComplexPair],
    x0: ComplexPair,
    ellmax: int,
    unordered: bool = False,
    tol: Tolerance = DEDUPE_TOL,
) -> tuple[list[list[ComplexPair]], int]:
    """Breadth-first expansion over all sign sequences with tolerance dedupe.

    Returns the per-step deduplicated state sets (index 0 holds the initial
    state) and the number of expansions that died with a numeric error.
    """
    if ellmax > ENUMERATION_CAP:
        raise ValueError(f"ellmax {ellmax} exceeds enumeration cap {ENUMERATION_CAP}")
    eq = pair_eq_unordered if unordered else pair_eq_ordered
    levels: list[list[ComplexPair]] = [[(complex(x0[0]), complex(x0[1]))]]
    failures = 0
    for _ in range(ellmax):
        frontier: list[ComplexPair] = []
        for state in levels[-1]:
            for s in SIGNS:
                try:
                    candidate = tuple(step(s, state))
                except _NUMERIC_ERRORS:
                    failures += 1
                    continue
                if not any(eq(candidate, seen, tol) for seen in frontier):
                    frontier.append(candidate)
        levels.append(frontier)
    return levels, failures


def _set_equal_residual(
    got: Sequence[ComplexPair], want: Sequence[ComplexPair], unordered: bool
) -> float:
    """Two-sided Hausdorff-style residual between small state sets."""
    dist = _pair_residual_unordered if unordered else _pair_residual
    worst = 0.0
    for a in got:
        worst = max(worst, min((dist(a, b) for b in want), default=float("inf")))
    for b in want:
        worst = max(worst, min((dist(a, b) for a in got), default=float("inf")))
    return worst


def check_branch_collapse(
    step: Callable[[int, ComplexPair], ComplexPair],
    solution: BranchSolution,
    x0: ComplexPair,
    ellmax: int,
    unordered: bool = False,
    tol: Tolerance = DEDUPE_TOL,
) -> tuple[float, int]:
    """Max residual of (cardinality <= 2) + (set equality with solver branches).

    Returns (residual, enumeration failures); a residual above the dedupe
    tolerance means either a third distinct state appeared or the enumerated
    and closed-form sets diverged.
    """
    levels, failures = enumerate_sign_orbits(step, x0, ellmax, unordered=unordered, tol=tol)
    dist = _pair_residual_unordered if unordered else _pair_residual
    worst = 0.0
    for ell, states in enumerate(levels):
        if ell >= len(solution.entries):
            break
        if len(states) > 2:
            return float("inf"), failures
        if not states:
            continue
        branches = list(solution.branch_set(ell))
        if unordered:
            # Indistinguishable zeros: the branch set is one unordered pair.
            branches = branches[:1]
        if ell == 0:
            # 2**0 sequences reach only the initial state; the contract there
            # is that one branch reproduces it, not set equality.
            worst = max(worst, min(dist(states[0], b) for b in branches))
        else:
            worst = max(worst, _set_equal_residual(states, branches, unordered))
    return worst, failures


def check_closed_vs_iterated(
    step: Callable[[int, ComplexPair], ComplexPair],
    solution: BranchSolution,
    x0: ComplexPair,
    ellmax: int,
    unordered: bool = False,
    tol: Tolerance = DEDUPE_TOL,
) -> tuple[float, int]:
    """Max residual of: every enumerated orbit state lies in the branch set."""
    levels, failures = enumerate_sign_orbits(step, x0, ellmax, unordered=unordered, tol=tol)
    dist = _pair_residual_unordered if unordered else _pair_residual
    worst = 0.0
    for ell, states in enumerate(levels):
        if ell >= len(solution.entries):
            break
        branches = solution.branch_set(ell)
        for state in states:
            worst = max(worst, min(dist(state, b) for b in branches))
    return worst, failures


def _skip_note(suite: SuiteResult) -> None:
    if suite.draws and suite.skipped > 0.2 * suite.draws:
        suite.notes.append(
            f"skipped {suite.skipped}/{suite.draws} draws; consider lowering the sampling scale"
        )


# --- suites -----------------------------------------------------------------


def _suite_y_closed(rng: random.Random) -> SuiteResult:
    suite = SuiteResult("y-closed")
    worst_general = 0.0
    worst_special = 0.0
    worst_semigroup = 0.0
    for _ in range(100):
        suite.draws += 1
        k = rng.choice([-2, -1, 1, 2])
        special = rng.random() < 0.5
        if special:
            q, r = 2 * k, 2 * (1 + k)
        else:
            q, r = rng.randint(-3, 4), rng.randint(-3, 4)
        p = YParams(_draw_complex(rng, 1.5), _draw_complex(rng, 1.5), _draw_complex(rng, 1.5), k, q, r)
        y0 = YState(_draw_complex(rng, 1.5), _draw_complex(rng, 1.5))
        ell = rng.randint(0, 6)
        try:
            closed = y_closed(p, y0, ell).state
            iterated = y_iterate(p, y0, ell)
            worst_general = max(
                worst_general, _residual(closed.y1, iterated.y1), _residual(closed.y2, iterated.y2)
            )
            if special:
                spec = y_closed_special(p, y0, ell).state
                worst_special = max(
                    worst_special, _residual(spec.y1, closed.y1), _residual(spec.y2, closed.y2)
                )
                a = rng.randint(0, ell)
                mid = y_closed_special(p, y0, a).state
                chained = y_closed_special(p, mid, ell - a).state
                worst_semigroup = max(
                    worst_semigroup, _residual(chained.y1, closed.y1), _residual(chained.y2, closed.y2)
                )
        except _NUMERIC_ERRORS:
            suite.skipped += 1
    tol = DEFAULT_TOL.rel
    suite.properties.append(
        PropertyResult("closed-form equals iteration", worst_general <= tol, worst_general, tol)
    )
    suite.properties.append(
        PropertyResult("special closed form equals general", worst_special <= tol, worst_special, tol)
    )
    suite.properties.append(
        PropertyResult("semigroup property", worst_semigroup <= tol, worst_semigroup, tol)
    )
    _skip_note(suite)
    return suite


def _suite_quad_family(rng: random.Random) -> SuiteResult:
    suite = SuiteResult("quad-family")
    worst_swap = 0.0
    worst_orbit = 0.0
    for _ in range(50):
        suite.draws += 1
        p = QuadraticFamilyParams(_draw_complex(rng), _draw_complex(rng), rng.choice([-1, 1, 2]))
        x0 = _draw_pair(rng)
        try:
            for s in SIGNS:
                a = step_quadratic_family(p, s, x0)
                b = step_quadratic_family(p, -s, x0)
                # Exact swap covariance, no tolerance.
                if (a[0], a[1]) != (b[1], b[0]):
                    worst_swap = max(worst_swap, _pair_residual(a, (b[1], b[0])))
            solution = solve_quadratic_family(p, x0, 5)
            step = lambda s, x: step_quadratic_family(p, s, x)
            res, _ = check_closed_vs_iterated(step, solution, x0, len(solution.entries) - 1, unordered=True)
            worst_orbit = max(worst_orbit, res)
        except _NUMERIC_ERRORS:
            suite.skipped += 1
    suite.properties.append(
        PropertyResult("sign flip swaps components exactly", worst_swap == 0.0, worst_swap, 0.0)
    )
    tol = 1e-8
    suite.properties.append(
        PropertyResult("orbits match closed-form unordered pair", worst_orbit <= tol, worst_orbit, tol)
    )
    _skip_note(suite)
    return suite


def _suite_cubic_collapse(rng: random.Random) -> SuiteResult:
    suite = SuiteResult("cubic-collapse")
    worst = 0.0
    for _ in range(25):
        suite.draws += 1
        p = CubicFamilyParams(_draw_complex(rng), _draw_complex(rng), rng.choice([-1, 1, 2]))
        x0 = _draw_pair(rng)
        try:
            solution = solve_cubic_family(p, DistinctZeroPair(*x0), 5)
            step = lambda s, x: step_cubic_family(p, s, DistinctZeroPair(*x))
            res, _ = check_branch_collapse(step, solution, x0, len(solution.entries) - 1)
            worst = max(worst, res)
        except _NUMERIC_ERRORS:
            suite.skipped += 1
    tol = 1e-8
    suite.properties.append(
        PropertyResult("2**ell orbits collapse to solver branch pair", worst <= tol, worst, tol)
    )

    # Worked instance: a = b = k = 1, x0 = (1, 0) -> step-1 set {(-6,0), (-2,-8)}.
    p = CubicFamilyParams(1, 1, 1)
    solution = solve_cubic_family(p, DistinctZeroPair(1, 0), 1)
    want = [(-6 + 0j, 0j), (-2 + 0j, -8 + 0j)]
    res = _set_equal_residual(list(solution.branch_set(1)), want, unordered=False)
    suite.properties.append(
        PropertyResult("worked instance branch set", res <= 1e-12, res, 1e-12)
    )
    _skip_note(suite)
    return suite


def _suite_double_step(rng: random.Random) -> SuiteResult:
    suite = SuiteResult("double-step")
    worst = 0.0
    for _ in range(50):
        suite.draws += 1
        p = CubicFamilyParams(_draw_complex(rng), _draw_complex(rng), rng.choice([-1, 1, 2]))
        x0 = DistinctZeroPair(*_draw_pair(rng))
        try:
            for s0 in SIGNS:
                for s1 in SIGNS:
                    two = step_cubic_family(p, s1, step_cubic_family(p, s0, x0))
                    direct = double_step_cubic(p, s0 * s1, x0)
                    worst = max(worst, _pair_residual(direct, two))
        except _NUMERIC_ERRORS:
            suite.skipped += 1
    tol = DEFAULT_TOL.rel
    suite.properties.append(
        PropertyResult("double-step formula equals two steps", worst <= tol, worst, tol)
    )

    # Hand instance: a = b = k = 1, x0 = (1, 0), sign product + -> (-216, 0).
    direct = double_step_cubic(CubicFamilyParams(1, 1, 1), PLUS, DistinctZeroPair(1, 0))
    res = _pair_residual(direct, (-216 + 0j, 0j))
    suite.properties.append(PropertyResult("hand instance (-216, 0)", res <= 1e-12, res, 1e-12))
    _skip_note(suite)
    return suite


def _suite_reductions(rng: random.Random) -> SuiteResult:
    suite = SuiteResult("reductions")
    worst_quad = 0.0
    worst_cubic = 0.0
    worst_general = 0.0
    tol = DEFAULT_TOL.rel
    for _ in range(50):
        suite.draws += 1
        a, b = _draw_complex(rng), _draw_complex(rng)
        k = rng.choice([-1, 1, 2])
        x0 = _draw_pair(rng)
        try:
            qp = QuadraticFamilyParams(a, b, k)
            sp = SqrtSystemParams(2 * a, 2 * b, a * a - b * b, k, 2 * k, 2 * (1 + k))
            for s in SIGNS:
                got = step_sqrt_quadratic(sp, s, x0)
                want_plus = step_quadratic_family(qp, PLUS, x0)
                worst_quad = max(worst_quad, _pair_residual_unordered(got, want_plus))

            cp = CubicFamilyParams(a, b, k)
            scp = SqrtSystemParams(3 * a, 3 * b, 3 * (a * a - b * b), k, 2 * k, 2 * (1 + k))
            x0d = DistinctZeroPair(*x0)
            branch_want = [step_cubic_family(cp, s, x0d) for s in SIGNS]
            for s in SIGNS:
                got = step_sqrt_cubic(scp, s, x0d)
                worst_cubic = max(
                    worst_cubic, min(_pair_residual(got, w) for w in branch_want)
                )

            gp = GeneralizedParams(2 * a, 2 * b, -1, -1, 0, 0, 1, k)
            for s in SIGNS:
                got = step_generalized(gp, s, x0)
                worst_general = max(
                    worst_general,
                    min(_pair_residual(got, step_quadratic_family(qp, ss, x0)) for ss in SIGNS),
                )
        except _NUMERIC_ERRORS:
            suite.skipped += 1
    suite.properties.append(
        PropertyResult("sqrt-quadratic reduces to quadratic family", worst_quad <= tol, worst_quad, tol)
    )
    suite.properties.append(
        PropertyResult("sqrt-cubic reduces to cubic family", worst_cubic <= tol, worst_cubic, tol)
    )
    suite.properties.append(
        PropertyResult("generalized reduces to quadratic family", worst_general <= tol, worst_general, tol)
    )
    _skip_note(suite)
    return suite


def _suite_conda(rng: random.Random) -> SuiteResult:
    suite = SuiteResult("conda")
    worst = 0.0
    for _ in range(100):
        suite.draws += 1
        try:
            A = LinearChange(*(_draw_complex(rng) for _ in range(4)))
        except Exception:
            suite.skipped += 1
            continue
        p = CubicFamilyParams(_draw_complex(rng), _draw_complex(rng), 1)
        table = k1_coeff_table(A, p, rng.choice(SIGNS))
        scale = max(abs(c) for c in table.rows[0] + table.rows[1])
        bound = max(scale, 1e-6) ** 4
        worst = max(worst, abs(conda_residual(table)) / bound)
    tol = 1e-9
    suite.properties.append(
        PropertyResult("common-zero constraint residual vanishes", worst <= tol, worst, tol)
    )

    control = K1CoeffTable(1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0)
    res = abs(conda_residual(control) - 1)
    suite.properties.append(
        PropertyResult("positive control residual equals 1", res == 0.0, res, 0.0)
    )
    _skip_note(suite)
    return suite


def _suite_conjugation(rng: random.Random) -> SuiteResult:
    suite = SuiteResult("conjugation")
    worst_conj = 0.0
    worst_probe = 0.0
    tol = DEFAULT_TOL.rel
    for _ in range(100):
        suite.draws += 1
        try:
            A = LinearChange(*(_draw_complex(rng) for _ in range(4)))
        except Exception:
            suite.skipped += 1
            continue
        p = CubicFamilyParams(_draw_complex(rng), _draw_complex(rng), rng.choice([-1, 1, 2]))
        z = _draw_pair(rng)
        s = rng.choice(SIGNS)
        try:
            got = step_conjugated(A, p, s, z)
            want = A.apply(step_cubic_family(p, s, DistinctZeroPair(*A.invert(z))))
            worst_conj = max(worst_conj, _pair_residual(got, want))

            if p.k == 1:
                table = k1_coeff_table(A, p, s)
                for _probe in range(5):
                    w = _draw_pair(rng)
                    via_table = (
                        table.a11 * w[0] ** 2 + table.a12 * w[1] ** 2 + table.a13 * w[0] * w[1],
                        table.a21 * w[0] ** 2 + table.a22 * w[1] ** 2 + table.a23 * w[0] * w[1],
                    )
                    worst_probe = max(worst_probe, _pair_residual(via_table, step_conjugated(A, p, s, w)))
        except _NUMERIC_ERRORS:
            suite.skipped += 1
    suite.properties.append(
        PropertyResult("conjugation identity", worst_conj <= tol, worst_conj, tol)
    )
    suite.properties.append(
        PropertyResult("k=1 coefficient table matches map on probes", worst_probe <= tol, worst_probe, tol)
    )
    _skip_note(suite)
    return suite


def _suite_yz(rng: random.Random) -> SuiteResult:
    suite = SuiteResult("yz")
    worst_forward = 0.0
    worst_round = 0.0
    worst_sign = 0.0
    worst_g3 = 0.0
    tol = DEFAULT_TOL.rel
    for _ in range(100):
        suite.draws += 1
        try:
            gp = GeneralizedParams(
                _draw_complex(rng), _draw_complex(rng),
                _draw_complex(rng), _draw_complex(rng),
                _draw_complex(rng), _draw_complex(rng), _draw_complex(rng),
                rng.choice([-1, 1, 2]),
            )
        except (ValueError, TypeError):
            suite.skipped += 1
            continue
        z = _draw_pair(rng)
        y = yz_forward(gp, z)
        try:
            # Forward-inverse round trip on coefficients, both branches.
            for b in SIGNS:
                back = yz_forward(gp, yz_invert(gp, y, b))
                worst_forward = max(worst_forward, _residual(back.y1, y.y1), _residual(back.y2, y.y2))
            # Inverse-forward recovers z on one branch.
            worst_round = max(
                worst_round,
                min(_pair_residual(yz_invert(gp, y, b), z) for b in SIGNS),
            )
            # The coefficient image of the step is sign-independent and y-steps.
            images = [yz_forward(gp, step_generalized(gp, s, z)) for s in SIGNS]
            worst_sign = max(
                worst_sign,
                _residual(images[0].y1, images[1].y1),
                _residual(images[0].y2, images[1].y2),
            )
            stepped = y_step(gp.y_params(), y)
            worst_sign = max(
                worst_sign, _residual(images[0].y1, stepped.y1), _residual(images[0].y2, stepped.y2)
            )
        except _NUMERIC_ERRORS:
            suite.skipped += 1
            continue
        worst_g3 = max(worst_g3, abs(gp.g3 + gp.g1))
    suite.properties.append(
        PropertyResult("yz forward/inverse round trip", worst_forward <= tol, worst_forward, tol)
    )
    suite.properties.append(
        PropertyResult("inverse recovers state on one branch", worst_round <= tol, worst_round, tol)
    )
    suite.properties.append(
        PropertyResult("coefficient image sign-independent and y-steps", worst_sign <= tol, worst_sign, tol)
    )
    suite.properties.append(PropertyResult("g3 = -g1 exactly", worst_g3 == 0.0, worst_g3, 0.0))
    _skip_note(suite)
    return suite


def _suite_prefactor(rng: random.Random) -> SuiteResult:
    """Demonstrates the printed 1/2 inversion prefactor is wrong and 1/3 right."""
    suite = SuiteResult("prefactor")
    y1, y2 = -2 + 0j, 1 + 0j
    corrected = 0.0
    printed = float("inf")
    for s in SIGNS:
        m = cubic_from_zeros(cubic_zeros_branch(y1, y2, s))
        corrected = max(corrected, _residual(m.y1, y1), _residual(m.y2, y2))
        mp = cubic_from_zeros(cubic_zeros_printed(y1, y2, s))
        printed = min(printed, max(_residual(mp.y1, y1), _residual(mp.y2, y2)))
    suite.properties.append(
        PropertyResult(
            "corrected 1/3 inversion round-trips",
            corrected < 1e-12,
            corrected,
            1e-12,
            detail=f"printed 1/2 variant residual {printed:.3e} (> 0.1 demonstrates the misprint)",
        )
    )
    suite.properties.append(
        PropertyResult(
            "printed 1/2 inversion fails round-trip",
            printed > 0.1,
            printed,
            0.1,
            detail="pass means the discrepancy is confirmed",
        )
    )
    return suite


_SUITES: dict[str, Callable[[random.Random], SuiteResult]] = {
    "y-closed": _suite_y_closed,
    "quad-family": _suite_quad_family,
    "cubic-collapse": _suite_cubic_collapse,
    "double-step": _suite_double_step,
    "reductions": _suite_reductions,
    "conda": _suite_conda,
    "conjugation": _suite_conjugation,
    "yz": _suite_yz,
    "prefactor": _suite_prefactor,
}

SUITE_NAMES = tuple(_SUITES)


def run_verify(seed: int = 42, suites: Iterable[str] | None = None) -> VerifyReport:
    """Run the selected suites (all by default) with a seeded PRNG."""
    names = list(suites) if suites is not None else list(SUITE_NAMES)
    unknown = [n for n in names if n not in _SUITES]
    if unknown:
        raise ConfigError(f"unknown verify suites: {', '.join(unknown)}; known: {', '.join(SUITE_NAMES)}")
    report = VerifyReport(seed=seed)
    for name in names:
        # Per-suite child seeds keep reports stable under suite selection.
        report.suites.append(_SUITES[name](random.Random(f"{seed}:{name}")))
    return report
