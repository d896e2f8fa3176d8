"""Command-line front end: iterate orbits, evaluate closed-form solutions,
run verification suites, and export data.

Exit codes: 0 success, 2 configuration/usage error, 3 numeric error (the
message names the failing step).  Complex values are accepted as plain
numbers, ``re+imi`` literals, or ``[re, im]`` arrays, and always emitted in
the canonical ``[re, im]`` form (CSV splits them into ``_re``/``_im``
columns).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from typing import Callable, Sequence, TextIO

from .errors import (
    ConfigError,
    NumericError,
    SolvmapsError,
)
from .numeric import MINUS, PLUS, ComplexPair, Sign, complex_from_obj, complex_to_list
from .polybridge import DistinctZeroPair
from .solver import (
    BranchSolution,
    solve_conjugated,
    solve_cubic_family,
    solve_generalized,
    solve_quadratic_family,
    solve_sqrt_cubic,
    solve_sqrt_quadratic,
)
from .stepmaps import (
    CubicFamilyParams,
    GeneralizedParams,
    LinearChange,
    QuadraticFamilyParams,
    SqrtSystemParams,
    step_conjugated,
    step_cubic_family,
    step_generalized,
    step_quadratic_family,
    step_sqrt_cubic,
    step_sqrt_quadratic,
)
from .verify import SUITE_NAMES, run_verify
from .ysystem import YParams, YState, y_closed, y_step

SEED_ENV_VAR = "SOLVMAPS_SEED"

_INT_PARAMS = {"k", "q", "r"}


@dataclass(frozen=True)
class SystemSpec:
    param_names: tuple[str, ...]
    build: Callable[[dict], object]
    step: Callable[[object, Sign, ComplexPair, int], ComplexPair] | None
    solve: Callable[[object, ComplexPair, int], BranchSolution] | None


def _build_y(params: dict) -> YParams:
    return YParams(
        params["alpha"], params["beta"], params["gamma"],
        params["k"], params["q"], params["r"],
    )


def _build_conjugated(params: dict) -> tuple[LinearChange, CubicFamilyParams]:
    return (
        LinearChange(params["A11"], params["A12"], params["A21"], params["A22"]),
        CubicFamilyParams(params["a"], params["b"], params["k"]),
    )


_SYSTEMS: dict[str, SystemSpec] = {
    "y": SystemSpec(
        ("alpha", "beta", "gamma", "k", "q", "r"),
        _build_y,
        None,
        None,
    ),
    "quad-family": SystemSpec(
        ("a", "b", "k"),
        lambda d: QuadraticFamilyParams(d["a"], d["b"], d["k"]),
        lambda p, s, x, ell: step_quadratic_family(p, s, x, step=ell),
        solve_quadratic_family,
    ),
    "cubic-family": SystemSpec(
        ("a", "b", "k"),
        lambda d: CubicFamilyParams(d["a"], d["b"], d["k"]),
        lambda p, s, x, ell: step_cubic_family(p, s, DistinctZeroPair(*x), step=ell),
        lambda p, x0, n: solve_cubic_family(p, DistinctZeroPair(*x0), n),
    ),
    "generalized": SystemSpec(
        ("alpha", "beta", "B1", "B2", "C1", "C2", "C3", "k"),
        lambda d: GeneralizedParams(
            d["alpha"], d["beta"], d["B1"], d["B2"], d["C1"], d["C2"], d["C3"], d["k"]
        ),
        lambda p, s, x, ell: step_generalized(p, s, x, step=ell),
        solve_generalized,
    ),
    "sqrt-quad": SystemSpec(
        ("alpha", "beta", "gamma", "k", "q", "r"),
        lambda d: SqrtSystemParams(d["alpha"], d["beta"], d["gamma"], d["k"], d["q"], d["r"]),
        lambda p, s, x, ell: step_sqrt_quadratic(p, s, x, step=ell),
        solve_sqrt_quadratic,
    ),
    "sqrt-cubic": SystemSpec(
        ("alpha", "beta", "gamma", "k", "q", "r"),
        lambda d: SqrtSystemParams(d["alpha"], d["beta"], d["gamma"], d["k"], d["q"], d["r"]),
        lambda p, s, x, ell: step_sqrt_cubic(p, s, DistinctZeroPair(*x), step=ell),
        lambda p, x0, n: solve_sqrt_cubic(p, DistinctZeroPair(*x0), n),
    ),
    "conjugated": SystemSpec(
        ("a", "b", "k", "A11", "A12", "A21", "A22"),
        _build_conjugated,
        lambda p, s, x, ell: step_conjugated(p[0], p[1], s, x, step=ell),
        lambda p, x0, n: solve_conjugated(p[0], p[1], x0, n),
    ),
}


def _parse_params(system: str, raw: str | None) -> dict:
    spec = _SYSTEMS[system]
    if raw is None:
        raise ConfigError(f"--params is required for system {system!r}")
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"--params is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ConfigError("--params must be a JSON object")
    missing = [name for name in spec.param_names if name not in obj]
    if missing:
        raise ConfigError(f"missing parameters for {system!r}: {', '.join(missing)}")
    params: dict = {}
    for name in spec.param_names:
        value = obj[name]
        if name in _INT_PARAMS:
            if not isinstance(value, int) or isinstance(value, bool):
                raise ConfigError(f"parameter {name!r} must be an integer")
            params[name] = value
        else:
            try:
                params[name] = complex_from_obj(value)
            except ValueError as exc:
                raise ConfigError(f"parameter {name!r}: {exc}") from exc
    return params


def _parse_state(raw: str | None) -> ComplexPair:
    if raw is None:
        raise ConfigError("--x0 is required")
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError:
        obj = [part for part in raw.split(";")]
    if not isinstance(obj, list) or len(obj) != 2:
        raise ConfigError("--x0 must be a two-element list, e.g. '[[1,0],[0,0]]' or '[1, 2]'")
    try:
        return (complex_from_obj(obj[0]), complex_from_obj(obj[1]))
    except ValueError as exc:
        raise ConfigError(f"--x0: {exc}") from exc


def _parse_signs(raw: str | None, steps: int) -> list[Sign]:
    if raw is None:
        return [PLUS] * steps
    signs: list[Sign] = []
    for ch in raw:
        if ch == "+":
            signs.append(PLUS)
        elif ch == "-":
            signs.append(MINUS)
        else:
            raise ConfigError(f"--signs may contain only '+' and '-', got {ch!r}")
    if len(signs) != steps:
        raise ConfigError(f"--signs length {len(signs)} does not match --steps {steps}")
    return signs


def _resolve_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ConfigError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from exc
    return 42


class _Writer:
    """Row sink for csv or jsonl output."""

    def __init__(self, stream: TextIO, fmt: str, columns: Sequence[str]):
        self.fmt = fmt
        self.columns = list(columns)
        self.stream = stream
        if fmt == "csv":
            self._csv = csv.writer(stream)
            self._csv.writerow(self.columns)

    def row(self, values: Sequence[object]) -> None:
        if self.fmt == "csv":
            self._csv.writerow([self._cell(v) for v in values])
        else:
            self.stream.write(json.dumps(dict(zip(self.columns, values))) + "\n")

    @staticmethod
    def _cell(value: object) -> object:
        if isinstance(value, float):
            return f"{value:.17g}"
        return value


def _state_columns(system: str, with_y: bool) -> list[str]:
    if system == "y":
        return ["ell", "y1_re", "y1_im", "y2_re", "y2_im"]
    cols = ["ell", "branch", "x1_re", "x1_im", "x2_re", "x2_im"]
    if with_y:
        cols += ["y1_re", "y1_im", "y2_re", "y2_im"]
    return cols


def _flatten(pair: ComplexPair) -> list[float]:
    return complex_to_list(pair[0]) + complex_to_list(pair[1])


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", newline=""), True


def cmd_iterate(args: argparse.Namespace) -> int:
    spec = _SYSTEMS[args.system]
    params = spec.build(_parse_params(args.system, args.params))
    state = _parse_state(args.x0)
    signs = _parse_signs(args.signs, args.steps)

    stream, close = _open_out(args.out)
    try:
        if args.system == "y":
            if args.signs is not None:
                raise ConfigError("the y system takes no per-step signs")
            writer = _Writer(stream, args.format, _state_columns("y", with_y=False))
            y = YState(*state)
            writer.row([0, *_flatten((y.y1, y.y2))])
            for ell in range(args.steps):
                y = y_step(params, y, step=ell)
                writer.row([ell + 1, *_flatten((y.y1, y.y2))])
        else:
            writer = _Writer(stream, args.format, _state_columns(args.system, with_y=False))
            writer.row([0, "", *_flatten(state)])
            prefix = ""
            for ell, s in enumerate(signs):
                state = tuple(spec.step(params, s, state, ell))
                prefix += "+" if s == PLUS else "-"
                writer.row([ell + 1, prefix, *_flatten(state)])
    finally:
        if close:
            stream.close()
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    spec = _SYSTEMS[args.system]
    params = spec.build(_parse_params(args.system, args.params))
    state = _parse_state(args.x0)

    stream, close = _open_out(args.out)
    try:
        if args.system == "y":
            writer = _Writer(stream, args.format, _state_columns("y", with_y=False))
            y0 = YState(*state)
            for ell in range(args.steps + 1):
                y = y_closed(params, y0, ell).state
                writer.row([ell, *_flatten((y.y1, y.y2))])
            return 0
        if spec.solve is None:
            raise ConfigError(f"system {args.system!r} has no closed-form solver")
        solution = spec.solve(params, state, args.steps)
        writer = _Writer(stream, args.format, _state_columns(args.system, with_y=True))
        for entry in solution.entries:
            yflat = _flatten((entry.y.y1, entry.y.y2))
            writer.row([entry.ell, "+", *_flatten(entry.plus), *yflat])
            writer.row([entry.ell, "-", *_flatten(entry.minus), *yflat])
        if solution.overflow_at is not None:
            print(
                f"error: closed-form evaluation overflowed at step {solution.overflow_at}; "
                "output truncated",
                file=sys.stderr,
            )
            return 3
    finally:
        if close:
            stream.close()
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    suites = None
    if args.suites is not None:
        suites = [name.strip() for name in args.suites.split(",") if name.strip()]
    report = run_verify(seed=_resolve_seed(args.seed), suites=suites)
    if args.out is not None and args.out != "-":
        with open(args.out, "w") as handle:
            handle.write(report.to_json() + "\n")
    else:
        print(report.to_json())
    print(report.summary(), file=sys.stderr)
    return 0 if report.passed else 1


def _add_run_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--system", required=True, choices=sorted(_SYSTEMS), help="system family to run"
    )
    parser.add_argument("--params", help="JSON object of named parameters")
    parser.add_argument("--x0", help="initial state: two complex literals, e.g. '[[1,0],[0,0]]'")
    parser.add_argument("--steps", type=int, default=1, help="number of discrete-time steps")
    parser.add_argument("--signs", help="per-step sign string over '+-' (default: all '+')")
    parser.add_argument("--tol-rel", type=float, default=1e-9)
    parser.add_argument("--tol-abs", type=float, default=1e-12)
    parser.add_argument("--out", help="output path (default: stdout)")
    parser.add_argument("--format", choices=("csv", "jsonl"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solvmaps",
        description="Iterate, solve in closed form, and verify solvable discrete-time systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_iterate = sub.add_parser("iterate", help="iterate a step map along a sign sequence")
    _add_run_arguments(p_iterate)
    p_iterate.set_defaults(func=cmd_iterate)

    p_solve = sub.add_parser("solve", help="evaluate the closed-form branch solution")
    _add_run_arguments(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument(
        "--suites", help=f"comma-separated suite names (default all: {', '.join(SUITE_NAMES)})"
    )
    p_verify.add_argument("--seed", type=int, help=f"PRNG seed (fallback: ${SEED_ENV_VAR}, then 42)")
    p_verify.add_argument("--out", help="write the JSON report to this path (default: stdout)")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SolvmapsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
