"""Command-line interface.

Subcommands: ``wigner`` (phase-space grid of a matrix file), ``state``
(named state constructors), ``delta`` (correlation signatures),
``marginals`` (X-state marginal distributions), ``algorithm`` (parity
protocol simulation), ``fidelity`` (super-fidelity of two matrix files),
and ``validate`` (density-matrix diagnostics).

Exit codes: 0 on success, 1 on validation/data failure, 2 on usage
errors.  The environment variable DWIGNER_TOLERANCE overrides the
default validation tolerance of 1e-10.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .algorithm import run_parity_algorithm
from .fidelity import super_fidelity
from .generators import bloch_vector, wigner_su2, wigner_su4
from .io import GRID_FORMATS, emit_grid, parse_matrix, serialize_matrix
from .linalg import (
    DEFAULT_TOLERANCE,
    DensityMatrixError,
    hermiticity_defect,
    matrix_of,
    positivity_inequalities,
    validate_density,
)
from .states import bell, gisin, gisin_from_combinations, munro, peres_horodecki, werner
from .states import xstate_delta, xstate_from_matrix, xstate_marginals
from .twoqubit import delta_pair, fano_extract, wigner_pair

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Bad argument values detected after argparse (exit code 2)."""


def _tolerance() -> float:
    raw = os.environ.get("DWIGNER_TOLERANCE")
    if raw is None:
        return DEFAULT_TOLERANCE
    try:
        return float(raw)
    except ValueError as exc:
        raise UsageError(f"DWIGNER_TOLERANCE must be a number, got {raw!r}") from exc


def _report_error(message: str, json_errors: bool, kind: str) -> None:
    if json_errors:
        print(json.dumps({"error": message, "kind": kind}), file=sys.stderr)
    else:
        print(f"error: {message}", file=sys.stderr)


def _load_matrix(path: str) -> np.ndarray:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    return parse_matrix(text)


def _load_density(path: str, tol: float):
    matrix = _load_matrix(path)
    try:
        return validate_density(matrix, tol)
    except DensityMatrixError as exc:
        eigenvalues = np.linalg.eigvalsh((matrix + matrix.conj().T) / 2.0)
        detail = ", ".join(repr(float(v)) for v in eigenvalues)
        raise ValueError(f"{path}: {exc}; eigenvalues: [{detail}]") from exc


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _parse_params(spec: str, name: str) -> dict[str, str]:
    params = {}
    for item in spec.split(","):
        if "=" not in item:
            raise UsageError(f"malformed parameter {item!r} in state name {name!r}")
        key, value = item.split("=", 1)
        params[key.strip()] = value.strip()
    return params


def _float_param(params: dict[str, str], key: str, name: str) -> float:
    if key not in params:
        raise UsageError(f"state {name!r} requires parameter {key!r}")
    try:
        return float(params[key])
    except ValueError as exc:
        raise UsageError(f"parameter {key!r} of {name!r} must be a number") from exc


def named_state(name: str) -> np.ndarray:
    """Build a named four-level density matrix from a name:params string.

    Supported names: bell:phi+|phi-|psi+|psi-, werner:F=...,
    munro:g=..., ph:x=..., gisin:a=..,b=..,x=.. (or s=..,p=..,x=.. with
    s = a^2 - b^2 and p = a*b), and level:k for the pure level states.
    """
    kind, _, rest = name.partition(":")
    kind = kind.lower()
    try:
        if kind == "bell":
            return bell(rest)
        if kind == "werner":
            return werner(_float_param(_parse_params(rest, name), "F", name))
        if kind == "munro":
            return munro(_float_param(_parse_params(rest, name), "g", name)).matrix()
        if kind == "ph":
            return peres_horodecki(_float_param(_parse_params(rest, name), "x", name)).matrix()
        if kind == "gisin":
            params = _parse_params(rest, name)
            if "a" in params or "b" in params:
                return gisin(
                    _float_param(params, "a", name),
                    _float_param(params, "b", name),
                    _float_param(params, "x", name),
                ).matrix()
            return gisin_from_combinations(
                _float_param(params, "s", name),
                _float_param(params, "p", name),
                _float_param(params, "x", name),
            ).matrix()
        if kind == "level":
            level = int(rest)
            if not 0 <= level <= 3:
                raise UsageError(f"level must be 0..3, got {rest}")
            matrix = np.zeros((4, 4), dtype=complex)
            matrix[level, level] = 1.0
            return matrix
    except UsageError:
        raise
    except (ValueError, TypeError) as exc:
        raise UsageError(f"invalid state name {name!r}: {exc}") from exc
    raise UsageError(
        f"unknown state name {name!r}; expected bell:, werner:, munro:, ph:, gisin: or level:"
    )


def _grid_for_rep(rho, rep: str) -> np.ndarray:
    matrix = matrix_of(rho)
    if rep == "su2":
        if matrix.shape[0] != 2:
            raise UsageError(f"representation su2 needs a 2x2 matrix, got {matrix.shape[0]}x{matrix.shape[0]}")
        return wigner_su2(bloch_vector(matrix))
    if matrix.shape[0] != 4:
        raise UsageError(f"representation {rep} needs a 4x4 matrix, got {matrix.shape[0]}x{matrix.shape[0]}")
    if rep == "su4":
        return wigner_su4(matrix)
    if rep == "pair":
        return wigner_pair(fano_extract(matrix))
    raise UsageError(f"unknown representation {rep!r}")


def _cmd_wigner(args) -> int:
    rho = _load_density(args.input, _tolerance())
    grid = _grid_for_rep(rho, args.rep)
    _write_output(emit_grid(grid, args.format), args.output)
    return EXIT_OK


def _cmd_state(args) -> int:
    matrix = named_state(args.name)
    if args.emit == "matrix":
        _write_output(serialize_matrix(matrix) + "\n", args.output)
        return EXIT_OK
    grid = _grid_for_rep(matrix, args.rep)
    _write_output(emit_grid(grid, args.format), args.output)
    return EXIT_OK


def _cmd_delta(args) -> int:
    rho = _load_density(args.input, _tolerance())
    if args.rep == "pair":
        grid = delta_pair(fano_extract(matrix_of(rho)))
    else:
        grid = xstate_delta(xstate_from_matrix(matrix_of(rho)))
    _write_output(emit_grid(grid, args.format), args.output)
    return EXIT_OK


def _cmd_marginals(args) -> int:
    rho = _load_density(args.input, _tolerance())
    marginals = xstate_marginals(xstate_from_matrix(matrix_of(rho)))
    doc = {
        "mu": [float(v) for v in marginals.mu_marginal],
        "nu": [float(v) for v in marginals.nu_marginal],
    }
    _write_output(json.dumps(doc) + "\n", args.output)
    return EXIT_OK


def _cmd_algorithm(args) -> int:
    trace = run_parity_algorithm(pulse=args.pulse, noise=args.noise)
    if args.snapshots is not None:
        directory = Path(args.snapshots)
        directory.mkdir(parents=True, exist_ok=True)
        suffix = {"csv": "csv", "json": "json", "gnuplot": "dat"}[args.format]
        for position, step in enumerate(trace.steps):
            path = directory / f"step{position}_{step.label}.{suffix}"
            path.write_text(emit_grid(step.wigner, args.format), encoding="utf-8")
    print(
        f"level {trace.outcome_level}, parity {trace.parity}, "
        f"p={trace.outcome_probability:.3f}"
    )
    return EXIT_OK


def _cmd_fidelity(args) -> int:
    tol = _tolerance()
    rho = _load_density(args.a, tol)
    sigma = _load_density(args.b, tol)
    print(repr(super_fidelity(rho, sigma)))
    return EXIT_OK


def _cmd_validate(args) -> int:
    matrix = _load_matrix(args.input)
    hermitian_part = (matrix + matrix.conj().T) / 2.0
    eigenvalues = np.linalg.eigvalsh(hermitian_part)
    print("eigenvalues: [" + ", ".join(repr(float(v)) for v in eigenvalues) + "]")
    print(f"trace: {float(np.trace(matrix).real)!r}")
    print(f"hermiticity defect: {hermiticity_defect(matrix)!r}")
    if matrix.shape[0] == 4:
        report = positivity_inequalities(hermitian_part)
        print(f"tr(rho^2): {report.trace_sq!r}")
        print(f"tr(rho^3): {report.trace_cube!r}")
        print(f"tr(rho^4): {report.trace_fourth!r}")
        print(f"inequality 1 (tr2 <= 1): {'pass' if report.ineq1 else 'fail'}")
        print(f"inequality 2 (tr3 lower bound): {'pass' if report.ineq2 else 'fail'}")
        print(f"inequality 3 (tr4 upper bound): {'pass' if report.ineq3 else 'fail'}")
    try:
        validate_density(matrix, _tolerance())
    except DensityMatrixError as exc:
        print(f"verdict: invalid ({'; '.join(name for name, _ in exc.violations)})")
        return EXIT_INVALID
    print("verdict: valid density matrix")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dwigner",
        description="Discrete phase-space toolkit for qubit pairs and ququarts.",
    )
    parser.add_argument(
        "--json-errors",
        action="store_true",
        help="report errors as JSON objects on stderr",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", help="output file (default: stdout)")
        p.add_argument("--format", choices=GRID_FORMATS, default="csv", help="grid format")

    p = sub.add_parser("wigner", help="phase-space grid of a matrix file")
    p.add_argument("--input", required=True, help="JSON matrix file")
    p.add_argument("--rep", choices=("su2", "su4", "pair"), default="su4")
    add_output(p)
    p.set_defaults(func=_cmd_wigner)

    p = sub.add_parser("state", help="emit a named state as a matrix or a grid")
    p.add_argument("--name", required=True, help="e.g. bell:phi+, werner:F=0.5, level:1")
    p.add_argument("--emit", choices=("matrix", "wigner"), default="matrix")
    p.add_argument("--rep", choices=("su2", "su4", "pair"), default="su4")
    add_output(p)
    p.set_defaults(func=_cmd_state)

    p = sub.add_parser("delta", help="correlation signature of a matrix file")
    p.add_argument("--input", required=True)
    p.add_argument("--rep", choices=("pair", "xstate"), default="pair")
    add_output(p)
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("marginals", help="marginal distributions of an X-form matrix")
    p.add_argument("--input", required=True)
    p.add_argument("--output", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_marginals)

    p = sub.add_parser("algorithm", help="run the parity-determination protocol")
    p.add_argument("--pulse", type=int, choices=(2, 6), required=True)
    p.add_argument("--snapshots", help="directory for per-step grid files")
    p.add_argument("--noise", type=float, default=0.0, help="snapshot depolarizing weight")
    p.add_argument("--format", choices=GRID_FORMATS, default="csv")
    p.set_defaults(func=_cmd_algorithm)

    p = sub.add_parser("fidelity", help="super-fidelity of two matrix files")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=_cmd_fidelity)

    p = sub.add_parser("validate", help="density-matrix diagnostics for a matrix file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    json_errors = args.json_errors
    try:
        return args.func(args)
    except UsageError as exc:
        _report_error(str(exc), json_errors, "usage")
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        _report_error(str(exc), json_errors, "validation")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
