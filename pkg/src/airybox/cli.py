"""Command-line front end: tables of eigenvalues, wavefunctions and wall forces.

Exit codes: 0 success, 2 bad arguments, 3 solver failure, 4 validation failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass, field

import numpy as np

from . import airy_solver as solver
from .fd_solver import DEFAULT_N, MIN_N, FDConvergenceError, fd_spectrum
from .quadrature import DEFAULT_ORDER, MAX_ORDER, MIN_ORDER
from .specfun import AiryDomainError

EXIT_OK, EXIT_ARGS, EXIT_SOLVER, EXIT_VALIDATION = 0, 2, 3, 4
COMMANDS = ("eigen", "wavefunction", "forces", "validate", "sweep")
GAUSS_ORDER_ENV = "AIRYBOX_GAUSS_ORDER"

VALIDATE_BETA_TOL = 5e-4
VALIDATE_BETA_KMAX = 4
VALIDATE_J_TOL = 1e-9


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    alpha: float = 0.0
    alphas: list[float] = field(default_factory=list)
    count: int = 10
    k: int = 1
    points: int = 201
    grid_n: int = DEFAULT_N
    format: str = "csv"
    output_path: str | None = None  # None means standard output

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}")
        alphas = self.alphas if self.command == "sweep" else [self.alpha]
        if self.command == "sweep" and not alphas:
            raise ConfigError("--alphas must list at least one value")
        for a in alphas:
            if not math.isfinite(a) or a < 0.0 or a > solver.ALPHA_MAX:
                raise ConfigError(f"alpha must lie in [0, {solver.ALPHA_MAX}], got {a}")
        if self.command == "validate" and self.alpha <= 0.0:
            raise ConfigError("validate needs alpha > 0")
        if self.count < 1:
            raise ConfigError("--count must be >= 1")
        if self.command == "wavefunction":
            if self.k < 1:
                raise ConfigError("--k must be >= 1")
            if self.points < 2:
                raise ConfigError("--points must be >= 2")
        if self.command == "validate":
            if self.grid_n < MIN_N:
                raise ConfigError(f"--grid must be >= {MIN_N}")
            if self.count >= self.grid_n - 1:
                raise ConfigError("--count must be smaller than --grid - 1")


@dataclass
class Table:
    columns: list[str]
    rows: list[list]


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return format(float(value), ".15g")


def _json_value(value):
    if value is None:
        return None
    if isinstance(value, (int, np.integer)):
        return int(value)
    # round-trip through the CSV text so both formats carry identical numbers
    return float(_fmt(value))


def render(table: Table, fmt: str, command: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([_fmt(v) for v in row])
        return buf.getvalue()
    doc = {
        "command": command,
        "columns": table.columns,
        "rows": [{c: _json_value(v) for c, v in zip(table.columns, row)} for row in table.rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".airybox-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def gauss_order_from_env() -> int:
    raw = os.environ.get(GAUSS_ORDER_ENV)
    if raw is None or raw == "":
        return DEFAULT_ORDER
    try:
        order = int(raw)
    except ValueError:
        raise ConfigError(f"{GAUSS_ORDER_ENV} must be an integer, got {raw!r}") from None
    if not MIN_ORDER <= order <= MAX_ORDER:
        raise ConfigError(f"{GAUSS_ORDER_ENV} must lie in [{MIN_ORDER}, {MAX_ORDER}]")
    return order


def cmd_eigen(cfg: RunConfig) -> Table:
    problem = solver.FieldProblem(cfg.alpha)
    rows = []
    for s in solver.eigenvalues(problem, cfg.count):
        rows.append([s.k, s.beta, s.eta_hat, s.eta_bar, s.w, s.j_norm,
                     None if s.zero_field else abs(s.residual)])
    return Table(["k", "beta", "eta_hat", "eta_bar", "w", "J", "residual"], rows)


def cmd_wavefunction(cfg: RunConfig) -> Table:
    problem = solver.FieldProblem(cfg.alpha)
    state = solver.eigenvalues(problem, cfg.k)[cfg.k - 1]
    xis = np.linspace(-1.0, 1.0, cfg.points)
    rows = [[float(x), solver.eigenfunction(state, problem, float(x))] for x in xis]
    return Table(["xi", "psi"], rows)


def _force_rows(problem: solver.FieldProblem, count: int):
    return [solver.boundary_forces(s, problem) for s in solver.eigenvalues(problem, count)]


def cmd_forces(cfg: RunConfig) -> Table:
    rows = [[fb.k, fb.beta, fb.force_left_half, fb.force_right_half, fb.difference_half]
            for fb in _force_rows(solver.FieldProblem(cfg.alpha), cfg.count)]
    return Table(["k", "beta", "force_left_half", "force_right_half", "difference_half"], rows)


def cmd_validate(cfg: RunConfig) -> tuple[Table, list[list]]:
    """Analytic vs finite-difference eigenvalues, and quadrature vs closed-form J.

    Returns the table and the rows that break a tolerance.
    """
    order = gauss_order_from_env()
    problem = solver.FieldProblem(cfg.alpha)
    states = solver.eigenvalues(problem, cfg.count)
    spectrum = fd_spectrum(cfg.alpha, cfg.grid_n, cfg.count)
    rows, bad = [], []
    for s, beta_fd in zip(states, spectrum.eigenvalues):
        j_quad = solver.j_quadrature(s, order)
        j_an = solver.j_analytic(s)
        abs_diff = abs(s.beta - beta_fd)
        rel_diff = abs(j_quad - j_an) / j_an
        row = [s.k, s.beta, beta_fd, abs_diff, j_quad, j_an, rel_diff]
        rows.append(row)
        if (s.k <= VALIDATE_BETA_KMAX and not abs_diff < VALIDATE_BETA_TOL) or not rel_diff < VALIDATE_J_TOL:
            bad.append(row)
    cols = ["k", "beta_analytic", "beta_fd", "abs_diff", "j_quad", "j_analytic", "rel_diff"]
    return Table(cols, rows), bad


def cmd_sweep(cfg: RunConfig) -> Table:
    rows = []
    for a in cfg.alphas:
        for fb in _force_rows(solver.FieldProblem(a), cfg.count):
            rows.append([a, fb.k, fb.beta, fb.force_left_half, fb.force_right_half])
    return Table(["alpha", "k", "beta", "force_left_half", "force_right_half"], rows)


def _alpha_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="airybox",
        description="Particle in a box with a uniform electric field: Airy-function eigenstates and wall forces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", dest="output_path", default=None,
                       help="write to this file (atomically) instead of stdout")

    p = sub.add_parser("eigen", help="eigenvalues and Airy parameters per state")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--count", type=int, default=10)
    common(p)

    p = sub.add_parser("wavefunction", help="normalised eigenfunction on a uniform grid")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--points", type=int, default=201)
    common(p)

    p = sub.add_parser("forces", help="halved wall forces per state")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--count", type=int, default=10)
    common(p)

    p = sub.add_parser("validate", help="cross-check against the finite-difference oracle")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--grid", dest="grid_n", type=int, default=DEFAULT_N)
    p.add_argument("--count", type=int, default=VALIDATE_BETA_KMAX)
    common(p)

    p = sub.add_parser("sweep", help="long-format wall forces for several field strengths")
    p.add_argument("--alphas", type=_alpha_list, required=True)
    p.add_argument("--count", type=int, default=10)
    common(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    try:
        cfg.validate()
        if cfg.command == "validate":
            gauss_order_from_env()
    except ConfigError as exc:
        print(f"airybox: error: {exc}", file=sys.stderr)
        return EXIT_ARGS

    bad: list[list] = []
    try:
        if cfg.command == "eigen":
            table = cmd_eigen(cfg)
        elif cfg.command == "wavefunction":
            table = cmd_wavefunction(cfg)
        elif cfg.command == "forces":
            table = cmd_forces(cfg)
        elif cfg.command == "validate":
            table, bad = cmd_validate(cfg)
        else:
            table = cmd_sweep(cfg)
    except (solver.EigenSearchError, FDConvergenceError, AiryDomainError) as exc:
        print(f"airybox: solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER

    write_output(render(table, cfg.format, cfg.command), cfg.output_path)
    if bad:
        for row in bad:
            print("airybox: tolerance violated: "
                  + ",".join(f"{c}={_fmt(v)}" for c, v in zip(table.columns, row)), file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
