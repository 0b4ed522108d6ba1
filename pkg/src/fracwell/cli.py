"""Command-line front end: spectra, eigenfunctions and operator checks as CSV."""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import __version__
from .errors import DomainError, FracwellError, WindowExhausted
from .mlwell import DEFINITIONS, MlfEigenfunction, mlf_energies, mlf_first_zeros
from .riesz import TrigMode, check_order, check_well, confined_apply_trig, quadrature_oracle
from .spectral import (
    TRUST_FRACTION,
    approx_energy,
    eval_series,
    pseudo_normalized_g,
    solve_well,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_SUSPECT = 3

GK_ALPHAS = (0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0)
ORACLE_ALPHAS = (0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75)
ORACLE_KS = (1, 2, 3, 4)
ORACLE_XS = (0.0, 0.2, 0.5, 0.8)


@dataclass
class RunConfig:
    alpha: list[float] = field(default_factory=lambda: [1.0])
    q: float = 1.0
    N: int = 20
    levels: int = 5
    k: int = 1
    grid_points: int = 201
    output_path: str | None = None
    format: str = "csv"
    jobs: int = 1

    def validate(self) -> None:
        self.alpha = [check_order(a) for a in self.alpha]
        self.q = check_well(self.q)
        if self.N < 2:
            raise ConfigError(f"--N must be >= 2, got {self.N}")
        if self.levels < 1 or self.levels > self.N // TRUST_FRACTION:
            raise ConfigError(f"--levels must lie in 1..{self.N // TRUST_FRACTION} for N={self.N}")
        if self.k < 1:
            raise ConfigError(f"--k must be >= 1, got {self.k}")
        if self.grid_points < 3:
            raise ConfigError(f"--grid must be >= 3, got {self.grid_points}")
        if self.jobs < 1:
            raise ConfigError(f"--jobs must be >= 1, got {self.jobs}")


class ConfigError(ValueError):
    pass


def fmt(v: float) -> str:
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format(float(v) + 0.0, ".9g")  # + 0.0 folds -0.0 into 0


def _alpha_label(alphas: Sequence[float]) -> str:
    return ",".join(fmt(a) for a in alphas)


def provenance(cfg: RunConfig, alphas: Sequence[float] | None = None) -> str:
    alphas = cfg.alpha if alphas is None else alphas
    return f"# fracwell {__version__} alpha={_alpha_label(alphas)} q={fmt(cfg.q)} N={cfg.N}"


def _render(comment: str, header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    lines = [comment, ",".join(header)]
    lines.extend(",".join(c if isinstance(c, str) else fmt(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    # results come back in input order regardless of completion order
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _spectrum_cell(args: tuple[float, float, int, int]) -> list[tuple]:
    alpha, q, N, levels = args
    pairs = solve_well(alpha, q, N, levels, residuals=False)
    rows = []
    for p in pairs:
        k = p.level
        rows.append((alpha, k, p.energy, approx_energy(k, alpha, q), (k * math.pi / (2 * q)) ** alpha, p.converged))
    return rows


def cmd_spectrum(cfg: RunConfig) -> tuple[int, str]:
    cells = [(a, cfg.q, cfg.N, cfg.levels) for a in cfg.alpha]
    rows = [r for block in _map(_spectrum_cell, cells, cfg.jobs) for r in block]
    text = _render(
        provenance(cfg), ("alpha", "k", "E_numeric", "E_tilde", "E_free", "converged_flag"), rows
    )
    suspect = any(not r[5] for r in rows)
    return (EXIT_SUSPECT if suspect else EXIT_OK), text


def cmd_eigenfunction(cfg: RunConfig) -> tuple[int, str]:
    if cfg.k > cfg.levels:
        raise ConfigError(f"--k={cfg.k} exceeds --levels={cfg.levels}")
    xs = np.linspace(-cfg.q, cfg.q, cfg.grid_points)
    rows = []
    suspect = False
    for a in cfg.alpha:
        pair = solve_well(a, cfg.q, cfg.N, cfg.levels, residuals=False)[cfg.k - 1]
        suspect |= not pair.converged
        for x in xs:
            value = eval_series(pair.series, float(x))
            rows.append((a, x, value) if len(cfg.alpha) > 1 else (x, value))
    header = ("alpha", "x", "psi") if len(cfg.alpha) > 1 else ("x", "psi")
    return (EXIT_SUSPECT if suspect else EXIT_OK), _render(provenance(cfg), header, rows)


def cmd_gk(cfg: RunConfig, alphas: Sequence[float]) -> tuple[int, str]:
    xs = np.linspace(-cfg.q, cfg.q, cfg.grid_points)[1:-1]
    mode = TrigMode(cfg.k)
    rows = []
    for a in alphas:
        g = pseudo_normalized_g(mode, a, cfg.q, [float(x) for x in xs])
        rows.extend((a, x, v) for x, v in zip(xs, g))
    return EXIT_OK, _render(provenance(cfg, alphas), ("alpha", "x", "g"), rows)


def oracle_deviations(
    q: float = 1.0, alphas: Sequence[float] = ORACLE_ALPHAS, perturb: float = 0.0
) -> list[tuple[float, int, float, float, float, float]]:
    """Closed form against direct quadrature on the standard grid.

    ``perturb`` scales the closed form by ``1 + perturb``; a nonzero value is a
    self-test that the check can fail.
    """
    out = []
    for a in alphas:
        for k in ORACLE_KS:
            mode = TrigMode(k)
            for xf in ORACLE_XS:
                x = xf * q
                closed = confined_apply_trig(mode, a, q, x) * (1.0 + perturb)
                oracle = quadrature_oracle(lambda y, m=mode: m(y, q), a, x, q)
                out.append((a, k, x, closed, oracle, abs(closed - oracle)))
    return out


def cmd_oracle_check(cfg: RunConfig, tol: float, perturb: float, alphas: Sequence[float]) -> tuple[int, str]:
    devs = oracle_deviations(cfg.q, alphas, perturb)
    worst = max(d[5] for d in devs)
    rows = list(devs) + [("max", "", "", "", "", worst)]
    text = _render(
        provenance(cfg, alphas) + f" tol={fmt(tol)}",
        ("alpha", "k", "x", "closed_form", "oracle", "abs_dev"),
        rows,
    )
    return (EXIT_OK if worst <= tol else EXIT_CHECK_FAILED), text


def cmd_mlf_zeros(cfg: RunConfig, definitions: Sequence[str]) -> tuple[int, str]:
    """Zeros found inside the validated window; exit 3 when some form has fewer than requested."""
    rows = []
    short = False
    for a in cfg.alpha:
        for d in definitions:
            for parity in ("even", "odd"):
                fn = MlfEigenfunction(d, parity, a)
                try:
                    zeros = mlf_first_zeros(fn, cfg.levels)
                except WindowExhausted as exc:
                    zeros, short = exc.found, True
                for idx, (z, e) in enumerate(zip(zeros, mlf_energies(zeros, a, cfg.q)), start=1):
                    rows.append((a, d, parity, idx, z, e))
    header = ("alpha", "definition", "parity", "n", "zero", "energy")
    return (EXIT_SUSPECT if short else EXIT_OK), _render(provenance(cfg), header, rows)


def _alpha_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad alpha list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fracwell", description=__doc__)
    parser.add_argument("--version", action="version", version=f"fracwell {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, alpha_default: str | None = "1.0") -> None:
        p.add_argument("--alpha", type=_alpha_list, default=alpha_default, help="order or comma list")
        p.add_argument("--q", type=float, default=1.0, help="well half-width")
        p.add_argument("--N", type=int, default=20, help="Taylor truncation order")
        p.add_argument("--levels", type=int, default=5)
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--grid", type=int, default=201, help="grid points over [-q, q]")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("csv",), default="csv")
        p.add_argument("--jobs", type=int, default=1)

    common(sub.add_parser("spectrum", help="energy levels with approximate and free estimates"))
    common(sub.add_parser("eigenfunction", help="eigenfunction psi_k on a grid"))
    common(sub.add_parser("gk", help="pseudo-normalized operator image of a trig mode"), alpha_default=None)
    p = sub.add_parser("oracle-check", help="closed form against quadrature")
    common(p, alpha_default=None)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--perturb", type=float, default=0.0, help=argparse.SUPPRESS)
    p = sub.add_parser("mlf-zeros", help="zeros of the Mittag-Leffler eigenfunctions")
    common(p)
    p.add_argument("--definition", choices=(*DEFINITIONS, "both"), default="both")
    return parser


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str | None]:
    """Parse, validate and execute; returns exit code, CSV text and output path."""
    code, text, cfg = _dispatch(argv)
    return code, text, cfg.output_path


def _dispatch(argv: Sequence[str] | None) -> tuple[int, str, RunConfig]:
    args = build_parser().parse_args(argv)
    if args.alpha is None:
        args.alpha = list(ORACLE_ALPHAS if args.command == "oracle-check" else GK_ALPHAS)
    cfg = RunConfig(
        alpha=list(args.alpha),
        q=args.q,
        N=args.N,
        levels=args.levels,
        k=args.k,
        grid_points=args.grid,
        output_path=args.out,
        format=args.format,
        jobs=args.jobs,
    )
    cfg.validate()
    if args.command == "spectrum":
        return (*cmd_spectrum(cfg), cfg)
    if args.command == "eigenfunction":
        return (*cmd_eigenfunction(cfg), cfg)
    if args.command == "gk":
        return (*cmd_gk(cfg, cfg.alpha), cfg)
    if args.command == "oracle-check":
        if 2.0 in cfg.alpha:
            raise ConfigError("oracle-check needs alpha < 2")
        if not args.tol > 0:
            raise ConfigError(f"--tol must be positive, got {args.tol}")
        return (*cmd_oracle_check(cfg, args.tol, args.perturb, cfg.alpha), cfg)
    definitions = DEFINITIONS if args.definition == "both" else (args.definition,)
    return (*cmd_mlf_zeros(cfg, definitions), cfg)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        code, text, out = run(argv)
    except (ConfigError, DomainError) as exc:
        print(f"fracwell: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except FracwellError as exc:
        print(f"fracwell: computation failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    _emit(text, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
