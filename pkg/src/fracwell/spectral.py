"""Energy formulas and the truncated-Taylor eigensolver for the fractional well.

An eigenfunction of definite parity is expanded as

    psi(x) = sum_m a_m x^(2m + par),   m = 0..N,

and the confined Riesz operator maps the basis monomials into power series
again. Writing ``p = 2m + par`` and ``n = 2i + par``, the coefficient of
``x^n`` in ``-D[x^p]`` sums (Chu-Vandermonde) to

    M[i, m] = -2 C(alpha) (1+alpha)_n / (n! (p - n - alpha)) * q^(p - n - alpha),

which is used directly; :mod:`fracwell.powerseries` rebuilds the same matrix
by binomial expansion as a cross-check. Energies solve ``M a = E a``.

Truncation at finite N leaves the rows above N unresolved, and the plain
truncated eigenproblem converges slowly from below. The default ``"tail"``
closure replaces the last row with the wall condition psi(q) = 0, where the
neglected coefficients are modelled on the wall behaviour
``(1 - x^2/q^2)^(alpha/2)``: their sum equals ``a_N * (2N/alpha - 1)``, so the last
boundary weight becomes ``(2N/alpha) q^(2N+par)``. ``"tau"`` uses the bare
condition and ``"none"`` keeps the plain truncated matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    AnchorDegenerate,
    DomainError,
    SpectrumOrderError,
    ToleranceNotMet,
)
from .powerseries import monomial_image
from .riesz import (
    QuadratureControl,
    TrigMode,
    check_order,
    check_well,
    confined_apply_trig,
    quadrature_oracle,
    riesz_prefactor,
)
from .specfun import DEFAULT_SERIES, SeriesControl, hyp1f2

PARITIES = ("even", "odd")
BOUNDARY_CLOSURES = ("tail", "tau", "none")
TRUST_FRACTION = 3  # levels <= N // TRUST_FRACTION
SUSPECT_THRESHOLD = 0.05
CONVERGENCE_STEP = 4
RESIDUAL_POINTS = 17
RESIDUAL_SPAN = 0.8  # residual grid covers |x| <= RESIDUAL_SPAN * q
_RESIDUAL_QUAD = QuadratureControl(abs_tol=1e-8, rel_tol=1e-8)
_LOOSE_QUAD = QuadratureControl(abs_tol=1e-5, rel_tol=1e-5)


def _parity_offset(parity: str) -> int:
    if parity not in PARITIES:
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")
    return 0 if parity == "even" else 1


@dataclass(frozen=True)
class ParitySeries:
    """``sum_m coeffs[m] x^(2m + par)`` on ``[-q, q]``."""

    parity: str
    coeffs: np.ndarray
    q: float

    def __post_init__(self) -> None:
        _parity_offset(self.parity)
        check_well(self.q)
        c = np.asarray(self.coeffs, dtype=float)
        if c.ndim != 1 or c.size < 1:
            raise DomainError("coefficients must be a non-empty vector")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def monomial_coeffs(self) -> np.ndarray:
        """Coefficients in the full monomial basis 1, x, x^2, ..."""
        par = _parity_offset(self.parity)
        full = np.zeros(2 * self.coeffs.size + par)
        full[par::2] = self.coeffs
        return full

    def __call__(self, x: float) -> float:
        return eval_series(self, x)


def eval_series(series: ParitySeries, x: float) -> float:
    """Horner evaluation in ``x^2``, times ``x`` for odd series."""
    if abs(x) > series.q * (1.0 + 1e-14):
        raise DomainError(f"series evaluated outside the well: |{x}| > {series.q}")
    x2 = x * x
    acc = 0.0
    for c in series.coeffs[::-1]:
        acc = acc * x2 + c
    return acc * x if series.parity == "odd" else acc


def _eval_many(series: ParitySeries, xs: np.ndarray) -> np.ndarray:
    x2 = xs * xs
    acc = np.zeros_like(xs)
    for c in series.coeffs[::-1]:
        acc = acc * x2 + c
    return acc * xs if series.parity == "odd" else acc


@dataclass(frozen=True)
class OperatorMatrix:
    parity: str
    entries: np.ndarray
    alpha: float
    q: float
    method: str = "closed"


@dataclass(frozen=True)
class EigenPair:
    level: int
    energy: float
    series: ParitySeries
    boundary_residual: float
    oracle_residual: float
    converged: bool = True
    reference_energy: float | None = None

    @property
    def parity(self) -> str:
        return self.series.parity


@dataclass(frozen=True)
class ApproxEnergy:
    """Approximate energy together with how it was obtained."""

    value: float
    route: str  # "closed-form", "anchor" (even k) or "classical" (alpha = 2)
    notes: tuple[str, ...] = field(default=())


def free_energy(k: float, alpha: float) -> float:
    """Free-particle spectrum ``|k|^alpha``."""
    alpha = check_order(alpha)
    return abs(k) ** alpha


def classical_energy(k: int, q: float) -> float:
    """Classical well levels ``(pi k / 2q)^2``."""
    q = check_well(q)
    if int(k) != k or k < 1:
        raise DomainError(f"level index must be a positive integer, got {k}")
    return (math.pi * k / (2.0 * q)) ** 2


def approx_energy_detail(
    k: int, alpha: float, q: float, ctl: SeriesControl = DEFAULT_SERIES
) -> ApproxEnergy:
    """Approximate energy from applying the operator to the classical mode.

    For odd k this is the value of ``-D cos(k pi x / 2q)`` at ``x = 0``, in closed
    form. For even k the sine mode is probed at ``x = q/k`` where it equals one.
    At ``alpha = 2`` the classical level is returned.
    """
    alpha = check_order(alpha)
    q = check_well(q)
    mode = TrigMode(k)
    if alpha == 2.0:
        return ApproxEnergy(classical_energy(k, q), "classical", ("alpha = 2: classical limit",))
    if k % 2 == 0:
        value = -confined_apply_trig(mode, alpha, q, q / k, ctl)
        return ApproxEnergy(value, "anchor", (f"even k evaluated at x = q/{k}",))
    kpi2 = (k * math.pi) ** 2
    f21 = hyp1f2(1.0 - 0.5 * alpha, 1.5, 2.0 - 0.5 * alpha, -kpi2 / 16.0, ctl)
    # cos(k pi / 2) vanishes for odd k; kept for fidelity with the general expression
    bracket = kpi2 / (2.0 - alpha) * f21 - 4.0 * math.cos(0.5 * k * math.pi)
    value = 0.5 * q**-alpha * math.gamma(alpha) * math.sin(0.5 * math.pi * alpha) / math.pi * bracket
    return ApproxEnergy(value, "closed-form")


def approx_energy(k: int, alpha: float, q: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    return approx_energy_detail(k, alpha, q, ctl).value


def build_operator_matrix(
    alpha: float, q: float, N: int, parity: str, method: str = "closed"
) -> OperatorMatrix:
    """Matrix of ``-D`` on the parity basis ``x^(2m+par)``, ``m = 0..N``.

    ``method="closed"`` uses the resummed coefficients; ``method="series"``
    expands every binomial term and is only usable for small N before
    cancellation triggers :class:`~fracwell.errors.SeriesOverflow`. At
    ``alpha = 2`` both give ``-d^2/dx^2``.
    """
    alpha = check_order(alpha)
    q = check_well(q)
    par = _parity_offset(parity)
    if int(N) != N or N < 2:
        raise DomainError(f"truncation order must be an integer >= 2, got {N}")
    if method not in ("closed", "series"):
        raise DomainError(f"unknown assembly method {method!r}")
    size = N + 1
    entries = np.zeros((size, size))
    if alpha == 2.0:
        for m in range(1, size):
            p = 2 * m + par
            entries[m - 1, m] = -p * (p - 1)
        return OperatorMatrix(parity, entries, alpha, q, method)

    c_alpha = riesz_prefactor(alpha)
    ns = 2 * np.arange(size) + par
    if method == "closed":
        log_u = np.array([math.lgamma(n + 1 + alpha) - math.lgamma(1 + alpha) - math.lgamma(n + 1) for n in ns])
        for j, p in enumerate(ns):
            expo = p - ns - alpha
            entries[:, j] = -2.0 * c_alpha * np.exp(log_u) / expo * q**expo
    else:
        order = int(ns[-1])
        for j, p in enumerate(ns):
            image = monomial_image(int(p), alpha, order)
            entries[:, j] = -c_alpha * image[par::2] * q ** (p - ns - alpha)
    if not np.all(np.isfinite(entries)):
        raise DomainError("operator matrix has non-finite entries")
    return OperatorMatrix(parity, entries, alpha, q, method)


def _boundary_weights(alpha: float, q: float, N: int, par: int, closure: str) -> np.ndarray:
    w = q ** (2.0 * np.arange(N + 1) + par)
    if closure == "tail":
        w[N] *= 2.0 * N / alpha
    return w


def _parity_spectrum(
    alpha: float, q: float, N: int, parity: str, closure: str
) -> tuple[np.ndarray, np.ndarray]:
    """Positive real eigenvalues (ascending) and coefficient vectors as columns."""
    par = _parity_offset(parity)
    A = build_operator_matrix(alpha, q, N, parity).entries
    if closure == "none":
        vals, vecs = np.linalg.eig(A)
    else:
        w = _boundary_weights(alpha, q, N, par, closure)
        reduced = A[:N, :N] - np.outer(A[:N, N], w[:N] / w[N])
        vals, sub = np.linalg.eig(reduced)
        last = -(w[:N] @ sub) / w[N]
        vecs = np.vstack([sub, last])
    keep = (np.abs(vals.imag) <= 1e-8 * np.abs(vals)) & (vals.real > 0)
    vals = vals.real[keep]
    vecs = vecs.real[:, keep]
    order = np.argsort(vals, kind="stable")
    return vals[order], vecs[:, order]


def _normalize(coeffs: np.ndarray, parity: str, q: float, normalization: str) -> ParitySeries:
    nz = np.flatnonzero(np.abs(coeffs) > 1e-14 * np.max(np.abs(coeffs)))
    if coeffs[nz[0]] < 0:
        coeffs = -coeffs
    series = ParitySeries(parity, coeffs, q)
    if normalization == "max":
        scale = np.max(np.abs(_eval_many(series, np.linspace(0.0, q, 2001))))
    elif normalization == "l2":
        poly = np.polynomial.Polynomial(series.monomial_coeffs())
        sq = (poly * poly).integ()
        scale = math.sqrt(sq(q) - sq(-q))
    else:
        raise DomainError(f"normalization must be 'max' or 'l2', got {normalization!r}")
    return ParitySeries(parity, coeffs / scale, q)


def pde_residual(series: ParitySeries, energy: float, alpha: float, points: int = RESIDUAL_POINTS) -> float:
    """Max of ``|-D psi - E psi| / (E max|psi|)`` over a grid covering 80% of the well.

    The operator is applied by the quadrature oracle to the zero-extended
    polynomial. Near the wall the truncated series is least accurate, which is
    why the outer fifth of the well is excluded.
    """
    q = series.q
    xs = np.linspace(-RESIDUAL_SPAN * q, RESIDUAL_SPAN * q, points)
    psi_max = float(np.max(np.abs(_eval_many(series, np.linspace(0.0, q, 2001)))))
    if alpha == 2.0:
        poly = np.polynomial.Polynomial(series.monomial_coeffs())
        d2 = poly.deriv(2)
        res = np.abs(-d2(xs) - energy * poly(xs))
    else:
        def apply(x: float) -> float:
            try:
                return quadrature_oracle(series, alpha, x, q, _RESIDUAL_QUAD)
            except ToleranceNotMet:
                # the residual is a diagnostic; a looser quadrature still bounds it
                return quadrature_oracle(series, alpha, x, q, _LOOSE_QUAD)

        res = np.array([abs(-apply(x) - energy * series(x)) for x in xs])
    return float(np.max(res) / (energy * psi_max))


def solve_well(
    alpha: float,
    q: float = 1.0,
    N: int = 20,
    levels: int = 5,
    *,
    boundary: str = "tail",
    normalization: str = "max",
    residuals: bool = True,
    check_convergence: bool = True,
) -> list[EigenPair]:
    """Lowest ``levels`` eigenpairs of the confined fractional well.

    Both parity blocks are solved, merged in ascending order, and checked to
    alternate even/odd starting with an even ground state. Each pair is
    normalized to ``max|psi| = 1`` (or unit L2 norm) with its first
    nonzero coefficient positive. With ``check_convergence`` the solve is
    repeated at ``N - 4`` and levels moving by more than 5% are flagged as not
    converged.

    Raises
    ------
    DomainError
        For ``levels > N // 3`` (the trusted part of the spectrum) or bad
        arguments.
    SpectrumOrderError
        If the merged levels do not alternate in parity.
    """
    alpha = check_order(alpha)
    q = check_well(q)
    if boundary not in BOUNDARY_CLOSURES:
        raise DomainError(f"boundary must be one of {BOUNDARY_CLOSURES}, got {boundary!r}")
    if int(N) != N or N < 2:
        raise DomainError(f"truncation order must be an integer >= 2, got {N}")
    if int(levels) != levels or levels < 1:
        raise DomainError(f"levels must be a positive integer, got {levels}")
    if levels > N // TRUST_FRACTION:
        raise DomainError(f"levels={levels} exceeds the trusted N//{TRUST_FRACTION} = {N // TRUST_FRACTION}")

    energies = _merged_levels(alpha, q, N, levels, boundary)
    reference = None
    if check_convergence and N - CONVERGENCE_STEP >= 2:
        try:
            reference = _merged_levels(alpha, q, N - CONVERGENCE_STEP, levels, boundary)
        except (SpectrumOrderError, DomainError):
            reference = None

    pairs = []
    for idx, (energy, parity, coeffs) in enumerate(energies):
        series = _normalize(coeffs, parity, q, normalization)
        ref = reference[idx][0] if reference is not None else None
        converged = bool(ref is not None and abs(energy - ref) <= SUSPECT_THRESHOLD * energy)
        if not check_convergence:
            converged = True
        pairs.append(
            EigenPair(
                level=idx + 1,
                energy=float(energy),
                series=series,
                boundary_residual=abs(eval_series(series, q)),
                oracle_residual=pde_residual(series, energy, alpha) if residuals else math.nan,
                converged=converged,
                reference_energy=None if ref is None else float(ref),
            )
        )
    return pairs


def _merged_levels(
    alpha: float, q: float, N: int, levels: int, boundary: str
) -> list[tuple[float, str, np.ndarray]]:
    merged = []
    for parity in PARITIES:
        vals, vecs = _parity_spectrum(alpha, q, N, parity, boundary)
        merged.extend((vals[i], parity, vecs[:, i]) for i in range(min(levels, vals.size)))
    merged.sort(key=lambda t: t[0])
    merged = merged[:levels]
    if len(merged) < levels:
        raise SpectrumOrderError(f"only {len(merged)} admissible eigenvalues found at N={N}")
    for idx, (_, parity, _) in enumerate(merged):
        if parity != PARITIES[idx % 2]:
            raise SpectrumOrderError(
                f"level {idx + 1} has parity {parity}; levels must alternate starting with even"
            )
    return merged


def pseudo_normalized_g(
    mode: TrigMode,
    alpha: float,
    q: float,
    xs: Sequence[float],
    ctl: SeriesControl = DEFAULT_SERIES,
) -> list[float]:
    """``-D f(x) / E`` with ``E`` fixed so that g equals one at the anchor.

    The anchor is ``x = 0`` for cosine modes and ``x = q/k`` for sine modes, the
    points where the mode itself equals one.
    """
    alpha = check_order(alpha)
    q = check_well(q)
    anchor = 0.0 if mode.parity == "even" else q / mode.k
    scale = -confined_apply_trig(mode, alpha, q, anchor, ctl)
    if abs(scale) < 1e-12:
        raise AnchorDegenerate(f"operator vanishes at the anchor x={anchor}")
    out = []
    for x in xs:
        if not abs(x) < q:
            raise DomainError(f"g_k is defined inside the well, got x={x}")
        out.append(-confined_apply_trig(mode, alpha, q, float(x), ctl) / scale)
    return out
