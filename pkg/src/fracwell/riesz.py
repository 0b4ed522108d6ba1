"""Riesz fractional derivative on the full line and inside the infinite well.

For a wavefunction that vanishes outside ``[-q, q]`` the Riesz integral

    D f(x) = C(alpha) * int_0^inf [f(x+s) - 2 f(x) + f(x-s)] / s^(alpha+1) ds,
    C(alpha) = Gamma(1+alpha) sin(pi alpha / 2) / pi,

splits for ``0 <= x < q`` into three pieces::

    I1 = int_0^(q-x)     [f(x+s) - 2 f(x) + f(x-s)] / s^(alpha+1) ds
    I2 = int_(q-x)^(q+x) f(x-s) / s^(alpha+1) ds
    I3 = -2 f(x) int_(q-x)^inf s^(-alpha-1) ds = -2 f(x) (q-x)^(-alpha) / alpha

and for the well modes ``cos(k pi x / 2q)`` (k odd) and ``sin(k pi x / 2q)``
(k even) each piece has a closed form in terms of 1F2 and incomplete gamma
functions of imaginary argument. :func:`quadrature_oracle` evaluates the
defining integral directly and is the independent check on all of them.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Callable

from scipy import integrate

from .errors import ClassicalEndpoint, DomainError, ToleranceNotMet
from .specfun import DEFAULT_SERIES, SeriesControl, hyp1f2, log_gamma, upper_gamma


def check_order(alpha: float, *, classical_ok: bool = True) -> float:
    """Validate a fractional order; ``alpha = 2`` only when ``classical_ok``."""
    alpha = float(alpha)
    if not 0.0 < alpha <= 2.0 or not math.isfinite(alpha):
        raise DomainError(f"fractional order must satisfy 0 < alpha <= 2, got {alpha}")
    if alpha == 2.0 and not classical_ok:
        raise ClassicalEndpoint("alpha = 2 is the local limit; use the classical formulas")
    return alpha


def check_well(q: float) -> float:
    q = float(q)
    if not q > 0.0 or not math.isfinite(q):
        raise DomainError(f"well half-width must be positive, got {q}")
    return q


@dataclass(frozen=True)
class TrigMode:
    """Trigonometric well mode: ``cos(k pi x / 2q)`` for odd k, ``sin`` for even k."""

    k: int

    def __post_init__(self) -> None:
        if int(self.k) != self.k or self.k < 1:
            raise DomainError(f"mode index must be a positive integer, got {self.k}")

    @property
    def parity(self) -> str:
        return "even" if self.k % 2 else "odd"

    def wavenumber(self, q: float) -> float:
        return self.k * math.pi / (2.0 * q)

    def __call__(self, x: float, q: float) -> float:
        arg = self.wavenumber(q) * x
        return math.cos(arg) if self.k % 2 else math.sin(arg)


@dataclass(frozen=True)
class QuadratureControl:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-9
    max_subdivisions: int = 2000

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")


DEFAULT_QUADRATURE = QuadratureControl()


def riesz_prefactor(alpha: float) -> float:
    """Gamma(1+alpha) sin(pi alpha/2) / pi for 0 < alpha < 2."""
    alpha = check_order(alpha, classical_ok=False)
    return math.exp(log_gamma(1.0 + alpha)) * math.sin(0.5 * math.pi * alpha) / math.pi


def free_apply_trig(kind: str, alpha: float, wavenumber: float, x: float) -> float:
    """Full-line Riesz derivative of ``cos(k x)`` or ``sin(k x)``: ``-|k|^alpha f(x)``."""
    alpha = check_order(alpha)
    if kind == "cos":
        f = math.cos(wavenumber * x)
    elif kind == "sin":
        f = math.sin(wavenumber * x)
    else:
        raise DomainError(f"kind must be 'cos' or 'sin', got {kind!r}")
    return -abs(wavenumber) ** alpha * f


def _check_half_well(x: float, q: float) -> None:
    if not 0.0 <= x < q:
        raise DomainError(f"closed forms need 0 <= x < q, got x={x}, q={q}")


def i1_trig(mode: TrigMode, alpha: float, q: float, x: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Interior symmetric-difference integral of a well mode, in closed form."""
    alpha = check_order(alpha, classical_ok=False)
    q = check_well(q)
    _check_half_well(x, q)
    kpi = mode.k * math.pi
    gap = q - x
    f21 = hyp1f2(1.0 - 0.5 * alpha, 1.5, 2.0 - 0.5 * alpha, -(kpi * gap / (4.0 * q)) ** 2, ctl)
    bracket = kpi**2 / (alpha - 2.0) * (gap / q) ** 2 * f21 + 8.0 * math.sin(kpi * gap / (4.0 * q)) ** 2
    return gap**-alpha / (2.0 * alpha) * bracket * mode(x, q)


def upsilon(mode: TrigMode, alpha: float, q: float, x: float, ctl: SeriesControl = DEFAULT_SERIES) -> complex:
    """(-i)^alpha e^(-i w x) [Gamma(-alpha, -i w (q-x)) - Gamma(-alpha, -i w (q+x))], w = k pi / 2q."""
    w = mode.wavenumber(q)
    lo = upper_gamma(-alpha, -1j * w * (q - x), ctl)
    hi = upper_gamma(-alpha, -1j * w * (q + x), ctl)
    return cmath.exp(-0.5j * math.pi * alpha) * cmath.exp(-1j * w * x) * (lo - hi)


def _upsilon_conjugate_route(mode: TrigMode, alpha: float, q: float, x: float, ctl: SeriesControl) -> complex:
    # same window integral with e^{-i w s}; equals conj(upsilon) iff the branch choice is consistent
    w = mode.wavenumber(q)
    lo = upper_gamma(-alpha, 1j * w * (q - x), ctl)
    hi = upper_gamma(-alpha, 1j * w * (q + x), ctl)
    return cmath.exp(0.5j * math.pi * alpha) * cmath.exp(1j * w * x) * (lo - hi)


def window_integral_complex(
    mode: TrigMode, alpha: float, q: float, x: float, ctl: SeriesControl = DEFAULT_SERIES
) -> complex:
    """I2 assembled from both exponential halves of the trig factor.

    The imaginary part is zero exactly when the two incomplete-gamma routes are
    complex conjugates, which checks the principal-branch convention.
    """
    alpha = check_order(alpha, classical_ok=False)
    q = check_well(q)
    _check_half_well(x, q)
    scale = mode.wavenumber(q) ** alpha
    ups = upsilon(mode, alpha, q, x, ctl)
    ups_bar = _upsilon_conjugate_route(mode, alpha, q, x, ctl)
    if mode.parity == "even":
        return 0.5 * scale * (ups + ups_bar)
    return scale * (ups_bar - ups) / 2j


def i2_trig(mode: TrigMode, alpha: float, q: float, x: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """One-sided window integral of a well mode via incomplete gamma functions."""
    alpha = check_order(alpha, classical_ok=False)
    q = check_well(q)
    _check_half_well(x, q)
    if x == 0.0:
        return 0.0
    ups = upsilon(mode, alpha, q, x, ctl)
    scale = mode.wavenumber(q) ** alpha
    return scale * ups.real if mode.parity == "even" else -scale * ups.imag


def i3_trig(mode: TrigMode, alpha: float, q: float, x: float) -> float:
    """Tail term -2 f(x) (q - x)^(-alpha) / alpha."""
    alpha = check_order(alpha, classical_ok=False)
    q = check_well(q)
    _check_half_well(x, q)
    return -2.0 * mode(x, q) * (q - x) ** -alpha / alpha


def confined_apply_trig(
    mode: TrigMode, alpha: float, q: float, x: float, ctl: SeriesControl = DEFAULT_SERIES
) -> float:
    """Riesz derivative of the zero-extended well mode at ``|x| < q``.

    Negative ``x`` is obtained from the mode's parity. At ``alpha = 2`` the
    local second derivative is returned.
    """
    alpha = check_order(alpha)
    q = check_well(q)
    if not abs(x) < q:
        raise DomainError(f"confined operator needs |x| < q, got x={x}, q={q}")
    if alpha == 2.0:
        return -mode.wavenumber(q) ** 2 * mode(x, q)
    xa = abs(x)
    total = i1_trig(mode, alpha, q, xa, ctl) + i2_trig(mode, alpha, q, xa, ctl) + i3_trig(mode, alpha, q, xa)
    value = riesz_prefactor(alpha) * total
    if x < 0 and mode.parity == "odd":
        return -value
    return value


def _quad(func: Callable[[float], float], a: float, b: float, ctl: QuadratureControl) -> tuple[float, float]:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err = integrate.quad(
            func, a, b, epsabs=ctl.abs_tol / 4, epsrel=ctl.rel_tol / 4, limit=ctl.max_subdivisions
        )
    return val, err


def outside_residual(
    mode: TrigMode, alpha: float, q: float, x: float, ctl: QuadratureControl = DEFAULT_QUADRATURE
) -> float:
    """Value of the Riesz derivative of the confined mode at a point ``x > q`` outside the well."""
    alpha = check_order(alpha)
    q = check_well(q)
    if not x > q:
        raise DomainError(f"outside residual needs x > q, got x={x}, q={q}")
    if alpha == 2.0:
        return 0.0
    val, err = _quad(lambda s: mode(x - s, q) * s ** (-alpha - 1.0), x - q, x + q, ctl)
    if err > max(ctl.abs_tol, ctl.rel_tol * abs(val)):
        raise ToleranceNotMet("outside residual quadrature", err)
    return riesz_prefactor(alpha) * val


def _second_derivative(f: Callable[[float], float], x: float, h: float) -> float:
    def d2(step: float) -> float:
        return (f(x + step) - 2.0 * f(x) + f(x - step)) / step**2

    return (4.0 * d2(0.5 * h) - d2(h)) / 3.0


def _wynn_epsilon(partials: list[float]) -> tuple[float, float]:
    """Accelerated limit of a sequence of partial sums and a crude error estimate."""
    prev = [0.0] * (len(partials) + 1)
    cur = list(partials)
    estimates = [cur[-1]]
    col = 0
    while len(cur) > 1:
        nxt = []
        for n in range(len(cur) - 1):
            diff = cur[n + 1] - cur[n]
            if diff == 0.0:
                return cur[n + 1], 0.0
            nxt.append(prev[n + 1] + 1.0 / diff)
        prev, cur = cur, nxt
        col += 1
        if col % 2 == 0:
            estimates.append(cur[-1])
    if len(estimates) < 2:
        return estimates[-1], abs(partials[-1] - partials[-2])
    diffs = [abs(estimates[i + 1] - estimates[i]) for i in range(len(estimates) - 1)]
    best = min(range(len(diffs)), key=diffs.__getitem__)
    return estimates[best + 1], diffs[best]


def quadrature_oracle(
    f: Callable[[float], float],
    alpha: float,
    x: float,
    q: float | None = None,
    ctl: QuadratureControl = DEFAULT_QUADRATURE,
    *,
    period: float | None = None,
) -> float:
    """Direct numerical Riesz derivative of ``f`` at ``x``.

    With ``q`` given, ``f`` is extended by zero outside ``[-q, q]`` (the
    confined operator); with ``q=None`` the integral runs over the full line.

    Near ``s = 0`` the second difference behaves like ``f''(x) s^2`` and the
    piece ``[0, eps]`` is integrated from that Taylor term, ``f''`` coming from a
    Richardson-extrapolated central difference. The rest is adaptive
    quadrature, split at the kinks ``s = q -+ |x|`` of the zero extension. The
    confined tail beyond ``q + |x|`` is elementary. On the full line the
    oscillatory tail is summed over half-period panels (``period`` of ``f``,
    default 2 pi) and accelerated with Wynn's epsilon algorithm.

    Raises
    ------
    ToleranceNotMet
        If the accumulated error estimate exceeds the tolerances in ``ctl``.
    """
    alpha = check_order(alpha, classical_ok=False)
    c_alpha = riesz_prefactor(alpha)
    if q is not None:
        q = check_well(q)
        if not abs(x) < q:
            raise DomainError(f"confined oracle needs |x| < q, got x={x}, q={q}")
        room = q - abs(x)
        scale = q

        def F(y: float) -> float:
            return f(y) if abs(y) <= q else 0.0

    else:
        room = math.inf
        if period is None:
            period = 2.0 * math.pi
        scale = period / (2.0 * math.pi)
        F = f

    eps = min(1e-4 * scale, 0.25 * room)
    h = min(1e-2 * scale, 0.25 * room)
    fx = F(x)
    head = _second_derivative(F, x, h) * eps ** (2.0 - alpha) / (2.0 - alpha)

    def integrand(s: float) -> float:
        return (F(x + s) - 2.0 * fx + F(x - s)) * s ** (-alpha - 1.0)

    err_total = 0.0
    if q is not None:
        breaks = sorted({eps, q - abs(x), q + abs(x)})
        body = 0.0
        for a, b in zip(breaks[:-1], breaks[1:]):
            val, err = _quad(integrand, a, b, ctl)
            body += val
            err_total += err
        tail = -2.0 * fx * breaks[-1] ** -alpha / alpha
        total = head + body + tail
    else:
        start = max(period, 4.0 * abs(x) + period)
        body, err_total = _quad(integrand, eps, start, ctl)
        tail = -2.0 * fx * start**-alpha / alpha
        half = 0.5 * period

        def oscillating(s: float) -> float:
            return (f(x + s) + f(x - s)) * s ** (-alpha - 1.0)

        partials = []
        acc = 0.0
        for j in range(40):
            val, err = _quad(oscillating, start + j * half, start + (j + 1) * half, ctl)
            acc += val
            err_total += err
            partials.append(acc)
        limit, wynn_err = _wynn_epsilon(partials)
        err_total += wynn_err
        total = head + body + tail + limit

    value = c_alpha * total
    if c_alpha * err_total > max(ctl.abs_tol, ctl.rel_tol * abs(value)):
        raise ToleranceNotMet("Riesz quadrature oracle", c_alpha * err_total)
    return value
