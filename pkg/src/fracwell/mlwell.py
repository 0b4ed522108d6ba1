"""Closed-form eigenfunctions of the fractional well for the Riemann and Caputo derivatives.

On the half line these are Mittag-Leffler functions of ``-x^alpha``; they
reduce to ``cos x`` and ``sin x`` at ``alpha = 2``. Eigenvalues of a well of
half-width ``q`` follow from their zeros ``z_k`` as ``(z_k / q)^alpha``, the
scaling that matches the free spectrum ``|k|^alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, OutOfValidatedRange, SingularOrigin, WindowExhausted
from .riesz import check_order, check_well
from .specfun import DEFAULT_SERIES, ML_WINDOW, SeriesControl, mittag_leffler

DEFINITIONS = ("riemann", "caputo")
SCAN_START = 0.05
SCAN_STEP = 0.05
ZERO_TOL = 1e-10


@dataclass(frozen=True)
class MlfEigenfunction:
    """One of the four forms ``x^(power) E_{alpha, beta}(-x^alpha)``."""

    definition: str
    parity: str
    alpha: float

    def __post_init__(self) -> None:
        if self.definition not in DEFINITIONS:
            raise DomainError(f"definition must be 'riemann' or 'caputo', got {self.definition!r}")
        if self.parity not in ("even", "odd"):
            raise DomainError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        object.__setattr__(self, "alpha", check_order(self.alpha))

    @property
    def power_and_beta(self) -> tuple[float, float]:
        a = self.alpha
        return {
            ("riemann", "even"): (0.5 * a - 1.0, 0.5 * a),
            ("riemann", "odd"): (a - 1.0, a),
            ("caputo", "even"): (0.0, 1.0),
            ("caputo", "odd"): (0.5 * a, 1.0 + 0.5 * a),
        }[(self.definition, self.parity)]


def mlf_eigenfunction_eval(fn: MlfEigenfunction, x: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Evaluate the selected form at ``x >= 0``.

    Raises
    ------
    SingularOrigin
        At ``x = 0`` when the power of ``x`` is negative (Riemann even form for
        ``alpha < 2``, Riemann odd form for ``alpha < 1``).
    OutOfValidatedRange
        When ``x^alpha`` leaves the Mittag-Leffler window.
    """
    if x < 0:
        raise DomainError(f"closed forms are given for x >= 0, got {x}")
    power, beta = fn.power_and_beta
    if x == 0.0:
        if power < 0:
            raise SingularOrigin(f"{fn.definition}-{fn.parity} form diverges at x = 0 for alpha={fn.alpha}")
        return mittag_leffler(fn.alpha, beta, 0.0, ctl) if power == 0 else 0.0
    return x**power * mittag_leffler(fn.alpha, beta, -(x**fn.alpha), ctl)


def _bisect(fn: MlfEigenfunction, lo: float, hi: float, f_lo: float, ctl: SeriesControl) -> float:
    while hi - lo > ZERO_TOL:
        mid = 0.5 * (lo + hi)
        f_mid = mlf_eigenfunction_eval(fn, mid, ctl)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def mlf_first_zeros(
    fn: MlfEigenfunction, count: int, step: float = SCAN_STEP, ctl: SeriesControl = DEFAULT_SERIES
) -> list[float]:
    """First ``count`` positive zeros, by a sign-change scan and bisection.

    The scan runs while ``x^alpha`` stays inside the validated Mittag-Leffler
    window and the series keeps its accuracy budget.

    Raises
    ------
    WindowExhausted
        If fewer than ``count`` zeros lie inside the window.
    """
    if int(count) != count or count < 1:
        raise DomainError(f"count must be a positive integer, got {count}")
    if not step > 0:
        raise DomainError(f"scan step must be positive, got {step}")
    zeros: list[float] = []
    x_prev = SCAN_START
    f_prev = mlf_eigenfunction_eval(fn, x_prev, ctl)
    n = 1
    while len(zeros) < count:
        x = SCAN_START + n * step
        n += 1
        if x**fn.alpha > ML_WINDOW:
            break
        try:
            f = mlf_eigenfunction_eval(fn, x, ctl)
        except OutOfValidatedRange:
            break
        if f == 0.0:
            zeros.append(x)
        elif (f > 0) != (f_prev > 0) and f_prev != 0.0:
            zeros.append(_bisect(fn, x_prev, x, f_prev, ctl))
        x_prev, f_prev = x, f
    if len(zeros) < count:
        raise WindowExhausted(
            f"found {len(zeros)} of {count} zeros before x^alpha reached the validated window",
            zeros,
        )
    return zeros


def mlf_energies(zeros: list[float], alpha: float, q: float) -> list[float]:
    """Map zero positions to well energies ``(z_k / q)^alpha``."""
    alpha = check_order(alpha)
    q = check_well(q)
    return [(z / q) ** alpha for z in zeros]

