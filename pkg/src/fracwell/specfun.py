"""Special functions used by the confined Riesz operator.

Everything here is a plain function of its arguments: the generalized
hypergeometric 1F2, the upper incomplete gamma function with real order and
complex argument, and the two-parameter Mittag-Leffler function on the real
line. Series are truncated with a relative tolerance and a
two-consecutive-small-terms rule so that alternating sums are not cut short
by a single accidental small term.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    BranchPointArgument,
    DomainError,
    NoConvergence,
    OutOfValidatedRange,
    PoleInParameter,
)

EULER_GAMMA = 0.57721566490153286

# zeta(2) .. zeta(10); higher orders are summed directly in _zeta.
_ZETA = (
    1.6449340668482264,
    1.2020569031595943,
    1.0823232337111382,
    1.0369277551433699,
    1.0173430619844491,
    1.0083492773819228,
    1.0040773561979443,
    1.0020083928260822,
    1.0009945751278181,
)

# upper_gamma uses the Legendre continued fraction for |z| > GAMMA_SWITCH_RADIUS
# and also for Re z > GAMMA_SWITCH_REAL, where the series cancels badly.
GAMMA_SWITCH_RADIUS = 8.0
GAMMA_SWITCH_REAL = 3.0

# hyp1f2: tolerated relative loss to cancellation, and the |z| beyond which the
# sinc family always takes the incomplete-gamma route.
HYP_CANCELLATION_BUDGET = 1e-9
SINC_SWITCH = 64.0

# Mittag-Leffler: |z| window and the absolute cancellation error budget.
ML_WINDOW = 25.0
ML_ABS_ERROR_BUDGET = 1e-9

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for series evaluations."""

    rel_tol: float = 1e-13
    max_terms: int = 10000

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_SERIES = SeriesControl()


def _is_nonpositive_integer(v: float) -> bool:
    return v <= 0 and float(v).is_integer()


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma needs x > 0, got {x}")
    return math.lgamma(x)


def _rgamma(x: float) -> float:
    """1/Gamma(x), zero at the poles."""
    if _is_nonpositive_integer(x):
        return 0.0
    mag = math.exp(-math.lgamma(x))
    if x > 0:
        return mag
    # sign of Gamma on (-n-1, -n) is (-1)^(n+1)
    return -mag if math.floor(-x) % 2 == 0 else mag


def hyp1f2(a: float, b: float, c: float, z: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    r"""Generalized hypergeometric function :math:`{}_1F_2(a; b, c; z)`.

    Summed from its Taylor series, which converges for every real ``z``. For
    large negative ``z`` the alternating terms grow far beyond the result; the
    family ``1F2(a; 3/2, a+1; -c^2/4)`` with ``a > 0`` (the one the well
    problem needs) then switches to the representation

    .. math:: \frac{2a}{c}\int_0^1 t^{2a-2}\sin(ct)\,dt

    in terms of incomplete gamma functions of imaginary argument.

    Raises
    ------
    PoleInParameter
        If ``b`` or ``c`` is zero or a negative integer.
    OutOfValidatedRange
        If cancellation in the series would cost more than
        ``HYP_CANCELLATION_BUDGET`` relative accuracy and no stable route exists.
    NoConvergence
        If ``ctl.max_terms`` terms do not reach the tolerance.
    """
    for name, p in (("b", b), ("c", c)):
        if _is_nonpositive_integer(p):
            raise PoleInParameter(f"1F2 parameter {name}={p} is a non-positive integer")
    sinc_family = b == 1.5 and c == a + 1.0 and a > 0.0
    if sinc_family and z < -SINC_SWITCH:
        return _hyp1f2_sinc(a, z, ctl)
    total = 1.0
    term = 1.0
    biggest = 1.0
    small = 0
    for n in range(ctl.max_terms):
        ratio = (a + n) / ((b + n) * (c + n) * (n + 1)) * z
        term *= ratio
        total += term
        biggest = max(biggest, abs(term))
        if abs(term) <= ctl.rel_tol * abs(total) and abs(ratio) < 1.0:
            small += 1
            if small >= 2:
                break
        else:
            small = 0
    else:
        raise NoConvergence(f"1F2({a}; {b}, {c}; {z}) not converged in {ctl.max_terms} terms")
    if 16.0 * _EPS * biggest > HYP_CANCELLATION_BUDGET * abs(total):
        if sinc_family:
            return _hyp1f2_sinc(a, z, ctl)
        raise OutOfValidatedRange(f"1F2({a}; {b}, {c}; {z}): series cancellation exceeds budget")
    return total


def _hyp1f2_sinc(a: float, z: float, ctl: SeriesControl) -> float:
    # 1F2(a; 3/2, a+1; -c^2/4) = (2a/c) int_0^1 t^(s-1) sin(ct) dt, s = 2a - 1 > -1, and
    # int_0^1 t^(s-1) e^{ict} dt = (-ic)^(-s) [Gamma(s) - Gamma(s, -ic)]
    cw = 2.0 * math.sqrt(-z)
    s = 2.0 * a - 1.0
    # Gamma(s) sin(pi s / 2), finite through s = 0
    head = 0.5 * math.pi if s == 0.0 else math.gamma(1.0 + s) * math.sin(0.5 * math.pi * s) / s
    tail = (cmath.exp(0.5j * math.pi * s) * upper_gamma(s, -1j * cw, ctl)).imag
    return 2.0 * a / cw * cw**-s * (head - tail)


def _zeta(k: int) -> float:
    if k <= 10:
        return _ZETA[k - 2]
    return math.fsum(n ** -float(k) for n in range(1, 41))


def _lgamma1p(b: float) -> float:
    """log Gamma(1 + b) for |b| <= 0.2 via its Taylor series about 0."""
    total = -EULER_GAMMA * b
    power = -b
    for k in range(2, 40):
        power *= -b
        total += _zeta(k) * power / k
    return total


def _gamma1p_m1_over(b: float) -> float:
    """(Gamma(1 + b) - 1) / b, continuous at b = 0."""
    if b == 0.0:
        return -EULER_GAMMA
    if abs(b) <= 0.2:
        return math.expm1(_lgamma1p(b)) / b
    return (math.gamma(1.0 + b) - 1.0) / b


def _expm1c(w: complex) -> complex:
    x, y = w.real, w.imag
    re = math.expm1(x) * math.cos(y) - 2.0 * math.sin(0.5 * y) ** 2
    return complex(re, math.exp(x) * math.sin(y))


def _upper_gamma_series(b: float, z: complex, ctl: SeriesControl) -> complex:
    # Gamma(b, z) = (Gamma(1+b) - 1)/b - (z^b - 1)/b - z^b sum_{n>=1} (-z)^n / (n! (b+n))
    logz = cmath.log(z)
    zb = cmath.exp(b * logz)
    zb_m1 = logz if b == 0.0 else _expm1c(b * logz) / b
    term = 1.0 + 0.0j
    total = 0.0 + 0.0j
    small = 0
    for n in range(1, ctl.max_terms):
        term *= -z / n
        contrib = term / (b + n)
        total += contrib
        if n > abs(z) and abs(contrib) <= ctl.rel_tol * abs(total):
            small += 1
            if small >= 2:
                return _gamma1p_m1_over(b) - zb_m1 - zb * total
        else:
            small = 0
    raise NoConvergence(f"incomplete gamma series at z={z} not converged")


def _upper_gamma_cf(a: float, z: complex, ctl: SeriesControl) -> complex:
    # Legendre continued fraction, modified Lentz evaluation.
    tiny = 1e-300
    bb = z + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / bb
    h = d
    for i in range(1, ctl.max_terms):
        an = -i * (i - a)
        bb += 2.0
        d = an * d + bb
        if abs(d) < tiny:
            d = tiny
        c = bb + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < ctl.rel_tol:
            return cmath.exp(-z + a * cmath.log(z)) * h
    raise NoConvergence(f"incomplete gamma continued fraction at z={z} not converged")


def _use_continued_fraction(z: complex) -> bool:
    return abs(z) > GAMMA_SWITCH_RADIUS or z.real > GAMMA_SWITCH_REAL


def upper_gamma(a: float, z: complex, ctl: SeriesControl = DEFAULT_SERIES) -> complex:
    r"""Upper incomplete gamma :math:`\Gamma(a, z)` for real ``a`` and complex ``z``.

    The principal branch of :math:`z^a` is used (cut along the negative real
    axis). The order is reduced to ``b = a - floor(a)`` in ``[0, 1)``, the base
    value is computed by series (``|z| <= 8`` and ``Re z <= 3``) or continued
    fraction, and the
    recurrence :math:`a\Gamma(a,z) = \Gamma(a+1,z) - z^a e^{-z}` carries it back
    to the requested order.
    """
    z = complex(z)
    if z == 0:
        if a > 0:
            return complex(math.gamma(a))
        raise BranchPointArgument(f"Gamma({a}, 0) is infinite for a <= 0")
    shift = math.floor(a)
    b = a - shift
    if b >= 1.0:  # a just below an integer rounds b up to 1
        shift += 1
        b = a - shift
    if _use_continued_fraction(z):
        g = _upper_gamma_cf(b, z, ctl)
    else:
        g = _upper_gamma_series(b, z, ctl)
    logz = cmath.log(z)
    emz = cmath.exp(-z)
    s = b
    if shift < 0:
        for _ in range(-shift):
            s -= 1.0
            g = (g - cmath.exp(s * logz) * emz) / s
    else:
        for _ in range(shift):
            g = s * g + cmath.exp(s * logz) * emz
            s += 1.0
    if not (math.isfinite(g.real) and math.isfinite(g.imag)):
        raise NoConvergence(f"Gamma({a}, {z}) is not finite in double precision")
    return g


def mittag_leffler(alpha: float, beta: float, z: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    r"""Two-parameter Mittag-Leffler function :math:`E_{\alpha,\beta}(z)` for real ``z``.

    Plain power series :math:`\sum_n z^n / \Gamma(\alpha n + \beta)`. The result
    is only returned inside the validated window: ``|z| <= 25`` and an estimated
    cancellation error (largest term times a few ulps) below ``1e-9``.
    ``beta = 1`` gives the one-parameter function.

    Raises
    ------
    OutOfValidatedRange
        Outside the window, e.g. ``mittag_leffler(1.0, 1.0, -25.0)``, where the
        alternating series cancels away all significant digits.
    NoConvergence
        If the terms have not decayed within ``ctl.max_terms``.
    """
    if not alpha > 0:
        raise DomainError(f"Mittag-Leffler needs alpha > 0, got {alpha}")
    if abs(z) > ML_WINDOW:
        raise OutOfValidatedRange(f"|z|={abs(z)} exceeds the Mittag-Leffler window {ML_WINDOW}")
    if z == 0:
        return _rgamma(beta)
    log_abs = math.log(abs(z))
    negative = z < 0
    total = 0.0
    biggest = 0.0
    prev = math.inf
    small = 0
    for n in range(ctl.max_terms):
        rg = _rgamma(alpha * n + beta)
        term = 0.0 if rg == 0.0 else rg * math.exp(n * log_abs)
        if negative and n % 2:
            term = -term
        total += term
        biggest = max(biggest, abs(term))
        if abs(term) <= ctl.rel_tol * max(abs(total), _EPS * biggest) and abs(term) <= prev:
            small += 1
            if small >= 2:
                break
        else:
            small = 0
        prev = abs(term)
    else:
        raise NoConvergence(f"E_{alpha},{beta}({z}) not converged in {ctl.max_terms} terms")
    if 8.0 * _EPS * biggest > ML_ABS_ERROR_BUDGET:
        raise OutOfValidatedRange(
            f"E_{alpha},{beta}({z}): largest series term {biggest:.3e} leaves no accurate digits"
        )
    return total
