"""Truncated power series about x = 0 for the monomial images of the confined operator.

This is the direct binomial-expansion route: the three pieces of the confined
Riesz operator applied to ``x^p`` are written as sums of ``(q -+ x)^beta`` terms
and every term is expanded to a fixed order. In double precision the
individual terms are much larger than their sum once ``p`` grows, so each
coefficient carries a running magnitude and :class:`SeriesOverflow` is raised
when the cancellation would eat more than the allowed digits. The production
matrix in :mod:`fracwell.spectral` uses the resummed closed form; this module
is its independent cross-check.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import SeriesOverflow

# relative accuracy a coefficient must keep after cancellation
CANCELLATION_GUARD = 1e-8
_EPS = float(np.finfo(float).eps)


def binomial_series(beta: float, sign: int, order: int) -> np.ndarray:
    """Coefficients of ``(1 + sign*x)^beta`` up to ``x^order``."""
    out = np.empty(order + 1)
    c = 1.0
    for n in range(order + 1):
        out[n] = c * sign**n
        c *= (beta - n) / (n + 1)
    return out


def window_difference_series(beta: float, order: int) -> np.ndarray:
    """Coefficients of ``[(1 + x)^beta - (1 - x)^beta] / beta``; only odd powers survive.

    Dividing by ``beta`` analytically keeps the series finite as ``beta -> 0``.
    """
    out = np.zeros(order + 1)
    c = 1.0  # binom(beta, n) / beta
    for n in range(1, order + 1):
        if n > 1:
            c *= (beta - (n - 1)) / n
        if n % 2 == 1:
            out[n] = 2.0 * c
    return out


def shift(series: np.ndarray, by: int, order: int) -> np.ndarray:
    """Multiply a series by ``x^by`` and truncate."""
    out = np.zeros(order + 1)
    if by <= order:
        out[by:] = series[: order + 1 - by]
    return out


def monomial_image(p: int, alpha: float, order: int) -> np.ndarray:
    """Taylor coefficients of ``(I1 + I2 + I3)[x^p]`` for ``q = 1``, without the prefactor.

    I1 expands ``(x+s)^p + (x-s)^p - 2x^p`` binomially and integrates each
    even power of ``s``; I2 integrates ``(x-s)^p`` term-wise over the window;
    I3 is ``-2 x^p (1-x)^(-alpha) / alpha``.

    Raises
    ------
    SeriesOverflow
        If cancellation between terms leaves less than ``CANCELLATION_GUARD``
        relative accuracy in some coefficient.
    """
    total = np.zeros(order + 1)
    size = np.zeros(order + 1)

    def add(series: np.ndarray, weight: float, power: int) -> None:
        term = weight * shift(series, power, order)
        total[:] += term
        size[:] += np.abs(term)

    for j in range(2, p + 1, 2):
        add(binomial_series(j - alpha, -1, order), 2.0 * math.comb(p, j) / (j - alpha), p - j)
    for j in range(p + 1):
        add(window_difference_series(j - alpha, order), math.comb(p, j) * (-1.0) ** j, p - j)
    add(binomial_series(-alpha, -1, order), -2.0 / alpha, p)

    lost = 16.0 * _EPS * size
    bad = lost > CANCELLATION_GUARD * np.maximum(np.abs(total), 1.0)
    if np.any(bad):
        n = int(np.argmax(bad))
        raise SeriesOverflow(
            f"x^{p} image: coefficient {n} loses all but {np.abs(total[n]) / max(lost[n], 1e-300):.1e} "
            "of its magnitude to cancellation"
        )
    return total
