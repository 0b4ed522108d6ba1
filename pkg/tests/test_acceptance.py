"""Acceptance criteria, one check per criterion with a one-line PASS/FAIL report.

Run under pytest (the lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from fracwell.mlwell import MlfEigenfunction, mlf_eigenfunction_eval, mlf_first_zeros
from fracwell.riesz import (
    TrigMode,
    confined_apply_trig,
    quadrature_oracle,
    window_integral_complex,
)
from fracwell.specfun import upper_gamma
from fracwell.spectral import approx_energy, pseudo_normalized_g, solve_well

RESULTS: dict[int, str] = {}
ALPHA_GRID = (0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75)


def _report(number: int, passed: bool, detail: str) -> bool:
    RESULTS[number] = f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}"
    print(RESULTS[number])
    return passed


def criterion_1() -> bool:
    t0 = time.perf_counter()
    worst = 0.0
    for a in ALPHA_GRID:
        for k in (1, 2, 3, 4):
            mode = TrigMode(k)
            for x in (0.0, 0.2, 0.5, 0.8):
                closed = confined_apply_trig(mode, a, 1.0, x)
                oracle = quadrature_oracle(lambda y, m=mode: m(y, 1.0), a, x, 1.0)
                worst = max(worst, abs(closed - oracle))
    elapsed = time.perf_counter() - t0
    return _report(1, worst <= 1e-6 and elapsed <= 120, f"closed form vs quadrature max |dev| = {worst:.2e} (tol 1e-6), {elapsed:.1f}s")


def criterion_2() -> bool:
    worst = 0.0
    for a in (0.5, 1.0, 1.5):
        for k in (1, 2):
            for trig in (math.cos, math.sin):
                for x in (-1.1, 0.0, 0.3, 0.9, 2.5):
                    got = quadrature_oracle(lambda y: trig(k * y), a, x, period=2 * math.pi / k)
                    worst = max(worst, abs(got + k**a * trig(k * x)))
    return _report(2, worst <= 1e-7, f"full-line quadrature vs -|k|^alpha f: max |dev| = {worst:.2e} (tol 1e-7)")


def criterion_3() -> bool:
    pairs = solve_well(2 - 1e-6, 1.0, 20, 4)
    xs = np.linspace(-1, 1, 801)
    e_err = max(abs(p.energy - (math.pi * p.level / 2) ** 2) / (math.pi * p.level / 2) ** 2 for p in pairs)
    f_err = max(
        float(np.max(np.abs([p.series(x) - TrigMode(p.level)(x, 1.0) for x in xs]))) for p in pairs
    )
    ok = e_err <= 5e-3 and f_err <= 1e-2
    return _report(3, ok, f"alpha=2-1e-6: max rel energy err {e_err:.2e} (tol 5e-3), sup |psi - trig| {f_err:.2e} (tol 1e-2)")


def criterion_4() -> bool:
    t0 = time.perf_counter()
    gaps = {}
    for a in (0.5, 1.0, 1.5):
        e20 = solve_well(a, 1.0, 20, 1, residuals=False)[0].energy
        e28 = solve_well(a, 1.0, 28, 1, residuals=False)[0].energy
        gaps[a] = abs(e20 - e28) / e28
    elapsed = time.perf_counter() - t0
    ok = max(gaps.values()) <= 0.0025 and elapsed <= 60
    text = ", ".join(f"alpha={a}: {100 * g:.3f}%" for a, g in gaps.items())
    return _report(4, ok, f"ground state N=20 vs N=28: {text} (tol 0.25%), {elapsed:.1f}s")


def _g_distance(alpha: float) -> float:
    # g diverges at the walls for alpha > 1, so the distance is taken on |x| <= 0.8
    xs = np.linspace(-0.8, 0.8, 161)
    g = np.array(pseudo_normalized_g(TrigMode(1), alpha, 1.0, [float(x) for x in xs]))
    return float(np.max(np.abs(g - np.cos(math.pi * xs / 2))))


def criterion_5() -> bool:
    d1, d19 = _g_distance(1.0), _g_distance(1.9)
    return _report(5, d1 > 0.05 and d19 < d1, f"sup |g_1 - cos| on |x|<=0.8: alpha=1 {d1:.4f} (> 0.05), alpha=1.9 {d19:.4f} (< alpha=1)")


def criterion_6() -> bool:
    cells = []
    ok = True
    for a in (1.5, 1.75):
        pairs = solve_well(a, 1.0, 20, 6, residuals=False)
        for k in (3, 4, 5):
            e = pairs[k - 1].energy
            d_tilde = abs(approx_energy(k, a, 1.0) - e)
            d_free = abs((k * math.pi / 2) ** a - e)
            good = d_tilde < d_free
            ok &= good
            cells.append(f"a={a} k={k} {'ok' if good else 'no'}({d_tilde:.3f} vs {d_free:.3f})")
    return _report(6, ok, "|E~ - E| < |E_free - E|: " + "; ".join(cells))


def criterion_7() -> bool:
    worst = 0.0
    for a in ALPHA_GRID:
        for k in (1, 3, 5, 7):
            e = approx_energy(k, a, 1.0)
            direct = -confined_apply_trig(TrigMode(k), a, 1.0, 0.0)
            worst = max(worst, abs(e - direct) / abs(direct))
    return _report(7, worst <= 1e-9, f"E~_k vs -D cos at x=0: max rel dev {worst:.2e} (tol 1e-9)")


def criterion_8() -> bool:
    worst = 0.0
    xs = np.linspace(0.0, 5.0, 201)[1:]
    for d in ("riemann", "caputo"):
        for parity, trig in (("even", math.cos), ("odd", math.sin)):
            fn = MlfEigenfunction(d, parity, 2.0)
            worst = max(worst, max(abs(mlf_eigenfunction_eval(fn, float(x)) - trig(x)) for x in xs))
    zero = mlf_first_zeros(MlfEigenfunction("caputo", "even", 2.0), 1)[0]
    zerr = abs(zero - math.pi / 2)
    return _report(8, worst <= 1e-9 and zerr <= 1e-9, f"alpha=2 reductions max |dev| {worst:.2e}, first zero err {zerr:.2e} (tol 1e-9)")


def criterion_9() -> bool:
    scal = 0.0
    for a in (0.5, 1.0, 1.5, 1.9):
        e1 = [p.energy for p in solve_well(a, 1.0, 20, 4, residuals=False)]
        e2 = [p.energy for p in solve_well(a, 2.0, 20, 4, residuals=False)]
        scal = max(scal, max(abs(b - 2**-a * c) / (2**-a * c) for b, c in zip(e2, e1)))
    par = real = conj = 0.0
    for a in ALPHA_GRID:
        for k in (1, 2, 3, 4):
            mode = TrigMode(k)
            sign = 1.0 if mode.parity == "even" else -1.0
            for x in (0.1, 0.35, 0.6, 0.85):
                r = confined_apply_trig(mode, a, 1.0, x)
                par = max(par, abs(confined_apply_trig(mode, a, 1.0, -x) - sign * r))
                w = window_integral_complex(mode, a, 1.0, x)
                real = max(real, abs(w.imag))
    for a in (-1.75, -1.0, -0.5, 0.3):
        for z in (0.4j, 2.0 - 3.0j, -1.0 + 6.0j, 12.0j, 0.5 + 0.1j):
            g = upper_gamma(a, z)
            conj = max(conj, abs(upper_gamma(a, z.conjugate()) - g.conjugate()) / abs(g))
    ok = scal <= 1e-6 and par <= 1e-12 and real <= 1e-12 and conj <= 1e-12
    return _report(
        9,
        ok,
        f"q-scaling rel {scal:.1e} (1e-6), parity {par:.1e} (1e-12), Im of window {real:.1e} (1e-12), "
        f"gamma conjugation {conj:.1e} (1e-12)",
    )


def criterion_10() -> bool:
    cmd = [sys.executable, "-m", "fracwell.cli", "spectrum", "--alpha", "0.5,1.0,1.5", "--levels", "4"]
    outs = [subprocess.run(cmd, capture_output=True, check=False).stdout for _ in range(2)]
    ok = outs[0] == outs[1] and len(outs[0]) > 0
    return _report(10, ok, f"two spectrum runs byte-identical: {ok} ({len(outs[0])} bytes)")


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 11)}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    assert CRITERIA[number](), RESULTS[number]


if __name__ == "__main__":
    failed = [n for n, fn in CRITERIA.items() if not fn()]
    sys.exit(1 if failed else 0)
