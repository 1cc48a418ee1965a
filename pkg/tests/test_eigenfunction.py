"""Pointwise behaviour of the normalized eigenfunctions."""

import math

import numpy as np
import pytest

from fucik.eigenfunction import SineMode, breakpoints, build, evaluate
from fucik.errors import NotOnCurve, OutOfDomain
from fucik.paleywiener import dilation_factor
from fucik.spectrum import FucikPoint, complete_point, diagonal_point, gamma_line_point


def test_diagonal_equals_sine():
    f = build(diagonal_point(2))
    xs = np.linspace(0, math.pi, 1001)
    assert np.max(np.abs(f(xs) - np.sin(2 * xs))) <= 1e-14
    assert evaluate(f, math.pi / 4) == pytest.approx(1.0, abs=1e-15)


def test_pointwise_examples():
    p = complete_point(2, alpha=9)
    f = build(p)
    # sin(sqrt(alpha) x) peaks at pi/6, scaled by sqrt(beta)/sqrt(alpha) = 0.5
    assert evaluate(f, math.pi / 6) == pytest.approx(0.5, abs=1e-15)
    assert evaluate(f, math.pi / 3) == pytest.approx(0.0, abs=1e-15)
    # negative-bump peak has amplitude 1 in the alpha-dominant case
    assert evaluate(f, 2 * math.pi / 3) == pytest.approx(-1.0, abs=1e-15)
    assert evaluate(f, math.pi) == pytest.approx(0.0, abs=1e-12)
    f3 = build(diagonal_point(3))
    assert evaluate(f3, math.pi / 6) == pytest.approx(1.0, abs=1e-15)


def test_amplitudes_by_case():
    pa = complete_point(4, alpha=36.0)
    fa = build(pa)
    assert fa.positive_amplitude == pytest.approx(pa.sqrt_beta / pa.sqrt_alpha)
    assert fa.negative_amplitude == 1.0
    pb = complete_point(4, beta=36.0)
    fb = build(pb)
    assert fb.positive_amplitude == 1.0
    assert fb.negative_amplitude == pytest.approx(pb.sqrt_alpha / pb.sqrt_beta)


def test_breakpoints_examples():
    assert np.allclose(breakpoints(build(complete_point(2, alpha=9))),
                       [0, math.pi / 3, math.pi], atol=1e-14)
    assert np.allclose(breakpoints(build(diagonal_point(2))),
                       [0, math.pi / 2, math.pi], atol=1e-14)
    assert np.allclose(breakpoints(build(diagonal_point(1))), [0, math.pi], atol=1e-15)


@pytest.mark.parametrize("n,ratio,side", [
    (2, 1.3, "alpha"), (3, 1.2, "alpha"), (5, 1.6, "beta"), (8, 1.1, "beta"), (13, 1.4, "alpha"),
])
def test_junction_continuity(n, ratio, side):
    kw = {side: float((n * ratio) ** 2)}
    f = build(complete_point(n, **kw))
    eps = 1e-9
    for b in breakpoints(f)[1:-1]:
        jump = abs(evaluate(f, b - eps) - evaluate(f, b + eps))
        assert jump <= 1e-7


@pytest.mark.parametrize("n,ratio,side", [
    (2, 1.5, "alpha"), (4, 1.2, "beta"), (7, 1.3, "alpha"), (16, 1.7, "beta"),
])
def test_sup_norm_one(n, ratio, side):
    kw = {side: float((n * ratio) ** 2)}
    p = complete_point(n, **kw)
    f = build(p)
    xs = np.linspace(0, math.pi, 10 ** 4)
    grid_max = np.max(np.abs(f(xs)))
    # analytic peak locations: quarter-period points inside each bump
    l1, L = f.bumps.l1, f.bumps.l
    peaks = []
    k = 0
    while k * L < math.pi:
        for c in (k * L + l1 / 2, k * L + l1 + f.bumps.l2 / 2):
            if c < math.pi:
                peaks.append(c)
        k += 1
    peak_max = np.max(np.abs(f(np.array(peaks))))
    assert max(grid_max, peak_max) == pytest.approx(1.0, abs=1e-12)
    assert grid_max <= 1.0 + 1e-12


def test_bump_sign_structure():
    p = complete_point(5, alpha=42.0)
    f = build(p)
    l1, l2, L = f.bumps.l1, f.bumps.l2, f.bumps.l
    # values at bump midpoints alternate sign
    mids, k = [], 0
    while k * L + l1 / 2 < math.pi:
        mids.append(k * L + l1 / 2)
        if k * L + l1 + l2 / 2 < math.pi:
            mids.append(k * L + l1 + l2 / 2)
        k += 1
    vals = f(np.array(mids))
    assert np.all(vals[0::2] > 0) and np.all(vals[1::2] < 0)
    # central finite differences at the junctions alternate sign too
    h = 1e-7
    juncs = breakpoints(f)[:-1]
    slopes = (f(np.minimum(juncs + h, math.pi)) - f(np.maximum(juncs - h, 0.0))) / (2 * h)
    signs = np.sign(slopes)
    assert signs[0] > 0
    assert np.all(signs[:-1] * signs[1:] < 0)


def test_derivative_positive_at_zero():
    for p in [complete_point(2, alpha=9), complete_point(3, beta=11.0), diagonal_point(6)]:
        f = build(p)
        h = 1e-8
        assert (evaluate(f, h) - evaluate(f, 0.0)) / h > 0


def test_even_dilation_identity():
    gamma = 5.0
    f2 = build(gamma_line_point(2, gamma))
    xs = np.linspace(0, math.pi, 1000)
    for n in (4, 8, 16):
        fn = build(gamma_line_point(n, gamma))
        wrapped = np.mod(n * xs / 2.0, math.pi)
        assert np.max(np.abs(fn(xs) - f2(wrapped))) <= 1e-12


def test_odd_dilation_identity_with_offset():
    gamma = 5.0
    sg = math.sqrt(gamma)
    f2 = build(gamma_line_point(2, gamma))
    xs = np.linspace(0, math.pi, 1000)
    for n in (3, 5, 9, 15):
        alpha = (1 + (n - 1) * sg / 2) ** 2
        fn = build(complete_point(n, alpha=alpha))
        c = dilation_factor(n, gamma)
        wrapped = np.mod(c * xs, math.pi)
        assert np.max(np.abs(fn(xs) - f2(wrapped))) <= 1e-12


def test_domain_guards():
    f = build(diagonal_point(2))
    with pytest.raises(OutOfDomain):
        evaluate(f, -0.5)
    with pytest.raises(OutOfDomain):
        evaluate(f, math.pi + 0.1)
    # tiny overshoot is clamped
    assert evaluate(f, math.pi + 5e-13) == pytest.approx(0.0, abs=1e-12)


def test_build_rejects_off_curve():
    bad = FucikPoint(2, 9.0, 9.0, "even", "alpha_dominant")
    with pytest.raises(NotOnCurve):
        build(bad)


def test_sine_mode():
    s = SineMode(3)
    assert s(math.pi / 6) == pytest.approx(1.0)
    assert s.norm_sq == math.pi / 2
