"""Bound functions, zeta, and the two summation criteria."""

import math

import numpy as np
import pytest

from conftest import curve_samples
from fucik import closedform as cf
from fucik import nearness as nr
from fucik.errors import DivergentArgument, NotOnCurve, OddEntriesNotDiagonal
from fucik.spectrum import complete_point, diagonal_point

PI = math.pi


# ----------------------------------------------------------------------
# bound_Cn and the chain of intermediate estimates

def test_bound_cn_examples():
    assert nr.bound_Cn(5, 25.0, 25.0) == 0.0
    got = nr.bound_Cn(2, 9.0, 2.25)
    assert got == pytest.approx((3 + PI ** 2) * PI / 9, abs=1e-13)
    p = complete_point(3, alpha=16.0)
    want = 4 * PI * 9 * 10 / 16 * (4 / 3 - 1) ** 2
    assert nr.bound_Cn(3, p.alpha, p.beta) == pytest.approx(want, abs=1e-12)


def test_bound_cn_rejects_off_curve():
    with pytest.raises(NotOnCurve):
        nr.bound_Cn(2, 9.0, 9.0)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 9, 14, 27, 50])
def test_domination(n):
    """The closed-form distance never exceeds its bound C_n."""
    for p in curve_samples(n, 12, lo=1.0005, hi=2.3):
        dist = cf.dist_sq_to_sine(p).value
        assert dist <= nr.bound_Cn(n, p.alpha, p.beta) * (1 + 1e-12) + 1e-15


@pytest.mark.parametrize("n", [2, 4, 10, 36])
def test_even_bound_chain(n):
    """distance <= refined bound <= final constant bound, for even n."""
    for p in curve_samples(n, 10, lo=1.001, hi=2.0):
        s = max(p.sqrt_alpha, p.sqrt_beta)
        dist = cf.dist_sq_to_sine(p).value
        sharp = nr.bound_even_refined(n, s)
        final = nr.K_EVEN * (s / n - 1.0) ** 2
        assert dist <= sharp * (1 + 1e-12) + 1e-15
        assert sharp <= final * (1 + 1e-12)


def test_odd_chain_constants():
    for n in range(3, 202, 2):
        assert 4 * PI * n * n * (n * n + 1) / (n - 1) ** 4 <= 23 * PI
        assert 5 * PI * n * n * (n * n + 1) / (n + 1) ** 4 <= 5 * PI


def test_cubic_sine_lower_bound():
    x = np.linspace(0.0, PI, 10 ** 4)
    assert np.all(np.sin(x) >= x - x ** 3 / 6 - 1e-15)


# ----------------------------------------------------------------------
# zeta

def test_zeta_classical_values():
    assert nr.zeta(2.0) == pytest.approx(PI ** 2 / 6, abs=1e-12)
    assert nr.zeta(4.0) == pytest.approx(PI ** 4 / 90, abs=1e-12)


def test_zeta_against_brute_force():
    # 10^7-term partial sum, bracketed by integral tail bounds
    s = 1.5
    m = 10 ** 7
    partial = 0.0
    for lo in range(1, m + 1, 10 ** 6):
        k = np.arange(lo, min(lo + 10 ** 6, m + 1), dtype=float)
        partial += float(np.sum(k ** -s))
    tail_lo = (m + 1) ** (1 - s) / (s - 1)
    tail_hi = m ** (1 - s) / (s - 1)
    assert partial + tail_lo - 1e-9 <= nr.zeta(s) <= partial + tail_hi + 1e-9


def test_zeta_pole_guard():
    with pytest.raises(DivergentArgument):
        nr.zeta(1.0)
    with pytest.raises(DivergentArgument):
        nr.zeta(1.0000001)


# ----------------------------------------------------------------------
# corollary caps and regions

def test_cap_examples():
    z15 = nr.zeta(1.5)
    assert nr.corollary_cn_cap(6, 0.5, "even") == pytest.approx(
        9 / (8 * (3 + PI ** 2)) / (z15 - 1), rel=1e-13)
    assert nr.corollary_cn_cap(9, 0.5, "odd_alpha_uniform") == pytest.approx(
        (1 / 46) / (z15 - 1), rel=1e-13)
    assert nr.corollary_cn_cap(7, 0.5, "odd_beta_uniform") == pytest.approx(
        (1 / 10) / (z15 - 1), rel=1e-13)
    want = (2 ** 4 / (8 * 9 * 10)) / (PI ** 2 / 6 - 1)
    assert nr.corollary_cn_cap(3, 1.0, "odd_alpha_dominant") == pytest.approx(want, rel=1e-12)


def test_uniform_caps_below_pointwise():
    for eps in (0.1, 0.5, 1.0):
        for n in range(3, 60, 2):
            assert nr.corollary_cn_cap(n, eps, "odd_alpha_uniform") < \
                nr.corollary_cn_cap(n, eps, "odd_alpha_dominant")
            assert nr.corollary_cn_cap(n, eps, "odd_beta_uniform") <= \
                nr.corollary_cn_cap(n, eps, "odd_beta_dominant") * (1 + 1e-12)


def test_region_boundary():
    pts = nr.region_boundary(0.5, "even", range(2, 11))
    assert len(pts) == 9
    cap = nr.corollary_cn_cap(2, 0.5, "even")
    for n, b in pts:
        assert b == pytest.approx(n + math.sqrt(cap) * n ** 0.25, rel=1e-13)
    # at n = 1 the boundary reduces to 1 + sqrt(cap) for every epsilon
    for eps in (0.5, 3.0, 8.0):
        (n1, b1), = nr.region_boundary(eps, "odd_alpha_uniform", [1])
        assert b1 == pytest.approx(1 + math.sqrt(nr.corollary_cn_cap(2, eps, "odd_alpha_uniform")))
    # monotone in n for fixed parameters
    vals = [b for _, b in nr.region_boundary(0.1, "odd_alpha_uniform", range(2, 30))]
    assert all(b2 > b1 for b1, b2 in zip(vals, vals[1:]))


# ----------------------------------------------------------------------
# criterion 1: the C_n summation test

def test_theorem1_all_diagonal():
    rep = nr.theorem1_check(nr.FinitePerturbation(()))
    assert rep.partial_sum == 0.0 and rep.tail_bound == 0.0
    assert rep.verdict == "riesz_basis_certified"


def test_theorem1_single_perturbation_inconclusive():
    rep = nr.theorem1_check(nr.FinitePerturbation((complete_point(2, alpha=9),)))
    assert rep.total_upper == pytest.approx((3 + PI ** 2) * PI / 9, abs=1e-12)
    assert rep.total_upper > PI / 2
    assert rep.verdict == "inconclusive"


def test_theorem1_power_family_at_half_caps():
    fam = nr.PowerFamily(epsilon=0.5,
                         even=nr.BranchRule(cap_fraction=0.5),
                         odd=nr.BranchRule(cap_fraction=0.5, side="alpha"))
    rep = nr.theorem1_check(fam)
    assert rep.verdict == "riesz_basis_certified"
    # cap-fraction tails telescope exactly: the grand total is q * pi/2
    assert rep.total_upper == pytest.approx(0.5 * PI / 2, abs=1e-10)


def test_theorem1_power_family_at_full_caps_not_certified():
    fam = nr.PowerFamily(epsilon=0.5, even=nr.BranchRule(cap_fraction=1.0),
                         odd=nr.BranchRule(cap_fraction=1.0, side="beta"))
    rep = nr.theorem1_check(fam)
    assert rep.verdict == "inconclusive"


def test_theorem1_gamma_line():
    assert nr.theorem1_check(nr.GammaLine(4.0)).verdict == "riesz_basis_certified"
    rep = nr.theorem1_check(nr.GammaLine(5.0))
    assert math.isinf(rep.tail_bound)
    assert rep.verdict == "inconclusive"


def test_theorem1_monotone_in_entries():
    base = nr.theorem1_check(nr.FinitePerturbation((complete_point(2, alpha=9),)))
    more = nr.theorem1_check(nr.FinitePerturbation(
        (complete_point(2, alpha=9), complete_point(3, alpha=12.0))))
    assert more.partial_sum >= base.partial_sum


def test_theorem1_partial_matches_bound_cn():
    fam = nr.PowerFamily(epsilon=0.5, even=nr.BranchRule(c=0.05),
                         odd=nr.BranchRule(c=0.02, side="alpha"))
    for n in (2, 3, 6, 11):
        p = fam.point(n)
        direct = nr.bound_Cn(n, p.alpha, p.beta)
        k = nr.K_EVEN if n % 2 == 0 else nr._k_odd_alpha(n)
        term = k * fam.c_value(n) * n ** (-1.5)
        assert direct == pytest.approx(term, rel=1e-10)


# ----------------------------------------------------------------------
# criterion 2: diagonal odd entries, convergent even tail

def test_theorem2_all_diagonal():
    rep = nr.theorem2_check(nr.FinitePerturbation(()))
    assert rep.total_upper == 0.0
    assert rep.verdict == "riesz_basis_certified"


def test_theorem2_eq112_style():
    fam = nr.PowerFamily(epsilon=0.5, even=nr.BranchRule(c=0.4))
    rep = nr.theorem2_check(fam)
    assert rep.verdict == "riesz_basis_certified"
    assert rep.tail_bound > 0.0
    # the sum equals 0.4 * sum over even n of n^{-1.5} = 0.4 * 2^{-1.5} zeta(1.5)
    direct = 0.4 * 2 ** -1.5 * nr.zeta(1.5)
    assert rep.total_upper == pytest.approx(direct, abs=1e-10)


def test_theorem2_gamma_line_inconclusive():
    rep = nr.theorem2_check(nr.GammaLine(5.0))
    assert rep.verdict == "inconclusive"
    sg = math.sqrt(5.0)
    assert rep.partial_sum == pytest.approx((sg / 2 - 1) ** 2 * 1000, rel=1e-12)


def test_theorem2_rejects_odd_perturbations():
    with pytest.raises(OddEntriesNotDiagonal):
        nr.theorem2_check(nr.FinitePerturbation((complete_point(3, alpha=13.0),)))
    with pytest.raises(OddEntriesNotDiagonal):
        nr.theorem2_check(nr.PowerFamily(epsilon=0.5, even=None,
                                         odd=nr.BranchRule(c=0.1)))


def test_theorem2_finite_even_perturbation():
    sys = nr.FinitePerturbation((complete_point(2, alpha=9), diagonal_point(5)))
    rep = nr.theorem2_check(sys)
    assert rep.verdict == "riesz_basis_certified"
    assert rep.partial_sum == pytest.approx((3 / 2 - 1) ** 2, abs=1e-14)
    assert rep.r == pytest.approx(nr.K_EVEN * rep.total_upper)


# ----------------------------------------------------------------------
# the weakened single-point criterion term

def test_kato_term_diagonal():
    assert nr.kato_weakened_term(diagonal_point(7)) == 0.0


def test_kato_term_bounded_by_distance():
    for n in (2, 3, 6, 15):
        for p in curve_samples(n, 8, lo=1.001, hi=2.0):
            term = nr.kato_weakened_term(p)
            dist = cf.dist_sq_to_sine(p).value
            assert 0.0 <= term <= dist + 1e-15


def test_kato_term_vanishes_only_at_diagonal():
    ratios = np.linspace(1.0005, 1.5, 40)
    values = []
    for r in ratios:
        p = complete_point(2, alpha=float((2 * r) ** 2))
        values.append(nr.kato_weakened_term(p))
    values = np.array(values)
    assert np.all(values > 0.0)
    # continuous decay toward the diagonal end of the sweep
    assert values[0] < values[-1]


# ----------------------------------------------------------------------
# system specification plumbing

def test_power_family_points_on_curve():
    fam = nr.PowerFamily(epsilon=0.5, even=nr.BranchRule(cap_fraction=0.5),
                         odd=nr.BranchRule(cap_fraction=0.5, side="beta"))
    from fucik.spectrum import curve_residual
    for n in range(2, 12):
        p = fam.point(n)
        assert abs(curve_residual(p)) <= 1e-9
        want = fam.dominant_sqrt(n)
        assert max(p.sqrt_alpha, p.sqrt_beta) == pytest.approx(want, rel=1e-12)


def test_branch_rule_validation():
    with pytest.raises(ValueError):
        nr.BranchRule()
    with pytest.raises(ValueError):
        nr.BranchRule(c=0.1, cap_fraction=0.5)
    with pytest.raises(ValueError):
        nr.PowerFamily(epsilon=0.0, even=nr.BranchRule(c=0.1))


def test_finite_perturbation_validation():
    with pytest.raises(ValueError):
        nr.FinitePerturbation((complete_point(2, alpha=9), complete_point(2, alpha=9)))


def test_gamma_line_range_guard():
    from fucik.errors import GammaOutOfRange
    with pytest.raises(GammaOutOfRange):
        nr.GammaLine(5.7)
    with pytest.raises(GammaOutOfRange):
        nr.GammaLine(3.99)
