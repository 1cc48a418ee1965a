"""Dilation operators and the Paley-Wiener nearness budget E(gamma).

For gamma in [4, 5.682] the even-index eigenfunctions of the line family
(see :func:`fucik.spectrum.gamma_line_point`) are dilates of the n = 2
profile: f_n(x) = f_2(n x / 2) with f_2 continued pi-periodically.  The
dilation operators

    T_k g(x) = g~(k x / 2),     g~ the period-pi continuation of g,

send sin(n x) to sin(k n x / 2) for every even n, T_2 is the identity,
and their operator norms are exactly 1 for even k and sqrt(1 + 1/k) for
odd k (the odd-k supremum is attained by any g supported in (0, pi/2)).

The antiperiodic continuation (-1)^kappa g(x - pi kappa), exposed here as
:func:`antiperiodic_extend`, reproduces sin itself for odd frequencies but
flips the sign of even-frequency sines on every other period; building T_k
on it would break the sine mapping above for k >= 3, so the operators use
the periodic continuation.  Both continuations yield identical operator
norms (signs square away).

The coefficients A_k of the sine expansion of f_2 have the closed form

    A_k = (2/pi) (gamma^2/(sqrt(g)-1)) (2-sqrt(g)) sin(k pi/sqrt(g))
          / ((k^2-gamma)(k^2 (sqrt(g)-1)^2 - gamma)),

and the budget E(gamma) accumulates the bound coefficients c_k times the
operator norms, with k = 1..4 explicit and the k >= 5 tail controlled by
the closed constant pi^2/108 - 536741/6350400 = sum_{k>=5} (k^2-9)^{-2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .eigenfunction import SineMode, breakpoints, build
from .errors import GammaOutOfRange, NegativeArgument, OddIndex
from .quadrature import inner_numeric
from .spectrum import gamma_line_point

GAMMA_MIN = 4.0
GAMMA_MAX = 5.682

#: resonance half-width on |k^2 - gamma| and |k^2 (sqrt(g)-1)^2 - gamma|
TAU_RESONANCE = 1e-9

#: sum_{k=5}^infty (k^2 - 9)^{-2}, in closed form
TAIL_CONSTANT = math.pi ** 2 / 108 - 536741 / 6350400

_FALLBACK_TOL = 1e-12


def antiperiodic_extend(g: Callable, x):
    """Value of the antiperiodic continuation (-1)^kappa g(x - pi kappa).

    kappa = floor(x / pi).  Defined for x >= 0 only.  Scalars or arrays.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise NegativeArgument("antiperiodic extension is defined for x >= 0")
    kappa = np.floor(arr / math.pi)
    vals = np.asarray(g(arr - math.pi * kappa), dtype=float)
    out = np.where(kappa % 2 == 0, vals, -vals)
    if np.isscalar(x) or np.ndim(x) == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class AntiperiodicFunction:
    """Callable wrapper around :func:`antiperiodic_extend` for a fixed base."""

    base: Callable

    def __call__(self, x):
        return antiperiodic_extend(self.base, x)


def _periodic_wrap(y: np.ndarray) -> np.ndarray:
    # map onto [0, pi], sending positive multiples of pi to pi rather than 0
    # so that T_2 is the identity up to and including the right endpoint
    t = np.mod(y, math.pi)
    return np.where((t == 0) & (y > 0), math.pi, t)


def apply_Tk(k: int, g: Callable) -> Callable:
    """The dilation operator T_k: x -> g~(k x / 2), period-pi continuation.

    On sines: apply_Tk(k, sin(n .)) equals sin(k n . / 2) pointwise for
    every even n, and T_2 is the identity.
    """
    if k < 1:
        raise ValueError(f"dilation index must be >= 1, got {k}")

    def transformed(x):
        arr = np.asarray(x, dtype=float)
        out = np.asarray(g(_periodic_wrap(k * arr / 2.0)), dtype=float)
        if np.isscalar(x) or np.ndim(x) == 0:
            return float(out)
        return out

    return transformed


def Tk_norm(k: int) -> float:
    """Exact operator norm of T_k: 1 for even k, sqrt(1 + 1/k) for odd k."""
    if k < 1:
        raise ValueError(f"dilation index must be >= 1, got {k}")
    if k % 2 == 0:
        return 1.0
    return math.sqrt((k + 1) / k)


@dataclass(frozen=True)
class DilationOperator:
    """T_k as a value: carries its index and exact norm."""

    k: int

    @property
    def norm(self) -> float:
        return Tk_norm(self.k)

    def __call__(self, g: Callable) -> Callable:
        return apply_Tk(self.k, g)


def _base_profile(gamma: float):
    return build(gamma_line_point(2, gamma))


def fourier_Ak(gamma: float, k: int) -> float:
    """Sine coefficient A_k of the n = 2 line-family profile.

    Closed form away from the resonances k^2 = gamma and
    k^2 (sqrt(gamma)-1)^2 = gamma; inside a 1e-9 band around either, the
    quadrature oracle evaluates (2/pi) <f_2, sin(k .)> instead.
    """
    if gamma < GAMMA_MIN:
        raise GammaOutOfRange(f"gamma must be >= {GAMMA_MIN}, got {gamma}")
    if k < 1:
        raise ValueError(f"coefficient index must be >= 1, got {k}")
    sg = math.sqrt(gamma)
    d1 = k * k - gamma
    d2 = k * k * (sg - 1.0) ** 2 - gamma
    if min(abs(d1), abs(d2)) < TAU_RESONANCE:
        f2 = _base_profile(gamma)
        return (2 / math.pi) * inner_numeric(f2, SineMode(k), breakpoints(f2), _FALLBACK_TOL)
    return (2 / math.pi) * (gamma * gamma / (sg - 1.0)) * (2.0 - sg) \
        * math.sin(k * math.pi / sg) / (d1 * d2)


def ck_bound(gamma: float, k: int) -> float:
    """Upper bound on the deviation coefficient c_k of the line family.

    c_1 bounds |A_1|, c_2 bounds 1 - A_2 (which is nonnegative for gamma
    in range), and for k >= 3 the bound dominates |A_k|.  All three carry
    the factor sqrt(gamma) - 2 and vanish at gamma = 4.
    """
    _require_gamma_range(gamma)
    if k < 1:
        raise ValueError(f"coefficient index must be >= 1, got {k}")
    sg = math.sqrt(gamma)
    if k == 1:
        return (2 / math.pi) * gamma * gamma * (sg - 2.0) / (
            (sg - 1.0) ** 2 * (sg + 1.0) * (2 * sg - 1.0)
        )
    if k == 2:
        num = ((3 + math.pi ** 2) * gamma + (9 - 2 * math.pi ** 2) * sg - 6.0) * (sg - 2.0)
        return num / (3 * (sg - 1.0) * (sg + 2.0) * (3 * sg - 2.0))
    return (2 / math.pi) * gamma * gamma * (sg - 2.0) / (sg - 1.0) / (k * k - gamma) ** 2


def _require_gamma_range(gamma: float) -> None:
    if not (GAMMA_MIN <= gamma <= GAMMA_MAX):
        raise GammaOutOfRange(
            f"gamma must lie in [{GAMMA_MIN}, {GAMMA_MAX}], got {gamma}"
        )


def E_gamma_extended(gamma: float) -> float:
    """The budget formula on the wider interval [4, 9).

    Same expression as :func:`E_gamma` without the admissibility range
    check; used by the bisection search and by exploratory scans.
    """
    if not (GAMMA_MIN <= gamma < 9.0):
        raise GammaOutOfRange(f"extended budget needs gamma in [4, 9), got {gamma}")
    sg = math.sqrt(gamma)
    common = (2 / math.pi) * gamma * gamma * (sg - 2.0) / (sg - 1.0)
    s1 = math.sqrt(2.0) * (2 / math.pi) * gamma * gamma * (sg - 2.0) / (
        (sg - 1.0) ** 2 * (sg + 1.0) * (2 * sg - 1.0)
    )
    s2 = ((3 + math.pi ** 2) * gamma + (9 - 2 * math.pi ** 2) * sg - 6.0) * (sg - 2.0) / (
        3 * (sg - 1.0) * (sg + 2.0) * (3 * sg - 2.0)
    )
    s3 = math.sqrt(4.0 / 3.0) * common / (9.0 - gamma) ** 2
    s4 = common / (16.0 - gamma) ** 2
    s5 = math.sqrt(6.0 / 5.0) * common * TAIL_CONSTANT
    return s1 + s2 + s3 + s4 + s5


def E_gamma(gamma: float) -> float:
    """Accumulated nearness budget sum c_k ||T_k||, bounded summand-wise.

    Explicit k = 1..4 terms weighted by the exact operator norms sqrt(2),
    1, sqrt(4/3), 1, plus the k >= 5 tail weighted sqrt(6/5) through the
    closed tail constant.  E(4) = 0 exactly and E is strictly increasing.
    A budget below 1 certifies the Paley-Wiener nearness hypothesis for
    the line family at this gamma.
    """
    _require_gamma_range(gamma)
    return E_gamma_extended(gamma)


def gamma_admissible_max(tol: float) -> float:
    """Largest gamma with E(gamma) < 1, located by bisection on [4, 8].

    Postcondition: E(result) < 1 <= E(result + tol).
    """
    if tol < 1e-10:
        raise ValueError(f"tol must be >= 1e-10, got {tol}")
    lo, hi = 4.0, 8.0
    if E_gamma_extended(hi) < 1.0:
        return hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if E_gamma_extended(mid) < 1.0:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class PaleyWienerBudget:
    """The bound coefficients, operator norms, and accumulated budget.

    ``c`` holds the bounds for k = 1..4 and the tail constant's coefficient
    weight as its last entry; ``t`` the matching operator-norm weights.
    ``E < 1`` certifies the criterion's hypothesis at this gamma.
    """

    gamma: float
    c: tuple
    t: tuple
    E: float


def budget(gamma: float) -> PaleyWienerBudget:
    """Assemble the full budget record at one gamma."""
    _require_gamma_range(gamma)
    sg = math.sqrt(gamma)
    common = (2 / math.pi) * gamma * gamma * (sg - 2.0) / (sg - 1.0)
    c = tuple(ck_bound(gamma, k) for k in (1, 2, 3, 4)) + (common * TAIL_CONSTANT,)
    t = (Tk_norm(1), Tk_norm(2), Tk_norm(3), Tk_norm(4), math.sqrt(6.0 / 5.0))
    return PaleyWienerBudget(gamma=gamma, c=c, t=t, E=E_gamma(gamma))


def theoremD_residual(gamma: float, n: int, K: int, grid_points: int = 1024) -> float:
    """Sup-grid residual of f_n against its truncated dilated sine series.

    Evaluates max over a uniform grid of |f_n(x) - sum_{k<=K} A_k
    sin(k n x / 2)|.  At gamma = 4 every coefficient except A_2 = 1
    vanishes and the residual is zero.  For n = 2 the series is the plain
    sine expansion of f_2 on (0, pi) and the residual decays with K; for
    larger even n the dilated argument leaves (0, pi) and the residual
    instead stalls at the gap between the period-pi continuation of f_2
    and the odd 2pi-periodic continuation that the sine series converges
    to, so only the dilation structure, not convergence, can be read off.
    """
    if n % 2 != 0:
        raise OddIndex(f"theoremD_residual needs an even index, got {n}")
    if K < 4:
        raise ValueError(f"truncation K must be >= 4, got {K}")
    if gamma < GAMMA_MIN:
        raise GammaOutOfRange(f"gamma must be >= {GAMMA_MIN}, got {gamma}")
    x = np.linspace(0.0, math.pi, grid_points)
    fn = build(gamma_line_point(n, gamma))
    coeffs = np.array([fourier_Ak(gamma, k) for k in range(1, K + 1)])
    ks = np.arange(1, K + 1, dtype=float)
    series = np.sin(np.outer(x, ks * n / 2.0)) @ coeffs
    return float(np.max(np.abs(fn(x) - series)))


def dilation_factor(n: int, gamma: float) -> float:
    """Scale c with f_n(x) = f_2(c x) on the line family (period-pi wrap).

    Even n gives c = n/2; odd n gives c = (n-1)/2 + 1/sqrt(gamma).
    """
    if n < 2:
        raise ValueError(f"dilation factor needs n >= 2, got {n}")
    if n % 2 == 0:
        return n / 2.0
    return (n - 1) / 2.0 + 1.0 / math.sqrt(gamma)
