"""Construction and evaluation of normalized piecewise-sine eigenfunctions.

For a point (alpha, beta) on the n-th spectrum curve the normalized
eigenfunction is fixed by requiring sup |f| = 1 on [0, pi] and f'(0) > 0.
Writing l1 = pi/sqrt(alpha), l2 = pi/sqrt(beta), l = l1 + l2, it is, for
alpha >= n^2 >= beta,

    f(x) =  (sqrt(beta)/sqrt(alpha)) * sin(sqrt(alpha) (x - k l))   on [k l, k l + l1)
    f(x) = -sin(sqrt(beta) (x - k l - l1))                          on [k l + l1, (k+1) l)

and for beta > n^2 > alpha the amplitude factor moves to the negative
bumps instead:

    f(x) =  sin(sqrt(alpha) (x - k l))                              on [k l, k l + l1)
    f(x) = -(sqrt(alpha)/sqrt(beta)) * sin(sqrt(beta) (x - k l - l1)) otherwise,

with k = 0, 1, 2, ...  On the diagonal alpha = beta = n^2 both reduce to
sin(n x).  The representation extends l-periodically to all x >= 0, which
is what the dilation identities of :mod:`fucik.paleywiener` rely on.

Evaluation is vectorized: ``evaluate`` accepts scalars or numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotOnCurve, OutOfDomain
from .spectrum import TAU_CURVE, BumpLengths, FucikPoint, curve_residual

#: tolerance on the sup-norm-1 normalization
TAU_SUP = 1e-12

#: slack beyond the right endpoint tolerated (callers' accumulated round-off)
_EDGE_SLACK = 1e-12


@dataclass(frozen=True)
class SineMode:
    """The comparator sin(n x); its squared norm over (0, pi) is pi/2."""

    n: int

    def __call__(self, x):
        return np.sin(self.n * np.asarray(x, dtype=float))

    @property
    def norm_sq(self) -> float:
        return math.pi / 2


@dataclass(frozen=True)
class FucikEigenfunction:
    """Exact piecewise-sine representation of a normalized eigenfunction."""

    point: FucikPoint
    bumps: BumpLengths
    positive_amplitude: float
    negative_amplitude: float

    def __call__(self, x):
        return evaluate(self, x)


def build(p: FucikPoint) -> FucikEigenfunction:
    """Construct the normalized eigenfunction for an on-curve point.

    Raises NotOnCurve if the curve-equation defect of ``p`` exceeds the
    membership tolerance.
    """
    res = curve_residual(p)
    if abs(res) > TAU_CURVE:
        raise NotOnCurve(f"curve-equation defect {res:.3e} exceeds {TAU_CURVE:.1e}")
    sa, sb = p.sqrt_alpha, p.sqrt_beta
    if p.case == "beta_dominant":
        amp_pos, amp_neg = 1.0, sa / sb
    elif p.case == "alpha_dominant":
        amp_pos, amp_neg = sb / sa, 1.0
    else:
        amp_pos, amp_neg = 1.0, 1.0
    return FucikEigenfunction(point=p, bumps=p.bump_lengths(),
                              positive_amplitude=amp_pos, negative_amplitude=amp_neg)


def evaluate(f: FucikEigenfunction, x):
    """Evaluate f at x in [0, pi] (scalar or array).

    Branch selection is exact: x is located inside its bump pair
    [k l, k l + l1) or [k l + l1, (k+1) l).  Points within 1e-12 outside
    the domain are clamped onto it; anything further raises OutOfDomain.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(arr < -_EDGE_SLACK) or np.any(arr > math.pi + _EDGE_SLACK):
        raise OutOfDomain("evaluation point outside [0, pi]")
    arr = np.clip(arr, 0.0, math.pi)

    sa, sb = f.point.sqrt_alpha, f.point.sqrt_beta
    l1, L = f.bumps.l1, f.bumps.l
    # clamp k so that x = pi falls into the last bump instead of a fresh one
    k = np.floor(arr / L)
    k = np.minimum(k, max(math.ceil(math.pi / L) - 1, 0))
    t = arr - k * L
    pos = f.positive_amplitude * np.sin(sa * t)
    neg = -f.negative_amplitude * np.sin(sb * (t - l1))
    out = np.where(t < l1, pos, neg)
    if np.isscalar(x) or np.ndim(x) == 0:
        return float(out)
    return out


def breakpoints(f: FucikEigenfunction) -> np.ndarray:
    """Sorted junction points {0, l1, l, l+l1, 2l, ...} within [0, pi].

    These are the only points where f is not smooth; the quadrature oracle
    never integrates across them.
    """
    l1, L = f.bumps.l1, f.bumps.l
    pts = [0.0]
    k = 0
    while True:
        for candidate in (k * L + l1, (k + 1) * L):
            if candidate < math.pi - 1e-12:
                pts.append(candidate)
            else:
                pts.append(math.pi)
                return np.asarray(pts)
        k += 1
