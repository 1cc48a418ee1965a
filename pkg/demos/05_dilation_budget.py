"""The dilation line: dilated profiles, sine coefficients, and the budget E.

For points (n^2 gamma / 4, n^2 gamma / (2 sqrt(gamma) - 2)^2) the even
eigenfunctions are dilates of the n = 2 profile.  The script checks the
dilation identity on a grid, tabulates the sine coefficients A_k of the
base profile against the quadrature oracle, and scans the nearness budget
E(gamma), reporting where it crosses 1.
"""

import math
import pathlib

import numpy as np

from fucik import (
    E_gamma_extended,
    SineMode,
    breakpoints,
    build,
    ck_bound,
    fourier_Ak,
    gamma_admissible_max,
    gamma_line_point,
    inner_numeric,
)

GAMMA = 5.0

f2 = build(gamma_line_point(2, GAMMA))
xs = np.linspace(0, math.pi, 800)
for n in (4, 8, 12):
    fn = build(gamma_line_point(n, GAMMA))
    gap = np.max(np.abs(fn(xs) - f2(np.mod(n * xs / 2, math.pi))))
    print(f"dilation identity n = {n:2d}: max gap {gap:.3e}")

print("\nsine coefficients of the base profile at gamma = 5:")
bp = breakpoints(f2)
for k in range(1, 7):
    closed = fourier_Ak(GAMMA, k)
    oracle = (2 / math.pi) * inner_numeric(f2, SineMode(k), bp)
    deviation = abs(1.0 - closed) if k == 2 else abs(closed)
    print(f"  A_{k} = {closed:+.10f}   (oracle delta {abs(closed - oracle):.1e}; "
          f"deviation {deviation:.6f} <= bound {ck_bound(GAMMA, k):.6f})")

print("\nbudget scan:")
out = pathlib.Path(__file__).with_name("budget_scan.csv")
with out.open("w", newline="\n") as fh:
    fh.write("gamma,E\n")
    for g in np.arange(4.0, 6.0, 0.02):
        fh.write(f"{g:.17g},{E_gamma_extended(float(g)):.17g}\n")
print(f"  wrote {out}")

gstar = gamma_admissible_max(1e-8)
print(f"  largest gamma with E < 1: {gstar:.6f}  (E there = {E_gamma_extended(gstar):.9f})")
