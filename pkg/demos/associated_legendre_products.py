"""
Products of associated Legendre functions
=========================================

``g[l, n] = int P_l^m(x) P_n^m(x) / sqrt(1 - x^2) dx`` is needed when
spherical-harmonic expansions meet a Chebyshev-like weight. Two closed boundary
rows seed a recurrence in the degree. Gauss-Chebyshev quadrature checks the result.
"""
# %%
import math

import numpy as np

from crosscoef.cases import build_gtable
from crosscoef.legendre_assoc import g_fill

np.set_printoptions(precision=4, suppress=True, linewidth=100)

# %%
t = g_fill(0, 6)
print(t.entries / math.pi)  # in units of pi: 1, 1/2, 1/4, 11/32, ...
print("g[2, 2] == 11 pi / 32:", math.isclose(t[2, 2], 11 * math.pi / 32, rel_tol=1e-14))

# %%
# Larger orders grow quickly, like (2m)!, but stay accurate relative to their size.
for m in (0, 4, 10):
    g, report = build_gtable(m, 20)
    print(f"m={m:2d}  max|g|={np.abs(g).max():.3e}  " +
          "  ".join(f"{k}={v:.1e}" for k, v in report.items()))
