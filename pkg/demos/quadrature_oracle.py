"""
The quadrature oracle
=====================

Every table is checked against direct Gauss quadrature. Rules come from the
three-term recurrence. For weights without a closed recurrence, the
coefficients come from a Stieltjes run on a fine discretization.
"""
# %%
import numpy as np

from crosscoef.oracle import gauss_from_coeffs, gauss_laguerre, laguerre_moment
from crosscoef.recurrence import FamilySpec, laguerre_coeffs, stieltjes_coeffs

# %%
# A 32-point generalized Laguerre rule integrates x^j x^beta e^{-x} exactly to j = 63.
beta = 0.5
rule = gauss_laguerre(32, beta)
worst = max(abs(rule.integrate(rule.nodes**j) / laguerre_moment(j, beta) - 1) for j in range(64))
print(f"worst relative moment error: {worst:.1e}")

# %%
# Stieltjes recovers the recurrence from nodes and weights alone.
a, b = stieltjes_coeffs(rule, 20).arrays(20)
ref = np.array([laguerre_coeffs(n, beta) for n in range(20)])
print("max coefficient error:", max(np.abs(a - ref[:, 0]).max(), np.abs(b - ref[:, 1]).max()))

# %%
# Ultraspherical weights (1 - x^2)^lam use Stieltjes-built coefficients.
seq = FamilySpec("ultraspherical", 1.5).coefficients()
print("b_0..b_4:", np.round(seq.arrays(5)[1], 6))
print("nodes of the 5-point rule:", np.round(gauss_from_coeffs(seq, 5).nodes, 6))
