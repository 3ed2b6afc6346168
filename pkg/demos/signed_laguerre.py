"""
A signed measure: where the printed table and the integral part ways
====================================================================

With ``d eta = d(x^alpha e^{-x})``, the integrals of orthonormal Laguerre
products form a symmetric table with a zero diagonal. The published closed
expression ``-1/2 sqrt(m! Gamma(n+1+alpha) / (Gamma(m+1+alpha) n!))`` has the
right magnitudes. It is off by a factor of ``-2 (-1)^(m+n)``, which is the
pattern of the skew differentiation matrix it came from. This script shows both
tables and the quadrature that decides between them.
"""
# %%
import numpy as np

from crosscoef.crossrule import CoefficientTable, residual
from crosscoef.families import CLOSED_TABLES, laguerre_signed_integral
from crosscoef.oracle import oracle_table, signed_laguerre_rule
from crosscoef.recurrence import FamilySpec

np.set_printoptions(precision=4, suppress=True, linewidth=100)

# %%
alpha, N = 1.0, 6
lag = FamilySpec("laguerre", alpha)
seq = lag.coefficients()
oracle = oracle_table(lag, lag, signed_laguerre_rule(alpha, 40), N, N, density_degree=1)
printed = CLOSED_TABLES["laguerre-signed"].table(N, N, alpha=alpha)
integral = np.array([[laguerre_signed_integral(m, n, alpha) for n in range(N)] for m in range(N)])

print("quadrature:\n", oracle)
print("printed closed form:\n", printed)

# %%
for name, T in [("printed", printed), ("integral", integral)]:
    dev = np.abs(T - oracle).max()
    res = residual(CoefficientTable.rectangular(T), seq, seq)
    print(f"{name:>9s}: |T - quadrature| = {dev:.2e}   stencil residual = {res:.2e}")
