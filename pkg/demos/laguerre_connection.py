"""
Converting between Laguerre bases
=================================

Expanding the orthonormal Laguerre polynomial with parameter alpha in the basis
with parameter beta gives a lower triangular table of connection coefficients.
The fill starts from the single corner entry. The first column, known in closed
form, then serves as an independent check.
"""
# %%
import numpy as np

from crosscoef.cases import build_case
from crosscoef.crossrule import CrossRuleProblem, consistency_check, fill
from crosscoef.families import CLOSED_TABLES, laguerre_connection_boundary
from crosscoef.recurrence import FamilySpec

np.set_printoptions(precision=4, suppress=True, linewidth=100)

# %%
alpha, beta, N = 2.5, 0.5, 10
L = 2 * N + 1
col0 = np.array([laguerre_connection_boundary(m, alpha, beta) for m in range(L)])
row0 = np.zeros(L)
row0[0] = col0[0]  # D[0, n] = 0 for n >= 1: the table is lower triangular

problem = CrossRuleProblem(FamilySpec("laguerre", alpha).coefficients(),
                           FamilySpec("laguerre", beta).coefficients(), row0, col0)
table = fill(problem, N)
print(table.block(6, 6))
print(consistency_check(table, col0, tol=1e-12))

# %%
# The reverse conversion undoes the forward one.
fwd = CLOSED_TABLES["laguerre-connect"].table(N + 1, N + 1, alpha=alpha, beta=beta)
rev = CLOSED_TABLES["laguerre-connect"].table(N + 1, N + 1, alpha=beta, beta=alpha)
print("max |fwd @ rev - I| =", np.abs(fwd @ rev - np.eye(N + 1)).max())

# %%
# All three pipelines at once: recurrence fill, closed form, and quadrature.
result = build_case("laguerre-connect", 16, alpha=alpha, beta=beta)
for key, value in result.report().items():
    print(f"{key:>18s}: {value:.2e}")
