"""
Integrals of Legendre products against x^2
==========================================

The table ``D[m, n] = int p_m(x) p_n(x) x^2 dx`` over (-1, 1), with ``p_n`` the
orthonormal Legendre polynomials, is pentadiagonal with a checkerboard of
zeros. Given only its first row, the cross rule recovers the rest.
"""
# %%
import numpy as np

from crosscoef.crossrule import CrossRuleProblem, fill
from crosscoef.families import CLOSED_TABLES, legendre_x2_boundary
from crosscoef.recurrence import FamilySpec

np.set_printoptions(precision=4, suppress=True, linewidth=100)

# %%
# The first row is (1/3, 0, 2 sqrt(5)/15, 0, 0, ...). Every filled row
# consumes one more boundary entry, so 2N+1 entries give an (N+1)-square block.
N = 8
P = FamilySpec("legendre").coefficients()
table = fill(CrossRuleProblem(P, P, legendre_x2_boundary(2 * N + 1)), N)
D = table.block(N + 1, N + 1)
print(D)

# %%
# Compare with the closed expressions for the diagonal and the second diagonals.
closed = CLOSED_TABLES["legendre-x2"].table(N + 1, N + 1)
print("max deviation from closed form:", np.abs(D - closed).max())
print("stencil residual of the fill:  ", table.metadata["residual"])

# %%
# Entries beyond the trapezoid were never computed, so they cannot be read.
try:
    table[N, 2 * N]
except IndexError as exc:
    print("IndexError:", exc)
