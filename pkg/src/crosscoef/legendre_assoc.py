"""Associated Legendre functions and their Chebyshev-weighted product integrals.

``P_n^m`` follows the convention with the ``(-1)^m`` phase, so
``P_m^m(x) = (-1)^m (2m)!/(2^m m!) (1 - x^2)^{m/2}``. The tables hold

    g[l, n] = int_{-1}^{1} P_l^m(x) P_n^m(x) / sqrt(1 - x^2) dx,   m <= l, n.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "eval_assoc_legendre",
    "assoc_legendre_table",
    "GTable",
    "g_boundary_even",
    "g_boundary_odd",
    "g_fill",
    "g_residual",
    "G_sequence",
    "H_sequence",
    "g_spot_checks",
]


def _log_seed(m: int) -> float:
    # log of (2m)! / (2^m m!)
    return math.lgamma(2 * m + 1) - m * math.log(2.0) - math.lgamma(m + 1)


def assoc_legendre_table(nmax: int, m: int, x) -> np.ndarray:
    """``P_n^m(x)`` for ``n = 0..nmax`` (rows); rows with ``n < m`` are zero."""
    if m < 0:
        raise ValueError("order must be nonnegative")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(np.abs(x) > 1):
        raise ValueError("argument must lie in [-1, 1]")
    out = np.zeros((nmax + 1, x.size))
    if nmax < m:
        return out
    sign = -1.0 if m % 2 else 1.0
    out[m] = sign * math.exp(_log_seed(m)) * (1.0 - x * x) ** (m / 2)
    for n in range(m, nmax):
        below = out[n - 1] if n > m else 0.0
        out[n + 1] = ((2 * n + 1) * x * out[n] - (m + n) * below) / (n - m + 1)
    return out


def eval_assoc_legendre(n: int, m: int, x):
    """``P_n^m(x)`` by upward recurrence in the degree."""
    if m > n:
        raise ValueError(f"order {m} exceeds degree {n}")
    scalar = np.ndim(x) == 0
    vals = assoc_legendre_table(n, m, x)[n]
    return float(vals[0]) if scalar else vals


def _log_binom(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def g_boundary_even(m: int, kmax: int) -> np.ndarray:
    """``g[m, m + 2k]`` for ``k = 0..kmax``."""
    if m < 0 or kmax < 0:
        raise ValueError("m and kmax must be nonnegative")
    out = np.empty(kmax + 1)
    for k in range(kmax + 1):
        lg = (
            math.lgamma(2 * m + 1)
            - (2 * m + 2 * k) * math.log(4.0)
            + _log_binom(2 * k, k)
            + _log_binom(2 * m, m)
            + _log_binom(2 * m + 2 * k, m + k)
        )
        out[k] = math.pi * math.exp(lg)
    return out


def g_boundary_odd(m: int, kmax: int) -> np.ndarray:
    """``g[m + 1, m + 2k + 1]`` for ``k = 0..kmax``."""
    if m < 0 or kmax < 0:
        raise ValueError("m and kmax must be nonnegative")
    out = np.empty(kmax + 1)
    for k in range(kmax + 1):
        lg = (
            math.log(m + 1)
            - (2 * m + 2 * k + 1) * math.log(4.0)
            + math.lgamma(2 * m + 1)
            + _log_binom(2 * k, k)
            + _log_binom(2 * m + 1, m)
            + _log_binom(2 * m + 2 * k + 1, m + k)
        )
        out[k] = 2 * math.pi * math.exp(lg)
    return out


class GTable:
    """Symmetric table of ``g[l, n]`` for one order ``m`` and ``m <= l, n <= N``.

    Indexed with the true degrees: ``table[l, n]``.
    """

    def __init__(self, m: int, N: int, entries: np.ndarray, residual: float | None = None):
        self.m = m
        self.N = N
        entries = np.array(entries, dtype=float)
        entries.setflags(write=False)
        self._entries = entries
        self.residual = residual

    @property
    def entries(self) -> np.ndarray:
        """Block for degrees ``m..N`` in both directions."""
        return self._entries

    def __getitem__(self, idx) -> float:
        l, n = idx
        if not (self.m <= l <= self.N and self.m <= n <= self.N):
            raise IndexError(f"({l}, {n}) outside degrees {self.m}..{self.N}")
        return float(self._entries[l - self.m, n - self.m])

    def full(self) -> np.ndarray:
        """``(N+1) x (N+1)`` array indexed by degree, NaN below order ``m``."""
        out = np.full((self.N + 1, self.N + 1), np.nan)
        out[self.m :, self.m :] = self._entries
        return out


def g_fill(m: int, N: int) -> GTable:
    """All ``g[l, n]``, ``m <= l, n <= N``, from the two seeded rows.

    Row ``n = m`` comes from the even closed form, row ``n = m + 1`` from the
    odd one; later rows follow from the three-term recurrence of ``P_n^m``
    applied on both sides of the integral. ``g[n, m - 1]`` is taken as 0
    since ``P_{m-1}^m`` vanishes. The upper triangle (``l >= n``) is kept
    and mirrored, and odd ``l + n`` entries are set to exactly 0.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if N < m:
        raise ValueError(f"N = {N} is below the order m = {m}")
    size = N - m + 1
    # row n valid for l <= lmax - (n - m - 1); need l = N at n = N
    lmax = max(2 * N - m, m + 1)
    width = lmax - m + 2
    rows = np.zeros((size + 1, width))  # rows[i, j] = g[m + i, m + j]
    j = np.arange(width)
    even = g_boundary_even(m, width // 2)
    odd = g_boundary_odd(m, width // 2)
    rows[0, 0::2] = even[: rows[0, 0::2].size]
    rows[1, 1::2] = odd[: rows[1, 1::2].size]

    l = m + j
    up = (l - m + 1) / (2 * l + 1)
    dn = (m + l) / (2 * l + 1)
    for i in range(1, size):
        n = m + i
        w = width - i  # columns of row i + 1 computable
        cur, prev = rows[i], rows[i - 1]
        left = np.zeros(w)
        left[1:] = cur[: w - 1]
        val = up[:w] * cur[1 : w + 1] + dn[:w] * left - (m + n) / (2 * n + 1) * prev[:w]
        rows[i + 1, :w] = (2 * n + 1) / (n - m + 1) * val

    block = rows[:size, :size].copy()
    parity = (np.add.outer(np.arange(size), np.arange(size)) % 2).astype(bool)
    block[parity] = 0.0
    upper = np.triu(block)
    block = upper + np.triu(upper, 1).T
    table = GTable(m, N, block)
    table.residual = g_residual(table) if size >= 3 else 0.0
    return table


def g_residual(table: GTable) -> float:
    """Largest violation of the two-sided recurrence over interior entries."""
    g = table.entries
    m = table.m
    size = g.shape[0]
    if size < 3:
        raise ValueError("table too small for a recurrence stencil")
    pad = np.zeros((size + 1, size + 1))
    pad[1:, 1:] = g  # pad[i+1, j+1] = g[m+i, m+j]; degree m-1 reads 0
    worst = 0.0
    for i in range(size - 1):
        n = m + i
        for jj in range(size - 1):
            l = m + jj
            lhs = (n - m + 1) / (2 * n + 1) * pad[i + 2, jj + 1] + (m + n) / (2 * n + 1) * pad[i, jj + 1]
            rhs = (l - m + 1) / (2 * l + 1) * pad[i + 1, jj + 2] + (m + l) / (2 * l + 1) * pad[i + 1, jj]
            worst = max(worst, abs(lhs - rhs))
    return worst


def G_sequence(m: int, nmax: int) -> np.ndarray:
    """``G_n = int (1-x^2)^{(m-1)/2} P_n^m dx`` for ``n = m..nmax`` (index ``n - m``)."""
    if not 0 <= m <= nmax:
        raise ValueError("need 0 <= m <= nmax")
    out = np.zeros(nmax - m + 1)
    sign = -1.0 if m % 2 else 1.0
    out[0] = g_boundary_even(m, 0)[0] / (sign * math.exp(_log_seed(m)))
    for n in range(m + 1, nmax, 2):
        out[n + 1 - m] = (n * n - m * m) / ((n + 1) ** 2 - m * m) * out[n - 1 - m]
    return out


def H_sequence(m: int, nmax: int) -> np.ndarray:
    """``H_n = int x (1-x^2)^{(m-1)/2} P_n^m dx`` for ``n = m..nmax``.

    Nonzero only for odd ``m + n``; ``H_m`` itself pairs with ``P_{m-1}^m = 0``.
    """
    G = G_sequence(m, nmax)
    out = np.zeros_like(G)
    for n in range(m + 1, nmax + 1):
        out[n - m] = (m + n) / (m + n + 1) * G[n - 1 - m]
    return out


def g_spot_checks(m: int) -> dict[str, float]:
    """Closed values of ``g[m+2, m]`` and ``g[m+2, m+2]``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    near = (
        math.lgamma(2 * m + 1)
        - (2 * m + 1) * math.log(4.0)
        + _log_binom(2 * m, m)
        + _log_binom(2 * m + 1, m)
    )
    diag = (
        math.lgamma(2 * m + 2)
        - math.log(2.0)
        - (2 * m + 2) * math.log(4.0)
        + math.log((8 * m * m + 20 * m + 11) / (2 * m + 3))
        + _log_binom(2 * m, m)
        + _log_binom(2 * m + 3, m + 1)
    )
    return {"g_m+2,m": math.pi * math.exp(near), "g_m+2,m+2": math.pi * math.exp(diag)}
