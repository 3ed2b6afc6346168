"""Closed-form tables and boundary data for the worked families.

Four tables are covered:

* orthonormal Legendre against ``x^2 dx`` on (-1, 1);
* Laguerre-Laguerre connection coefficients, orthonormal ``L~^{(alpha)}``
  against orthonormal ``L~^{(beta)}`` under ``x^beta e^{-x} dx``;
* the symmetric-completed signed Laguerre table ``E``;
* the ultraspherical table ``F`` in classical Jacobi normalization.

Structural zeros are returned as exact ``0.0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .recurrence import FamilySpec, norm_constants

__all__ = [
    "ClosedFormTable",
    "pochhammer",
    "legendre_x2_closed",
    "legendre_x2_boundary",
    "laguerre_connection_boundary",
    "laguerre_connection_closed",
    "laguerre_signed_closed",
    "laguerre_signed_integral",
    "ultraspherical_F_closed",
    "ultraspherical_F_orthonormal",
    "CLOSED_TABLES",
]


def pochhammer(z: float, k: int) -> float:
    """Rising factorial ``z (z+1) ... (z+k-1)`` by iterated product."""
    out = 1.0
    for j in range(k):
        out *= z + j
    return out


def _log_ratio(m: int, n: int, alpha: float, beta: float) -> float:
    # log of m! Gamma(n+1+beta) / (n! Gamma(m+1+alpha))
    return (
        math.lgamma(m + 1)
        + math.lgamma(n + 1 + beta)
        - math.lgamma(n + 1)
        - math.lgamma(m + 1 + alpha)
    )


def legendre_x2_closed(m: int, n: int) -> float:
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if (m + n) % 2 or abs(m - n) >= 3:
        return 0.0
    if m == n:
        return (2 * n * n + 2 * n - 1) / ((2 * n - 1) * (2 * n + 3))
    k = min(m, n)
    return (k + 1) * (k + 2) / ((2 * k + 3) * math.sqrt((2 * k + 1) * (2 * k + 5)))


def legendre_x2_boundary(length: int) -> np.ndarray:
    """Row 0: ``(1/3, 0, 2 sqrt(5)/15, 0, 0, ...)``."""
    row = np.zeros(length)
    row[0] = 1.0 / 3.0
    if length > 2:
        row[2] = 2.0 * math.sqrt(5.0) / 15.0
    return row


def laguerre_connection_boundary(m: int, alpha: float, beta: float) -> float:
    """``D[m, 0]`` of the Laguerre connection table."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not (alpha > -1 and beta > -1):
        raise ValueError("alpha and beta must exceed -1")
    poch = pochhammer(alpha - beta, m)
    if poch == 0.0:
        return 0.0
    scale = math.exp(0.5 * (math.lgamma(1 + beta) - math.lgamma(m + 1) - math.lgamma(m + 1 + alpha)))
    return (-1) ** m * scale * poch


def laguerre_connection_closed(m: int, n: int, alpha: float, beta: float) -> float:
    """Coefficient of ``L~_n^{(beta)}`` in ``L~_m^{(alpha)}``; zero above the diagonal."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if not (alpha > -1 and beta > -1):
        raise ValueError("alpha and beta must exceed -1")
    if n > m:
        return 0.0
    k = m - n
    coef = pochhammer(alpha - beta, k)
    if coef == 0.0:
        return 0.0
    # (alpha-beta)_k / k! folded into log space only for its magnitude
    log_mag = math.log(abs(coef)) - math.lgamma(k + 1) + 0.5 * _log_ratio(m, n, alpha, beta)
    return (-1) ** k * math.copysign(1.0, coef) * math.exp(log_mag)


def laguerre_signed_closed(m: int, n: int, alpha: float) -> float:
    """Signed Laguerre table ``E``: zero diagonal, ``-1/2 sqrt(...)`` elsewhere.

    Off the diagonal the value for ``m > n`` is mirrored to ``(n, m)``.
    """
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if m == n:
        return 0.0
    hi, lo = max(m, n), min(m, n)
    return -0.5 * math.exp(0.5 * _log_ratio(hi, lo, alpha, alpha))


def laguerre_signed_integral(m: int, n: int, alpha: float) -> float:
    """``int L~_m L~_n d(x^alpha e^{-x})`` for the orthonormal Laguerre family.

    Integration by parts with ``d/dx L_m = -sum_{k<m} L_k`` gives
    ``(-1)^{m+n} sqrt(...)`` off the diagonal and 0 on it, i.e.
    ``-2 (-1)^{m+n}`` times :func:`laguerre_signed_closed`.
    """
    return -2.0 * (-1) ** (m + n) * laguerre_signed_closed(m, n, alpha)


def ultraspherical_F_closed(m: int, n: int, alpha: float) -> float:
    """``int (1-x^2)^{alpha-1} P_m^{(alpha,alpha)} P_n^{(alpha,alpha)} dx``."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if (m + n) % 2:
        return 0.0
    hi, lo = max(m, n), min(m, n)
    log_val = (
        alpha * math.log(4.0)
        - math.log(alpha)
        + math.lgamma(hi + 1 + alpha)
        + math.lgamma(lo + 1 + alpha)
        - math.lgamma(lo + 1)
        - math.lgamma(hi + 1 + 2 * alpha)
    )
    return math.exp(log_val)


def ultraspherical_F_orthonormal(F: np.ndarray, alpha: float) -> np.ndarray:
    """Rescale an ``F`` block to orthonormal ultraspherical polynomials."""
    M, N = F.shape
    h = norm_constants(FamilySpec("ultraspherical", alpha, "classical"), max(M, N))
    s = 1.0 / np.sqrt(h)
    return F * s[:M, None] * s[None, :N]


@dataclass(frozen=True)
class ClosedFormTable:
    """Evaluator plus its declared structure."""

    name: str
    evaluator: Callable[..., float]
    symmetry: str  # "symmetric" or "lower"
    support: Callable[[int, int], bool]

    def __call__(self, m: int, n: int, **params) -> float:
        if not self.support(m, n):
            return 0.0
        return self.evaluator(m, n, **params)

    def table(self, M: int, N: int, **params) -> np.ndarray:
        return np.array([[self(m, n, **params) for n in range(N)] for m in range(M)])


CLOSED_TABLES = {
    "legendre-x2": ClosedFormTable(
        "legendre-x2",
        legendre_x2_closed,
        "symmetric",
        lambda m, n: (m + n) % 2 == 0 and abs(m - n) < 3,
    ),
    "laguerre-connect": ClosedFormTable(
        "laguerre-connect", laguerre_connection_closed, "lower", lambda m, n: n <= m
    ),
    "laguerre-signed": ClosedFormTable(
        "laguerre-signed", laguerre_signed_closed, "symmetric", lambda m, n: m != n
    ),
    "ultraspherical-F": ClosedFormTable(
        "ultraspherical-F", ultraspherical_F_closed, "symmetric", lambda m, n: (m + n) % 2 == 0
    ),
}
