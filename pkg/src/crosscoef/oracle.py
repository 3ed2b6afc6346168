"""Quadrature rules and direct evaluation of product integrals.

Everything in this module is independent of the cross-rule fill: integrals
are computed from node values of the polynomials, never from neighbouring
table entries.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .recurrence import CoefficientSequence, FamilySpec

__all__ = [
    "QuadratureRule",
    "gauss_from_coeffs",
    "gauss_legendre",
    "gauss_laguerre",
    "gauss_chebyshev",
    "signed_laguerre_rule",
    "oracle_entry",
    "oracle_table",
    "default_nodes",
    "legendre_moment",
    "laguerre_moment",
    "chebyshev_moment",
]


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    domain: str = ""
    weight: str = ""
    exact_degree: int | None = None
    signed: bool = False

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.shape != weights.shape or nodes.ndim != 1:
            raise ValueError("nodes and weights must be 1-d arrays of equal length")
        if nodes.size > 1 and not np.all(np.diff(nodes) > 0):
            raise ValueError("nodes must be strictly increasing")
        if not self.signed and not np.all(weights > 0):
            raise ValueError("weights of a nonnegative measure must be positive")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return self.nodes.size

    def integrate(self, values) -> float:
        return float(np.dot(self.weights, values))


def gauss_from_coeffs(coeffs: CoefficientSequence, K: int) -> QuadratureRule:
    """K-point Gauss rule of the measure behind ``coeffs`` (Golub-Welsch).

    Nodes are the eigenvalues of the Jacobi matrix. Weights use the
    Christoffel form ``1 / sum_n p_n(x_k)^2``, which keeps tiny weights at
    large nodes accurate to relative precision; the first-eigenvector form
    only resolves them to absolute precision.
    """
    if K < 1:
        raise ValueError("K must be positive")
    a, b = coeffs.arrays(K)
    try:
        nodes = eigh_tridiagonal(a, b[: K - 1], eigvals_only=True, lapack_driver="stev")
    except np.linalg.LinAlgError as exc:
        raise ArithmeticError(f"tridiagonal eigensolver failed: {exc}") from exc
    nodes = np.sort(nodes)
    p = coeffs.values(K, nodes)
    weights = 1.0 / np.einsum("ij,ij->j", p, p)
    return QuadratureRule(
        nodes, weights, weight=coeffs.family_label, exact_degree=2 * K - 1
    )


def gauss_legendre(K: int) -> QuadratureRule:
    rule = gauss_from_coeffs(FamilySpec("legendre").coefficients(), K)
    return QuadratureRule(rule.nodes, rule.weights, "(-1,1)", "1", 2 * K - 1)


def gauss_laguerre(K: int, beta: float = 0.0) -> QuadratureRule:
    rule = gauss_from_coeffs(FamilySpec("laguerre", beta).coefficients(), K)
    return QuadratureRule(rule.nodes, rule.weights, "(0,inf)", f"x^{beta:g} e^-x", 2 * K - 1)


def gauss_chebyshev(K: int) -> QuadratureRule:
    """Gauss rule for the weight (1 - x^2)^{-1/2} on (-1, 1)."""
    if K < 1:
        raise ValueError("K must be positive")
    k = np.arange(K, 0, -1)
    nodes = np.cos((2 * k - 1) * np.pi / (2 * K))
    if K % 2:
        nodes[K // 2] = 0.0
    return QuadratureRule(
        nodes, np.full(K, np.pi / K), "(-1,1)", "(1-x^2)^-1/2", 2 * K - 1
    )


def signed_laguerre_rule(alpha: float, K: int) -> QuadratureRule:
    """Rule for d(x^alpha e^{-x}) = (alpha - x) x^{alpha-1} e^{-x} dx.

    Gauss rule for x^{alpha-1} e^{-x} with each weight scaled by
    ``alpha - node``; exact for polynomials up to degree 2K - 2.
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    base = gauss_laguerre(K, alpha - 1)
    return QuadratureRule(
        base.nodes,
        base.weights * (alpha - base.nodes),
        "(0,inf)",
        f"({alpha:g}-x) x^{alpha - 1:g} e^-x",
        2 * K - 2,
        signed=True,
    )


def default_nodes(m: int, n: int) -> int:
    return m + n + 16


def _values(family, count: int, x) -> np.ndarray:
    return family.values(count, x)


def oracle_table(p_family, q_family, eta_rule: QuadratureRule, M: int, N: int,
                 *, density_degree: int = 0) -> np.ndarray:
    """``T[m, n] = sum_k w_k p_m(x_k) q_n(x_k)`` for m < M, n < N.

    ``p_family``/``q_family`` are anything with ``values(count, x)``
    (a :class:`FamilySpec` or :class:`CoefficientSequence`).
    ``density_degree`` is the polynomial degree of the density of the
    measure relative to the rule's base weight, used for the exactness check.
    """
    need = (M - 1) + (N - 1) + density_degree
    if eta_rule.exact_degree is not None and need > eta_rule.exact_degree:
        warnings.warn(
            f"rule exact to degree {eta_rule.exact_degree}, integrand needs {need}",
            RuntimeWarning,
            stacklevel=2,
        )
    P = _values(p_family, M, eta_rule.nodes)
    Q = _values(q_family, N, eta_rule.nodes)
    return (P * eta_rule.weights) @ Q.T


def oracle_entry(p_family, q_family, eta_rule: QuadratureRule, m: int, n: int,
                 *, density_degree: int = 0) -> float:
    """Direct quadrature of the product ``p_m q_n`` against ``eta_rule``."""
    return float(
        oracle_table(p_family, q_family, eta_rule, m + 1, n + 1,
                     density_degree=density_degree)[m, n]
    )


def laguerre_moment(j: int, beta: float) -> float:
    """``int_0^inf x^j x^beta e^{-x} dx``."""
    return math.gamma(j + beta + 1)


def legendre_moment(j: int) -> float:
    return 0.0 if j % 2 else 2.0 / (j + 1)


def chebyshev_moment(j: int) -> float:
    if j % 2:
        return 0.0
    return math.pi * math.comb(j, j // 2) / 2.0**j
