"""Named worked cases: one fill, one closed form and one quadrature oracle each.

``build_case`` returns all three square tables of size ``(N+1) x (N+1)``
plus the deviations between them; this is what ``crosscoef verify`` reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import families
from .crossrule import CoefficientTable, CrossRuleProblem, consistency_check, fill, residual
from .legendre_assoc import assoc_legendre_table, g_boundary_even, g_boundary_odd, g_fill, g_spot_checks
from .oracle import (
    QuadratureRule,
    gauss_chebyshev,
    gauss_from_coeffs,
    gauss_laguerre,
    gauss_legendre,
    oracle_table,
    signed_laguerre_rule,
)
from .recurrence import FamilySpec, norm_constants

__all__ = ["CASES", "DEFAULT_TOL", "CaseResult", "build_case", "build_gtable"]

CASES = ("identity", "legendre-x2", "laguerre-connect", "laguerre-signed", "ultraspherical-F")

DEFAULT_TOL = {
    "identity": 1e-13,
    "legendre-x2": 1e-12,
    "laguerre-connect": 1e-10,
    "laguerre-signed": 1e-9,
    "ultraspherical-F": 1e-9,
    "gtable": 1e-8,
}


def _rel(a: np.ndarray, b: np.ndarray) -> float:
    """max |a - b| relative to the largest entry of ``b`` (absolute if ``b`` is 0)."""
    scale = float(np.abs(b).max())
    return float(np.abs(a - b).max()) / (scale if scale > 0 else 1.0)


@dataclass
class CaseResult:
    case: str
    params: dict
    filled: np.ndarray
    closed: np.ndarray
    oracle: np.ndarray
    residual: float  # relative to the largest filled entry
    closed_residual: float  # same stencil applied to the closed table
    extra: dict = field(default_factory=dict)

    @property
    def closed_dev(self) -> float:
        return _rel(self.filled, self.closed)

    @property
    def oracle_dev(self) -> float:
        return max(_rel(self.closed, self.oracle), _rel(self.filled, self.oracle))

    def report(self) -> dict:
        return {
            "residual": self.residual,
            "closed_residual": self.closed_residual,
            "closed_dev": self.closed_dev,
            "oracle_dev": self.oracle_dev,
            **self.extra,
        }

    def passed(self, tol: float) -> bool:
        values = [self.residual, self.closed_residual, self.closed_dev, self.oracle_dev]
        values += [v for v in self.extra.values() if isinstance(v, float)]
        return all(v <= tol for v in values)


def _fill_block(row, col, row0, N, col0=None):
    table = fill(CrossRuleProblem(row, col, row0, col0), N)
    block = table.block(N + 1, N + 1)
    return table, block


def _scaled_residual(entries, row, col) -> float:
    t = CoefficientTable.rectangular(entries)
    scale = float(np.abs(entries).max()) or 1.0
    return residual(t, row, col) / scale


def build_case(case: str, N: int, alpha: float = 1.0, beta: float = 0.0,
               K: int | None = None) -> CaseResult:
    """Fill, closed form and oracle for ``case`` on indices ``0..N``."""
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; choose from {', '.join(CASES)}")
    if N < 1:
        raise ValueError("N must be at least 1")
    L = 2 * N + 1
    K = K or 2 * N + 16
    extra: dict = {}

    if case in ("identity", "legendre-x2"):
        params: dict = {}
        leg = FamilySpec("legendre")
        P = leg.coefficients()
        rule = gauss_legendre(K)
        if case == "identity":
            row0 = np.zeros(L)
            row0[0] = 1.0
            closed = np.eye(N + 1)
            eta = rule
        else:
            row0 = families.legendre_x2_boundary(L)
            closed = families.CLOSED_TABLES["legendre-x2"].table(N + 1, N + 1)
            eta = QuadratureRule(rule.nodes, rule.weights * rule.nodes**2, "(-1,1)", "x^2",
                                 rule.exact_degree)
        table, filled = _fill_block(P, P, row0, N)
        oracle = oracle_table(leg, leg, eta, N + 1, N + 1,
                              density_degree=0 if case == "identity" else 2)
        row = col = P

    elif case == "laguerre-connect":
        params = {"alpha": alpha, "beta": beta}
        fa, fb = FamilySpec("laguerre", alpha), FamilySpec("laguerre", beta)
        row, col = fa.coefficients(), fb.coefficients()
        col0 = np.array([families.laguerre_connection_boundary(m, alpha, beta) for m in range(L)])
        row0 = np.zeros(L)
        row0[0] = col0[0]
        table, filled = _fill_block(row, col, row0, N, col0)
        check = consistency_check(table, col0, 1e-10 * float(np.abs(col0).max()))
        extra["boundary_col0_dev"] = check.max_discrepancy / float(np.abs(col0).max())
        closed = families.CLOSED_TABLES["laguerre-connect"].table(N + 1, N + 1, alpha=alpha, beta=beta)
        oracle = oracle_table(fa, fb, gauss_laguerre(K, beta), N + 1, N + 1)

    elif case == "laguerre-signed":
        params = {"alpha": alpha}
        fa = FamilySpec("laguerre", alpha)
        row = col = fa.coefficients()
        row0 = np.array([families.laguerre_signed_closed(0, n, alpha) for n in range(L)])
        table, filled = _fill_block(row, col, row0, N)
        closed = families.CLOSED_TABLES["laguerre-signed"].table(N + 1, N + 1, alpha=alpha)
        oracle = oracle_table(fa, fa, signed_laguerre_rule(alpha, K), N + 1, N + 1,
                              density_degree=1)

    else:  # ultraspherical-F
        params = {"alpha": alpha}
        fam = FamilySpec("ultraspherical", alpha)
        classical = FamilySpec("ultraspherical", alpha, "classical")
        row = col = fam.coefficients()
        h = norm_constants(classical, L)
        s = np.sqrt(h)
        row0 = np.array([families.ultraspherical_F_closed(0, n, alpha) for n in range(L)]) / (s[0] * s)
        table, ortho = _fill_block(row, col, row0, N)
        filled = ortho * s[: N + 1, None] * s[None, : N + 1]
        closed = families.CLOSED_TABLES["ultraspherical-F"].table(N + 1, N + 1, alpha=alpha)
        base = gauss_from_coeffs(FamilySpec("ultraspherical", alpha - 1).coefficients(), K)
        oracle = oracle_table(classical, classical, base, N + 1, N + 1)
        closed_ortho = families.ultraspherical_F_orthonormal(closed, alpha)
        return CaseResult(
            case, params, filled, closed, oracle,
            table.metadata["residual"] / table.max_abs(),
            _scaled_residual(closed_ortho, row, col),
        )

    return CaseResult(
        case, params, filled, closed, oracle,
        table.metadata["residual"] / table.max_abs(),
        _scaled_residual(closed, row, col),
        extra,
    )


def build_gtable(m: int, N: int, K: int | None = None) -> tuple[np.ndarray, dict]:
    """g-table block for degrees ``m..N`` and its verification report."""
    table = g_fill(m, N)
    g = table.entries
    K = K or 2 * N + 16
    rule = gauss_chebyshev(K)
    P = assoc_legendre_table(N, m, rule.nodes)[m:]
    oracle = (P * rule.weights) @ P.T
    size = N - m + 1
    seeds_even = g_boundary_even(m, size)
    seeds_odd = g_boundary_odd(m, size)
    seed_dev = 0.0
    for k in range(0, size, 2):
        seed_dev = max(seed_dev, abs(g[0, k] - seeds_even[k // 2]))
    for k in range(1, size, 2):
        seed_dev = max(seed_dev, abs(g[1, k] - seeds_odd[(k - 1) // 2]) if size > 1 else 0.0)
    spot_dev = 0.0
    if size >= 3:
        spots = g_spot_checks(m)
        spot_dev = max(abs(g[2, 0] / spots["g_m+2,m"] - 1), abs(g[2, 2] / spots["g_m+2,m+2"] - 1))
    scale = float(np.abs(g).max())
    report = {
        "residual": (table.residual or 0.0) / scale,
        "closed_dev": max(seed_dev / scale, spot_dev),
        "oracle_dev": _rel(g, oracle),
    }
    return g, report
