"""Fill and check tables of integrals of orthogonal polynomial products.

For orthonormal families with recurrence coefficients ``(a_m, b_m)`` (rows)
and ``(c_n, d_n)`` (columns), every table ``D[m, n] = int p_m q_n d(eta)``
satisfies the five-point identity

    b_{m-1} D[m-1,n] + a_m D[m,n] + b_m D[m+1,n]
        = d_{n-1} D[m,n-1] + c_n D[m,n] + d_n D[m,n+1]

whatever the measure ``eta``. Given row 0 the identity determines every
later row, one column shorter each time.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .recurrence import CoefficientSequence

__all__ = [
    "FILL_ROWS",
    "FILL_COLUMNS",
    "CrossRuleProblem",
    "CoefficientTable",
    "ConsistencyReport",
    "fill",
    "residual",
    "consistency_check",
]

FILL_ROWS = "rows"
FILL_COLUMNS = "columns"


@dataclass
class CrossRuleProblem:
    """Recurrences for both index directions plus boundary data.

    ``FILL_ROWS`` propagates ``boundary_row0`` (``D[0, n]``) downwards and
    leaves ``boundary_col0`` as check data. ``FILL_COLUMNS`` does the
    transpose: it propagates ``boundary_col0`` (``D[m, 0]``) to the right.
    """

    row_coeffs: CoefficientSequence
    col_coeffs: CoefficientSequence
    boundary_row0: np.ndarray | None = None
    boundary_col0: np.ndarray | None = None
    orientation: str = FILL_ROWS

    def __post_init__(self):
        if self.orientation not in (FILL_ROWS, FILL_COLUMNS):
            raise ValueError(f"unknown orientation {self.orientation!r}")
        if self.boundary_row0 is not None:
            self.boundary_row0 = np.asarray(self.boundary_row0, dtype=float)
        if self.boundary_col0 is not None:
            self.boundary_col0 = np.asarray(self.boundary_col0, dtype=float)
        seed = self.seed
        if seed is None:
            side = "boundary_row0" if self.orientation == FILL_ROWS else "boundary_col0"
            raise ValueError(f"{side} is required for orientation {self.orientation!r}")
        if seed.ndim != 1 or seed.size < 2:
            raise ValueError("boundary data needs at least two entries")
        if (
            self.boundary_row0 is not None
            and self.boundary_col0 is not None
            and self.boundary_row0[0] != self.boundary_col0[0]
        ):
            raise ValueError("boundary_row0[0] and boundary_col0[0] must coincide")

    @property
    def seed(self) -> np.ndarray | None:
        return self.boundary_row0 if self.orientation == FILL_ROWS else self.boundary_col0


class CoefficientTable:
    """Finite piece of a ``D[m, n]`` table with an explicit valid domain.

    Row ``m`` holds valid entries for ``n <= row_limit[m]``. Anything
    outside is unknown, stored as NaN, and indexing it raises
    ``IndexError``.
    """

    def __init__(self, entries, row_limit, metadata=None):
        entries = np.array(entries, dtype=float)
        row_limit = np.asarray(row_limit, dtype=int)
        if entries.ndim != 2 or row_limit.shape != (entries.shape[0],):
            raise ValueError("row_limit needs one entry per table row")
        if np.any(row_limit >= entries.shape[1]) or np.any(row_limit < 0):
            raise ValueError("row_limit exceeds the stored columns")
        cols = np.arange(entries.shape[1])
        entries[cols[None, :] > row_limit[:, None]] = np.nan
        entries.setflags(write=False)
        self._entries = entries
        self.row_limit = row_limit
        self.metadata = dict(metadata or {})

    @classmethod
    def rectangular(cls, entries, metadata=None) -> "CoefficientTable":
        entries = np.asarray(entries, dtype=float)
        limit = np.full(entries.shape[0], entries.shape[1] - 1)
        return cls(entries, limit, {"provenance": "closed", **(metadata or {})})

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self._entries.shape

    @property
    def entries(self) -> np.ndarray:
        """Read-only view; NaN outside the valid domain."""
        return self._entries

    def valid(self, m: int, n: int) -> bool:
        return 0 <= m < self.rows and 0 <= n <= self.row_limit[m]

    def __getitem__(self, idx) -> float:
        m, n = idx
        if not self.valid(m, n):
            raise IndexError(f"({m}, {n}) is outside the valid domain of this table")
        return float(self._entries[m, n])

    def block(self, M: int, N: int) -> np.ndarray:
        """The leading ``M x N`` block; all of it must be valid."""
        if M > self.rows or np.any(self.row_limit[:M] < N - 1):
            raise IndexError(f"{M}x{N} block is not fully inside the valid domain")
        return self._entries[:M, :N].copy()

    def max_abs(self) -> float:
        return float(np.nanmax(np.abs(self._entries)))

    def transpose(self) -> "CoefficientTable":
        valid = ~np.isnan(self._entries)
        t = self._entries.T
        vt = valid.T
        limit = np.array([np.flatnonzero(r).max() if r.any() else -1 for r in vt])
        keep = int(np.flatnonzero(limit >= 0).max()) + 1
        return CoefficientTable(t[:keep], limit[:keep], self.metadata)


def _fill_rows(row: CoefficientSequence, col: CoefficientSequence, seed: np.ndarray,
               rows: int) -> tuple[np.ndarray, np.ndarray]:
    L = seed.size
    a, b = row.arrays(rows)
    c, d = col.arrays(L)
    table = np.full((rows + 1, L), np.nan)
    table[0] = seed
    prev = np.zeros(L)
    for m in range(rows):
        cur = table[m]
        w = L - 1 - m  # valid columns of row m are 0..w
        n = np.arange(w)
        left = np.zeros(w)
        left[1:] = d[n[1:] - 1] * cur[n[1:] - 1]
        bm1 = b[m - 1] if m > 0 else 0.0
        table[m + 1, :w] = (
            left + (c[:w] - a[m]) * cur[:w] + d[:w] * cur[1 : w + 1] - bm1 * prev[:w]
        ) / b[m]
        prev = cur
    return table, L - 1 - np.arange(rows + 1)


def fill(problem: CrossRuleProblem, rows: int) -> CoefficientTable:
    """Propagate the boundary data through the cross rule.

    With ``L`` boundary values, ``rows`` new rows (or columns) can be made,
    up to ``L - 1``; line ``k`` is valid for ``L - 1 - k`` entries past the
    first.
    """
    seed = problem.seed
    L = seed.size
    if rows < 1:
        raise ValueError("rows must be positive")
    if rows > L - 1:
        raise ValueError(f"{L} boundary values support at most {L - 1} rows, asked {rows}")
    meta = {
        "provenance": "fill",
        "orientation": problem.orientation,
        "row_family": problem.row_coeffs.family_label,
        "col_family": problem.col_coeffs.family_label,
    }
    if problem.orientation == FILL_ROWS:
        entries, limit = _fill_rows(problem.row_coeffs, problem.col_coeffs, seed, rows)
        table = CoefficientTable(entries, limit, meta)
    else:
        entries, limit = _fill_rows(problem.col_coeffs, problem.row_coeffs, seed, rows)
        table = CoefficientTable(entries, limit, meta).transpose()
    table.metadata["residual"] = residual(table, problem.row_coeffs, problem.col_coeffs)
    return table


def _stencil_terms(table: CoefficientTable, row_coeffs, col_coeffs):
    E = table.entries
    R, C = E.shape
    if R < 2 or C < 2:
        raise ValueError("table is too small for a single cross stencil")
    a, b = row_coeffs.arrays(R)
    c, d = col_coeffs.arrays(C)
    Z = np.zeros((R + 2, C + 2))
    Z[:] = np.nan
    Z[1 : R + 1, 1 : C + 1] = E
    Z[0, :] = 0.0  # D[-1, n]
    Z[:, 0] = 0.0  # D[m, -1]
    up, mid, down = Z[0:R, 1 : C + 1], Z[1 : R + 1, 1 : C + 1], Z[2 : R + 2, 1 : C + 1]
    lft, rgt = Z[1 : R + 1, 0:C], Z[1 : R + 1, 2 : C + 2]
    bm1 = np.concatenate(([0.0], b[:-1]))[:, None]
    dm1 = np.concatenate(([0.0], d[:-1]))[None, :]
    lhs = bm1 * up + a[:, None] * mid + b[:, None] * down
    rhs = dm1 * lft + c[None, :] * mid + d[None, :] * rgt
    return lhs - rhs


def residual(table: CoefficientTable, row_coeffs: CoefficientSequence,
             col_coeffs: CoefficientSequence) -> float:
    """Largest violation of the cross rule over every stencil inside the domain.

    The last row of a table has no row below it and is never a stencil
    centre; zero is used for indices -1.
    """
    diff = _stencil_terms(table, row_coeffs, col_coeffs)
    ok = ~np.isnan(diff)
    if not ok.any():
        raise ValueError("table domain holds no complete cross stencil")
    return float(np.abs(diff[ok]).max())


@dataclass
class ConsistencyReport:
    discrepancy: np.ndarray
    tol: float
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = bool(np.all(self.discrepancy <= self.tol))

    @property
    def max_discrepancy(self) -> float:
        return float(self.discrepancy.max()) if self.discrepancy.size else 0.0

    def __str__(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict}: max discrepancy {self.max_discrepancy:.3e} (tol {self.tol:.1e})"


def consistency_check(table: CoefficientTable, boundary_col0, tol: float) -> ConsistencyReport:
    """Compare filled column 0 with independently supplied ``D[m, 0]``."""
    ref = np.asarray(boundary_col0, dtype=float)
    rows = min(table.rows, ref.size)
    got = np.array([table[m, 0] for m in range(rows)])
    return ConsistencyReport(np.abs(got - ref[:rows]), tol)
