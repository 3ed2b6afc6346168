import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crosscoef.crossrule import (
    FILL_COLUMNS,
    FILL_ROWS,
    CoefficientTable,
    CrossRuleProblem,
    consistency_check,
    fill,
    residual,
)
from crosscoef.families import (
    laguerre_connection_boundary,
    laguerre_connection_closed,
    legendre_x2_boundary,
)
from crosscoef.recurrence import FamilySpec

LEG = FamilySpec("legendre").coefficients()


def _unit_row(L):
    row = np.zeros(L)
    row[0] = 1.0
    return row


def _laguerre_problem(alpha, beta, L, orientation=FILL_ROWS):
    row = FamilySpec("laguerre", alpha).coefficients()
    col = FamilySpec("laguerre", beta).coefficients()
    col0 = np.array([laguerre_connection_boundary(m, alpha, beta) for m in range(L)])
    row0 = np.zeros(L)
    row0[0] = col0[0]
    return CrossRuleProblem(row, col, row0, col0, orientation)


def test_identity_fill():
    t = fill(CrossRuleProblem(LEG, LEG, _unit_row(12)), 5)
    assert np.array_equal(t.block(6, 6), np.eye(6))


def test_legendre_x2_first_steps():
    t = fill(CrossRuleProblem(LEG, LEG, legendre_x2_boundary(9)), 4)
    assert t[1, 1] == pytest.approx(0.6, abs=1e-15)
    assert t[2, 0] == pytest.approx(2 * math.sqrt(5) / 15, abs=1e-15)


def test_trapezoidal_domain():
    t = fill(CrossRuleProblem(LEG, LEG, legendre_x2_boundary(9)), 4)
    assert list(t.row_limit) == [8, 7, 6, 5, 4]
    with pytest.raises(IndexError):
        t[4, 5]
    with pytest.raises(IndexError):
        t[5, 0]
    assert np.isnan(t.entries[4, 5])
    with pytest.raises(IndexError):
        t.block(5, 6)


def test_rows_limited_by_boundary_length():
    with pytest.raises(ValueError):
        fill(CrossRuleProblem(LEG, LEG, _unit_row(5)), 5)
    with pytest.raises(ValueError):
        CrossRuleProblem(LEG, LEG, np.array([1.0]))


def test_problem_boundary_agreement():
    with pytest.raises(ValueError):
        CrossRuleProblem(LEG, LEG, np.array([1.0, 0.0]), np.array([0.5, 0.0]))
    with pytest.raises(ValueError):
        CrossRuleProblem(LEG, LEG, None, None)
    with pytest.raises(ValueError):
        CrossRuleProblem(LEG, LEG, _unit_row(3), orientation=FILL_COLUMNS)


def test_fill_residual_duality():
    t = fill(CrossRuleProblem(LEG, LEG, legendre_x2_boundary(41)), 20)
    assert residual(t, LEG, LEG) <= 1e-13 * t.max_abs()
    assert t.metadata["residual"] == residual(t, LEG, LEG)


def test_closed_laguerre_table_residual():
    alpha, beta = 2.5, 0.5
    C = np.array([[laguerre_connection_closed(m, n, alpha, beta) for n in range(31)] for m in range(31)])
    rc = FamilySpec("laguerre", alpha).coefficients()
    cc = FamilySpec("laguerre", beta).coefficients()
    r = residual(CoefficientTable.rectangular(C), rc, cc)
    assert r <= 1e-10 * np.abs(C).max()


def test_residual_detects_perturbation():
    t = fill(CrossRuleProblem(LEG, LEG, legendre_x2_boundary(21)), 10)
    E = np.nan_to_num(t.entries.copy())
    E[3, 3] += 1e-3
    bad = CoefficientTable(E, t.row_limit)
    assert residual(bad, LEG, LEG) >= 1e-4


def test_residual_rejects_tiny_table():
    with pytest.raises(ValueError):
        residual(CoefficientTable.rectangular(np.ones((1, 1))), LEG, LEG)


def test_consistency_check_laguerre():
    prob = _laguerre_problem(1.0, 0.0, 41)
    t = fill(prob, 20)
    report = consistency_check(t, prob.boundary_col0, 1e-10)
    assert report.passed and report.discrepancy.size == 21


def test_consistency_check_identity_and_mismatch():
    t = fill(CrossRuleProblem(LEG, LEG, _unit_row(11)), 10)
    assert consistency_check(t, _unit_row(11), 1e-15).max_discrepancy == 0.0

    t = fill(_laguerre_problem(1.0, 0.0, 21), 10)
    wrong = [laguerre_connection_boundary(m, 1.0, 0.3) for m in range(21)]
    report = consistency_check(t, wrong, 1e-10)
    assert not report.passed
    assert "FAIL" in str(report)


def test_columns_orientation_is_the_transpose():
    row0 = legendre_x2_boundary(21)
    by_rows = fill(CrossRuleProblem(LEG, LEG, row0), 10)
    by_cols = fill(CrossRuleProblem(LEG, LEG, None, row0, FILL_COLUMNS), 10)
    np.testing.assert_allclose(by_cols.block(11, 11), by_rows.block(11, 11).T, atol=1e-15)
    assert by_cols.metadata["orientation"] == FILL_COLUMNS


def test_columns_from_boundary_column_when_alpha_below_beta():
    # seeding from D[m, 0] only stays accurate when the column is finite support
    prob = _laguerre_problem(0.5, 2.5, 41, FILL_COLUMNS)
    t = fill(prob, 20)
    C = np.array([[laguerre_connection_closed(m, n, 0.5, 2.5) for n in range(21)] for m in range(21)])
    assert np.abs(t.block(21, 21) - C).max() <= 1e-10 * np.abs(C).max()


def test_columns_from_boundary_column_amplifies_error():
    # the zero upper triangle must emerge from cancellation, which fails fast
    prob = _laguerre_problem(2.5, 0.5, 41, FILL_COLUMNS)
    t = fill(prob, 20)
    C = np.array([[laguerre_connection_closed(m, n, 2.5, 0.5) for n in range(21)] for m in range(21)])
    assert np.abs(t.block(21, 21) - C).max() > 1.0


def test_symmetry_for_equal_families():
    t = fill(CrossRuleProblem(LEG, LEG, legendre_x2_boundary(41)), 20)
    B = t.block(21, 21)
    assert np.abs(B - B.T).max() <= 1e-9 * np.abs(B).max()


def test_legendre_x2_parity_zeros():
    t = fill(CrossRuleProblem(LEG, LEG, legendre_x2_boundary(41)), 20)
    B = t.block(21, 21)
    m, n = np.indices(B.shape)
    zero = ((m + n) % 2 == 1) | (np.abs(m - n) >= 3)
    assert np.abs(B[zero]).max() <= 1e-13 * np.abs(B).max()


@pytest.mark.parametrize("alpha, beta", [(1.0, 0.0), (2.5, 0.5), (0.5, 2.5)])
def test_connection_lower_triangular(alpha, beta):
    t = fill(_laguerre_problem(alpha, beta, 41), 20)
    B = t.block(21, 21)
    assert np.abs(np.triu(B, 1)).max() <= 1e-10 * np.abs(B).max()


def test_tables_are_read_only():
    t = fill(CrossRuleProblem(LEG, LEG, _unit_row(5)), 2)
    with pytest.raises(ValueError):
        t.entries[0, 0] = 3.0


@settings(max_examples=25, deadline=None)
@given(st.lists(st.floats(-2, 2), min_size=12, max_size=12))
def test_any_boundary_fill_satisfies_stencil(row0):
    row0 = np.array(row0)
    t = fill(CrossRuleProblem(LEG, LEG, row0), 6)
    scale = max(t.max_abs(), 1.0)
    assert residual(t, LEG, LEG) <= 1e-13 * scale
