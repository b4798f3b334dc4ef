from fractions import Fraction
from math import comb, factorial

import pytest

import eulerpoly


def evaluate(coefficients, x):
    return sum(c * x**i for i, c in enumerate(coefficients))


def test_eulerian_poly_small_rows():
    assert eulerpoly.eulerian_poly(4) == [0, 1, 11, 11, 1]
    assert eulerpoly.eulerian_poly(0) == [1]
    assert all(isinstance(c, Fraction) for c in eulerpoly.eulerian_poly(3))


def test_eulerian_table_row_sums():
    table = eulerpoly.eulerian_table(8)
    for ell, row in enumerate(table, start=1):
        assert sum(row) == factorial(ell)
        assert row == row[::-1]
    assert eulerpoly.eulerian_number(4, 2) == 11
    assert eulerpoly.eulerian_number(4, 0) == 0


def test_bernoulli_and_zeta():
    assert eulerpoly.bernoulli_poly(2) == [Fraction(1, 6), -1, 1]
    assert eulerpoly.bernoulli_number_from_eulerian(4) == Fraction(-1, 30)
    assert eulerpoly.zeta_negative(1) == Fraction(-1, 12)
    assert eulerpoly.zeta_negative(3) == Fraction(1, 120)


def test_congruence_report_accepts_mixed_inputs():
    report = eulerpoly.eulerian_congruence_report(2, 2)
    assert report["holds"]
    assert report["quotient"] == [0, Fraction(1, 8), Fraction(-1, 8)]
    bad = eulerpoly.congruence_report([0, "2", Fraction(1)], 2, 2)
    assert not bad["holds"]
    with pytest.raises(ValueError):
        eulerpoly.congruence_report([0, 0, 0, 1], 2, 2)
    with pytest.raises(ValueError):
        eulerpoly.congruence_report(["1/0"], 2, 2)


def test_solver_and_strengthening():
    solution = eulerpoly.solve_characterization(5, 3)
    assert solution["unique"]
    assert solution["solution"] == eulerpoly.eulerian_poly(5)
    assert eulerpoly.even_ell_strengthening(4, 3)
    assert not eulerpoly.even_ell_strengthening(3, 2)


def test_linial_and_worpitzky():
    assert eulerpoly.linial_char_poly(2) == [3, -3, 1]
    for ell in range(1, 5):
        for m in range(1, 4):
            assert eulerpoly.linial_char_poly(ell, m) == eulerpoly.linial_char_poly(
                ell, m, method="eulerian"
            )
    assert eulerpoly.worpitzky_check(7)
    with pytest.raises(ValueError):
        eulerpoly.linial_char_poly(2, 1, method="other")


def test_shift_and_remainder():
    p = [1, 2, 3]
    c = Fraction(2, 3)
    shifted = eulerpoly.taylor_shift(p, c)
    for x in range(-2, 3):
        assert evaluate(shifted, x) == evaluate(p, x + c)
    quotient, remainder = eulerpoly.remainder_mod_power([0, 0, 0, 1], 1, 2)
    # x^3 = (x-1)^2 (x+2) + 3x - 2
    assert quotient == [2, 1]
    assert remainder == [-2, 3]


def test_alpha_polynomial_matches_series():
    alpha = eulerpoly.alpha_polynomial([0, 1], 2)
    for k in range(6):
        assert evaluate(alpha, k) == comb(k + 1, 2)
    with pytest.raises(ArithmeticError):
        eulerpoly.alpha_polynomial([0, 0, 0, 0, 0, 1], 2)


def test_audit_passes():
    checks = eulerpoly.run_audit(4, 3, 7)
    assert checks
    assert all(c["failures"] == 0 for c in checks)
