"""Exact Eulerian, Bernoulli and Linial polynomial computations.

Polynomials are lists of coefficients, lowest degree first. Inputs may be
int, fractions.Fraction or "p/q" strings; outputs are fractions.Fraction.
"""

from ._eulerpoly import (
    alpha_polynomial,
    bernoulli_number_from_eulerian,
    bernoulli_poly,
    congruence_report,
    eulerian_congruence_report,
    eulerian_number,
    eulerian_poly,
    eulerian_table,
    even_ell_strengthening,
    linial_char_poly,
    remainder_mod_power,
    run_audit,
    solve_characterization,
    taylor_shift,
    worpitzky_check,
    zeta_negative,
)

__version__ = "0.1.0"

__all__ = [
    "alpha_polynomial",
    "bernoulli_number_from_eulerian",
    "bernoulli_poly",
    "congruence_report",
    "eulerian_congruence_report",
    "eulerian_number",
    "eulerian_poly",
    "eulerian_table",
    "even_ell_strengthening",
    "linial_char_poly",
    "remainder_mod_power",
    "run_audit",
    "solve_characterization",
    "taylor_shift",
    "worpitzky_check",
    "zeta_negative",
]
