#ifndef EULERPOLY_CONGRUENCE_HPP
#define EULERPOLY_CONGRUENCE_HPP

#include "eulerpoly/polynomial.hpp"
#include "eulerpoly/series.hpp"

#include <random>
#include <vector>

namespace eulerpoly {

/// The defect f(x^m) - ((1 + x + ... + x^{m-1})/m)^{ell+1} f(x).
Polynomial congruence_defect(const Polynomial& f, unsigned ell, unsigned m);

/*
 * Outcome of testing f(x^m) == ((1 + ... + x^{m-1})/m)^{ell+1} f(x)
 * modulo (x - 1)^{ell+1}.
 *
 * defect == (x - 1)^{ell+1} * quotient + remainder, and holds is true
 * exactly when remainder is zero. Quotients are always taken against powers
 * of (x - 1); against (1 - x)^{ell+1} the quotient flips sign for even ell.
 */
struct CongruenceReport {
  unsigned ell = 0;
  unsigned m = 0;
  Polynomial f;
  Polynomial defect;
  Polynomial remainder;
  Polynomial quotient;
  bool holds = false;
};

/// Requires ell >= 1, m >= 2 and deg f <= ell (std::invalid_argument).
CongruenceReport congruence_report(const Polynomial& f, unsigned ell, unsigned m);

/// Report for f = A_ell.
CongruenceReport eulerian_congruence_report(unsigned ell, unsigned m);

struct M2IdentityCheck {
  Polynomial lhs;  // ((1+x)/2)^{ell+1} A_ell(x) - A_ell(x^2)
  Polynomial rhs;  // -((1-x)/2)^{ell+1} A_ell(-x)
  bool polynomial_identity = false;
  bool series_identity = false;  // F(x) - 2^{ell+1} F(x^2) == -F(-x) through x^{4 ell}
  bool holds = false;
};

M2IdentityCheck m2_identity_check(unsigned ell);

struct StrengthenedCheck {
  Polynomial remainder;  // A_ell defect mod (x - 1)^{ell+2}
  bool holds = false;
};

/// Tests the A_ell congruence modulo (x - 1)^{ell+2}. Expected to hold for
/// even ell; odd ell is accepted so the failing side can be observed.
StrengthenedCheck even_ell_strengthening(unsigned ell, unsigned m);

/// Smallest truncation order accepted by polynomiality_check().
std::size_t polynomiality_min_order(unsigned ell, unsigned m);

/// Degree bound for P(x) used by the truncated check: (m-1)(ell+1) + m ell.
std::size_t polynomiality_degree_bound(unsigned ell, unsigned m);

struct PolynomialityCheck {
  SeriesX series;      // P(x) through x^order
  Polynomial polynomial;  // part of degree <= the bound
  long last_nonzero = -1;
  bool holds = false;  // nothing nonzero beyond the bound
};

/*
 * Truncated series of
 *   P(x) = (1 + ... + x^{m-1})^{ell+1} (m sum (mk)^ell x^{mk} - sum k^ell x^k).
 * A truncated computation can only corroborate that P is a polynomial, not
 * prove it. Throws std::invalid_argument when order is below
 * polynomiality_min_order().
 */
PolynomialityCheck polynomiality_check(unsigned ell, unsigned m, std::size_t order);

struct CharacterizationSolution {
  unsigned ell = 0;
  unsigned m = 0;
  Polynomial solution;  // monic of degree ell
  std::size_t system_rank = 0;
  bool unique = false;
};

/*
 * Finds the monic f = x^ell + a_1 x^{ell-1} + ... + a_ell satisfying the
 * congruence for the given m. The defect is linear in f, so the remainder
 * coefficients (in powers of x - 1) of the basis monomials give ell + 1
 * linear equations in a_1..a_ell, solved by fraction-free elimination.
 * Throws std::domain_error if the system is inconsistent.
 */
CharacterizationSolution solve_characterization(unsigned ell, unsigned m);

struct EquivalenceAudit {
  unsigned ell = 0;
  std::vector<CharacterizationSolution> solutions;  // in m_list order
  bool all_equal = false;
  bool matches_eulerian = false;
};

/// Solves for every m in m_list (concurrently) and compares the solutions.
EquivalenceAudit equivalence_audit(unsigned ell, const std::vector<unsigned>& m_list);

/// Nonzero polynomial of random degree < ell whose coefficients are all
/// drawn from {-3..3} \ {0}. Adding it to A_ell keeps the result monic of
/// degree ell.
Polynomial random_perturbation(unsigned ell, std::mt19937_64& rng);

}  // namespace eulerpoly

#endif  // EULERPOLY_CONGRUENCE_HPP
