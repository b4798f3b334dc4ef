#include "eulerpoly/congruence.hpp"

#include "eulerpoly/eulerian.hpp"
#include "eulerpoly/linsolve.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>

namespace eulerpoly {

namespace {

void require_ranges(unsigned ell, unsigned m, const char* what) {
  if (ell == 0) throw std::invalid_argument(std::string(what) + ": ell must be >= 1");
  if (m < 2) throw std::invalid_argument(std::string(what) + ": m must be >= 2");
}

}  // namespace

Polynomial congruence_defect(const Polynomial& f, unsigned ell, unsigned m) {
  const Polynomial averaged = pow(geometric_sum(m) / Rational(m), ell + 1);
  return compose_monomial(f, m) - averaged * f;
}

CongruenceReport congruence_report(const Polynomial& f, unsigned ell, unsigned m) {
  require_ranges(ell, m, "congruence_report");
  if (f.degree() > static_cast<long>(ell)) {
    throw std::invalid_argument("congruence_report: deg f = " + std::to_string(f.degree()) +
                                " exceeds ell = " + std::to_string(ell));
  }
  CongruenceReport report;
  report.ell = ell;
  report.m = m;
  report.f = f;
  report.defect = congruence_defect(f, ell, m);
  PowerDivision d = remainder_mod_power(report.defect, 1, ell + 1);
  report.quotient = std::move(d.quotient);
  report.remainder = std::move(d.remainder);
  report.holds = report.remainder.is_zero();
  return report;
}

CongruenceReport eulerian_congruence_report(unsigned ell, unsigned m) {
  return congruence_report(eulerian_poly(ell), ell, m);
}

M2IdentityCheck m2_identity_check(unsigned ell) {
  if (ell == 0) throw std::invalid_argument("m2_identity_check: ell must be >= 1");
  const Polynomial a = eulerian_poly(ell);
  M2IdentityCheck check;
  check.lhs = pow(Polynomial{Rational(1, 2), Rational(1, 2)}, ell + 1) * a - compose_monomial(a, 2);
  check.rhs = -(pow(Polynomial{Rational(1, 2), Rational(-1, 2)}, ell + 1) *
                scale_argument(a, Rational(-1)));
  check.polynomial_identity = check.lhs == check.rhs;

  const SeriesX f = frobenius_series(ell, 4 * static_cast<std::size_t>(ell));
  const SeriesX series_lhs = f - pow(Rational(2), ell + 1) * f.substitute_power(2);
  const SeriesX series_rhs = -f.scale_argument(Rational(-1));
  check.series_identity = series_lhs == series_rhs;

  check.holds = check.polynomial_identity && check.series_identity;
  return check;
}

StrengthenedCheck even_ell_strengthening(unsigned ell, unsigned m) {
  require_ranges(ell, m, "even_ell_strengthening");
  const Polynomial defect = congruence_defect(eulerian_poly(ell), ell, m);
  StrengthenedCheck check;
  check.remainder = remainder_mod_power(defect, 1, ell + 2).remainder;
  check.holds = check.remainder.is_zero();
  return check;
}

std::size_t polynomiality_degree_bound(unsigned ell, unsigned m) {
  return static_cast<std::size_t>(m - 1) * (ell + 1) + static_cast<std::size_t>(m) * ell;
}

std::size_t polynomiality_min_order(unsigned ell, unsigned m) {
  // m(ell+1) + (m-1)(ell+1) plus a margin of 2m(ell+1).
  return static_cast<std::size_t>(ell + 1) * (4 * static_cast<std::size_t>(m) - 1);
}

PolynomialityCheck polynomiality_check(unsigned ell, unsigned m, std::size_t order) {
  require_ranges(ell, m, "polynomiality_check");
  if (order < polynomiality_min_order(ell, m)) {
    throw std::invalid_argument("polynomiality_check: order " + std::to_string(order) +
                                " below the minimum " +
                                std::to_string(polynomiality_min_order(ell, m)) +
                                "; truncation would be inconclusive");
  }
  const SeriesX f = frobenius_series(ell, order);
  const SeriesX bracket = pow(Rational(m), ell + 1) * f.substitute_power(m) - f;
  const SeriesX prefactor = SeriesX::from_polynomial(pow(geometric_sum(m), ell + 1), order);

  PolynomialityCheck check{prefactor * bracket, {}, -1, false};
  for (std::size_t i = 0; i <= order; ++i) {
    if (check.series[i] != 0) check.last_nonzero = static_cast<long>(i);
  }
  const std::size_t bound = polynomiality_degree_bound(ell, m);
  check.holds = check.last_nonzero <= static_cast<long>(bound);
  check.polynomial = check.series.truncate(std::min(bound, order)).to_polynomial();
  return check;
}

CharacterizationSolution solve_characterization(unsigned ell, unsigned m) {
  require_ranges(ell, m, "solve_characterization");
  // Column i-1 holds the local coefficients contributed by a_i x^{ell-i}.
  std::vector<std::vector<Rational>> basis(ell + 1);
  for (unsigned power = 0; power <= ell; ++power) {
    basis[power] =
        local_coefficients(congruence_defect(Polynomial::monomial(1, power), ell, m), 1, ell + 1);
  }
  RationalMatrix a(ell + 1, std::vector<Rational>(ell));
  std::vector<Rational> b(ell + 1);
  for (unsigned row = 0; row <= ell; ++row) {
    for (unsigned i = 1; i <= ell; ++i) a[row][i - 1] = basis[ell - i][row];
    b[row] = -basis[ell][row];
  }

  const LinearSolution sol = solve_exact(a, b);
  if (!sol.consistent) {
    throw std::domain_error("solve_characterization: no monic solution for ell = " +
                            std::to_string(ell) + ", m = " + std::to_string(m));
  }
  std::vector<Rational> coeffs(ell + 1);
  coeffs[ell] = 1;
  for (unsigned i = 1; i <= ell; ++i) coeffs[ell - i] = sol.solution[i - 1];
  return {ell, m, Polynomial(std::move(coeffs)), sol.rank, sol.unique};
}

EquivalenceAudit equivalence_audit(unsigned ell, const std::vector<unsigned>& m_list) {
  if (m_list.empty()) throw std::invalid_argument("equivalence_audit: empty m list");
  std::vector<std::future<CharacterizationSolution>> pending;
  pending.reserve(m_list.size());
  for (unsigned m : m_list) {
    pending.push_back(std::async(std::launch::async, solve_characterization, ell, m));
  }
  EquivalenceAudit audit;
  audit.ell = ell;
  for (auto& f : pending) audit.solutions.push_back(f.get());

  const Polynomial& first = audit.solutions.front().solution;
  audit.all_equal = std::all_of(audit.solutions.begin(), audit.solutions.end(),
                                [&](const auto& s) { return s.unique && s.solution == first; });
  audit.matches_eulerian = audit.all_equal && first == eulerian_poly(ell);
  return audit;
}

Polynomial random_perturbation(unsigned ell, std::mt19937_64& rng) {
  if (ell == 0) throw std::invalid_argument("random_perturbation: ell must be >= 1");
  std::uniform_int_distribution<unsigned> degree(0, ell - 1);
  std::uniform_int_distribution<int> value(1, 6);
  std::vector<Rational> coeffs(degree(rng) + 1);
  for (auto& c : coeffs) {
    const int v = value(rng);
    c = v <= 3 ? -v : v - 3;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace eulerpoly
