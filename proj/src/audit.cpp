#include "eulerpoly/audit.hpp"

#include "eulerpoly/bernoulli.hpp"
#include "eulerpoly/congruence.hpp"
#include "eulerpoly/eulerian.hpp"
#include "eulerpoly/shift.hpp"

#include <algorithm>
#include <random>

namespace eulerpoly {

namespace {

class Battery {
 public:
  explicit Battery(std::string name) { check_.name = std::move(name); }

  void expect(bool ok, const std::string& label) {
    ++check_.cases;
    if (ok) return;
    if (check_.failures++ == 0) check_.first_failure = label;
  }

  AuditCheck done() { return std::move(check_); }

 private:
  AuditCheck check_;
};

std::string at(unsigned ell) { return "ell=" + std::to_string(ell); }
std::string at(unsigned ell, unsigned m) { return at(ell) + " m=" + std::to_string(m); }

Polynomial random_polynomial(std::mt19937_64& rng, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> degree(0, max_degree);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> c(degree(rng) + 1);
  for (auto& v : c) v = make_rational(num(rng), den(rng));
  return Polynomial(std::move(c));
}

}  // namespace

std::vector<AuditCheck> run_audit(const AuditOptions& options) {
  const unsigned max_ell = std::max(options.max_ell, 1U);
  const unsigned max_m = std::max(options.max_m, 2U);
  std::mt19937_64 rng(options.seed);
  std::vector<AuditCheck> out;

  {
    Battery b("poly.ring_axioms");
    for (int i = 0; i < 20; ++i) {
      const Polynomial p = random_polynomial(rng, 4);
      const Polynomial q = random_polynomial(rng, 4);
      const Polynomial r = random_polynomial(rng, 4);
      b.expect(p * q == q * p && (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r,
               to_canonical(p) + " | " + to_canonical(q) + " | " + to_canonical(r));
    }
    out.push_back(b.done());
  }
  {
    Battery b("poly.remainder_mod_power");
    std::uniform_int_distribution<unsigned> k_dist(1, 8);
    const Rational centres[] = {1, -1, Rational(1, 2)};
    for (int i = 0; i < 30; ++i) {
      const Polynomial p = random_polynomial(rng, 10);
      const unsigned k = k_dist(rng);
      const Rational& c = centres[i % 3];
      const PowerDivision d = remainder_mod_power(p, c, k);
      b.expect(d.quotient * linear_power(c, k) + d.remainder == p &&
                   d.remainder.degree() < static_cast<long>(k) &&
                   taylor_shift(taylor_shift(p, c), -c) == p,
               to_canonical(p) + " k=" + std::to_string(k));
    }
    out.push_back(b.done());
  }

  EulerianTable table = eulerian_table(max_ell);
  if (options.corrupt_table) table.rows[max_ell - 1][0] += 1;
  auto eulerian = [&](unsigned ell) { return eulerian_poly(table, ell); };

  {
    Battery b("eulerian.recurrence_vs_closed_form");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      for (unsigned k = 1; k <= ell; ++k) {
        b.expect(table.at(ell, k) == eulerian_number_direct(ell, k),
                 at(ell) + " k=" + std::to_string(k));
      }
    }
    out.push_back(b.done());
  }
  {
    Battery b("eulerian.palindromy_and_row_sums");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      Integer sum = 0;
      bool symmetric = true;
      for (unsigned k = 1; k <= ell; ++k) {
        sum += table.at(ell, k);
        symmetric = symmetric && table.at(ell, k) == table.at(ell, ell + 1 - k) &&
                    table.at(ell, k) > 0;
      }
      b.expect(symmetric && sum == factorial(ell), at(ell));
    }
    out.push_back(b.done());
  }
  {
    Battery b("eulerian.series_reconstruction");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      bool ok = false;
      try {
        ok = eulerian_from_series(ell, 3 * ell) == eulerian(ell);
      } catch (const std::exception&) {
      }
      b.expect(ok, at(ell));
    }
    out.push_back(b.done());
  }
  {
    Battery b("eulerian.numeric_worpitzky");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      for (unsigned k = 1; k <= 20; ++k) {
        Integer sum = 0;
        for (unsigned j = 1; j <= ell; ++j) sum += table.at(ell, j) * binomial(k + ell - j, ell);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), k, ell);
        b.expect(sum == power, at(ell) + " k=" + std::to_string(k));
      }
    }
    out.push_back(b.done());
  }
  {
    Battery b("eulerian.alpha_polynomial");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      bool ok = false;
      try {
        ok = alpha_polynomial(eulerian(ell), ell) == Polynomial::monomial(1, ell);
      } catch (const std::exception&) {
      }
      b.expect(ok, at(ell));
    }
    out.push_back(b.done());
  }
  {
    Battery b("eulerian.generating_series");
    const EgfCheck egf = egf_eulerian_check(max_ell);
    const std::vector<Rational> at_minus_one = eulerian_at_minus_one_series(max_ell);
    for (unsigned ell = 0; ell <= max_ell; ++ell) {
      const Polynomial a = eulerian(ell);
      b.expect(egf.rhs[ell] * Rational(factorial(ell)) == a && at_minus_one[ell] == a(-1) &&
                   (ell % 2 == 1 || ell == 0 || a(-1) == 0),
               at(ell));
    }
    out.push_back(b.done());
  }
  {
    Battery b("bernoulli.eulerian_bridge");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      const Rational constant = bernoulli_poly(ell).poly.coefficient(0);
      b.expect(bernoulli_number_from_eulerian(ell) == constant &&
                   (ell < 3 || ell % 2 == 0 || constant == 0),
               at(ell));
    }
    out.push_back(b.done());
  }
  {
    Battery b("bernoulli.second_form_and_power_sums");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      b.expect(second_form_check(ell).holds, at(ell));
      for (unsigned long n = 1; n <= 12; ++n) {
        Integer brute = 0;
        for (unsigned long x = 0; x < n; ++x) {
          Integer p;
          mpz_ui_pow_ui(p.get_mpz_t(), x, ell);
          brute += p;
        }
        b.expect(power_sum_via_bernoulli(ell, n) == Rational(brute),
                 at(ell) + " N=" + std::to_string(n));
      }
    }
    out.push_back(b.done());
  }
  {
    Battery b("bernoulli.zeta_routes");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      const ZetaRoutes z = zeta_negative_routes(ell);
      b.expect(z.via_bernoulli == z.via_eulerian, at(ell));
    }
    out.push_back(b.done());
  }
  {
    Battery b("shift.worpitzky");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      const Polynomial value = apply(ShiftOperator(eulerian(ell)), binom_poly(ell, ell));
      b.expect(value == Polynomial::monomial(1, ell), at(ell));
    }
    out.push_back(b.done());
  }
  {
    Battery b("shift.linial_formulas");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      for (unsigned m = 1; m <= std::max(options.max_m, 1U); ++m) {
        const Polynomial ps = linial_char_poly_ps(ell, m);
        const Polynomial worp = linial_char_poly_worp(ell, m);
        b.expect(ps == worp && ps.is_monic() && ps.degree() == static_cast<long>(ell) &&
                     ps.has_integer_coefficients(),
                 at(ell, m));
      }
    }
    out.push_back(b.done());
  }
  {
    Battery b("shift.operator_divisibility");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      for (unsigned m = 1; m <= std::max(options.max_m, 1U); ++m) {
        const OperatorDivision d = operator_divisibility(ell, m);
        b.expect(d.remainder.symbol().is_zero() &&
                     d.quotient.symbol().degree() == static_cast<long>(m * ell + m - 1) &&
                     apply(d.difference, binom_poly(ell, ell)).is_zero(),
                 at(ell, m));
      }
    }
    out.push_back(b.done());
  }
  {
    Battery b("congruence.soundness");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      for (unsigned m = 2; m <= max_m; ++m) {
        b.expect(congruence_report(eulerian(ell), ell, m).holds, at(ell, m));
      }
    }
    out.push_back(b.done());
  }
  {
    Battery b("congruence.falsification");
    std::mt19937_64 perturb_rng(options.seed);
    for (unsigned ell = 1; ell <= std::min(max_ell, 8U); ++ell) {
      for (unsigned m : {2U, 3U}) {
        for (unsigned trial = 0; trial < options.perturbations; ++trial) {
          const Polynomial f = eulerian_poly(ell) + random_perturbation(ell, perturb_rng);
          b.expect(!congruence_report(f, ell, m).holds, at(ell, m) + " f=" + to_canonical(f));
        }
      }
    }
    out.push_back(b.done());
  }
  {
    Battery b("congruence.characterization_solver");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      for (unsigned m : {2U, 3U, 5U}) {
        const CharacterizationSolution s = solve_characterization(ell, m);
        b.expect(s.unique && s.solution == eulerian(ell), at(ell, m));
      }
    }
    out.push_back(b.done());
  }
  {
    Battery b("congruence.defect_structure");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      for (unsigned m = 2; m <= max_m; ++m) {
        const CongruenceReport r = congruence_report(eulerian(ell), ell, m);
        const bool divisible_again = r.quotient(1) == 0;
        const bool strengthened = even_ell_strengthening(ell, m).holds;
        const long expected_degree = static_cast<long>(m * ell + m) - ell - 2;
        b.expect(r.quotient.degree() == expected_degree &&
                     divisible_again == (ell % 2 == 0) && strengthened == (ell % 2 == 0),
                 at(ell, m));
      }
    }
    out.push_back(b.done());
  }
  {
    Battery b("congruence.m2_identity");
    for (unsigned ell = 1; ell <= max_ell; ++ell) b.expect(m2_identity_check(ell).holds, at(ell));
    out.push_back(b.done());
  }
  {
    Battery b("congruence.polynomiality");
    for (unsigned ell = 1; ell <= max_ell; ++ell) {
      for (unsigned m = 2; m <= max_m; ++m) {
        const PolynomialityCheck p =
            polynomiality_check(ell, m, polynomiality_min_order(ell, m));
        const CongruenceReport r = congruence_report(eulerian(ell), ell, m);
        const Polynomial expected = r.quotient * pow(Rational(-static_cast<long>(m)), ell + 1);
        b.expect(p.holds && p.polynomial == expected, at(ell, m));
      }
    }
    out.push_back(b.done());
  }
  return out;
}

}  // namespace eulerpoly
