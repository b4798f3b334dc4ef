// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "eulerpoly/bernoulli.hpp"
#include "eulerpoly/congruence.hpp"
#include "eulerpoly/eulerian.hpp"
#include "eulerpoly/shift.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace eulerpoly;

namespace {

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // <= 0 means no limit
  std::function<std::string()> run;  // empty string on success, else the first failure
};

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != ' ') out.push_back(c);
  }
  return out;
}

Integer choose(long n, unsigned k) {
  if (n < 0 || static_cast<unsigned long>(n) < k) return 0;
  return binomial(static_cast<unsigned>(n), k);
}

std::string known_values() {
  const char* expected_a[] = {"x", "x+x^2", "x+4x^2+x^3", "x+11x^2+11x^3+x^4"};
  for (unsigned l = 1; l <= 4; ++l) {
    const std::string got = strip_spaces(to_pretty(eulerian_poly(l)));
    if (got != expected_a[l - 1]) return "A_" + std::to_string(l) + " = " + got;
  }
  const std::vector<Polynomial> expected_b{
      Polynomial{1},
      Polynomial{Rational(-1, 2), 1},
      Polynomial{Rational(1, 6), -1, 1},
      Polynomial{0, Rational(1, 2), Rational(-3, 2), 1},
      Polynomial{Rational(-1, 30), 0, 1, -2, 1},
  };
  for (unsigned l = 0; l <= 4; ++l) {
    const Polynomial got = bernoulli_poly(l).poly;
    if (got != expected_b[l]) return "B_" + std::to_string(l) + " = " + to_canonical(got);
  }
  return {};
}

std::string eulerian_routes() {
  const EulerianTable table = eulerian_table(12);
  for (unsigned l = 1; l <= 12; ++l) {
    for (unsigned k = 1; k <= l; ++k) {
      if (eulerian_number_direct(l, k) != table.at(l, k)) {
        return "closed form differs at A(" + std::to_string(l) + "," + std::to_string(k) + ")";
      }
    }
    if (eulerian_from_series(l, 3 * l + 2) != eulerian_poly(table, l)) {
      return "series extraction differs at ell=" + std::to_string(l);
    }
  }
  return {};
}

std::string congruence_holds() {
  std::size_t cases = 0;
  for (unsigned l = 2; l <= 12; ++l) {
    for (unsigned m = 2; m <= 6; ++m) {
      ++cases;
      if (!eulerian_congruence_report(l, m).holds) {
        return "nonzero remainder at ell=" + std::to_string(l) + " m=" + std::to_string(m);
      }
    }
  }
  return cases == 55 ? std::string() : "expected 55 cases, ran " + std::to_string(cases);
}

std::string characterization() {
  for (unsigned l = 1; l <= 10; ++l) {
    for (unsigned m : {2u, 3u, 5u}) {
      const CharacterizationSolution s = solve_characterization(l, m);
      if (!s.unique || s.solution != eulerian_poly(l)) {
        return "solver missed A_" + std::to_string(l) + " at m=" + std::to_string(m);
      }
    }
  }
  std::mt19937_64 rng(42);
  for (unsigned l = 1; l <= 8; ++l) {
    for (unsigned m : {2u, 3u}) {
      for (int i = 0; i < 50; ++i) {
        const Polynomial f = eulerian_poly(l) + random_perturbation(l, rng);
        if (f == eulerian_poly(l)) return "perturbation left A_" + std::to_string(l) + " unchanged";
        if (congruence_report(f, l, m).holds) {
          return "perturbed input " + to_canonical(f) + " passed at m=" + std::to_string(m);
        }
      }
    }
  }
  return {};
}

std::string strengthening() {
  for (unsigned l = 2; l <= 12; l += 2) {
    for (unsigned m = 2; m <= 5; ++m) {
      if (!even_ell_strengthening(l, m).holds) {
        return "even ell=" + std::to_string(l) + " m=" + std::to_string(m) + " fails";
      }
    }
  }
  for (unsigned l : {3u, 5u, 7u}) {
    if (even_ell_strengthening(l, 2).remainder.is_zero()) {
      return "odd ell=" + std::to_string(l) + " unexpectedly has zero remainder";
    }
  }
  return {};
}

std::string m2_identity() {
  for (unsigned l = 1; l <= 12; ++l) {
    if (!m2_identity_check(l).polynomial_identity) return "fails at ell=" + std::to_string(l);
  }
  return {};
}

std::string linial() {
  if (linial_char_poly_ps(2, 1) != Polynomial{3, -3, 1}) return "chi(L^1) at ell=2 is not t^2 - 3t + 3";
  for (unsigned l = 1; l <= 8; ++l) {
    for (unsigned m = 1; m <= 5; ++m) {
      const std::string where = " at ell=" + std::to_string(l) + " m=" + std::to_string(m);
      if (linial_char_poly_ps(l, m) != linial_char_poly_worp(l, m)) return "formulas differ" + where;
      if (!operator_divisibility(l, m).remainder.symbol().is_zero()) return "nonzero remainder" + where;
    }
  }
  return {};
}

std::string worpitzky() {
  for (unsigned l = 1; l <= 12; ++l) {
    if (!worpitzky_check(l).holds) return "operator form fails at ell=" + std::to_string(l);
  }
  const EulerianTable table = eulerian_table(12);
  for (unsigned l = 1; l <= 12; ++l) {
    for (long k = 0; k <= 20; ++k) {
      Integer sum = 0;
      for (unsigned j = 1; j <= l; ++j) sum += table.at(l, j) * choose(k + j - 1, l);
      Integer power = 1;
      for (unsigned i = 0; i < l; ++i) power *= k;
      if (sum != power) return "numeric form fails at ell=" + std::to_string(l) + " k=" + std::to_string(k);
    }
  }
  return {};
}

std::string bernoulli_bridges() {
  for (unsigned l = 1; l <= 20; ++l) {
    if (bernoulli_number_from_eulerian(l) != bernoulli_poly(l).poly(Rational(0))) {
      return "Eulerian bridge fails at ell=" + std::to_string(l);
    }
  }
  for (unsigned l = 0; l <= 10; ++l) {
    if (!second_form_check(l).holds) return "second form fails at ell=" + std::to_string(l);
  }
  const std::pair<unsigned, Rational> zeta[] = {{1, Rational(-1, 12)}, {3, Rational(1, 120)}};
  for (const auto& [l, value] : zeta) {
    const ZetaRoutes r = zeta_negative_routes(l);
    if (r.via_bernoulli != value || r.via_eulerian != value) {
      return "zeta(-" + std::to_string(l) + ") = " + to_string(r.via_bernoulli) + " / " +
             to_string(r.via_eulerian);
    }
  }
  return {};
}

std::string egf_truncations() {
  const EgfCheck c = egf_eulerian_check(6);
  if (!c.agree) return "Eulerian EGF disagrees through t^6";
  for (unsigned l = 0; l <= 6; ++l) {
    if (c.rhs[l] * Rational(factorial(l)) != eulerian_poly(l)) {
      return "closed form coefficient differs at t^" + std::to_string(l);
    }
  }
  const std::vector<Rational> at_minus_one = eulerian_at_minus_one_series(8);
  for (unsigned l = 0; l <= 8; ++l) {
    if (at_minus_one[l] != eulerian_poly(l)(Rational(-1))) {
      return "A_" + std::to_string(l) + "(-1) differs from the series";
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "known values of A_1..A_4 and B_0..B_4", 1.0, known_values},
      {2, "Eulerian recurrence, closed form and series agree for ell <= 12", 5.0, eulerian_routes},
      {3, "congruence remainder is zero for 2 <= ell <= 12, 2 <= m <= 6", 30.0, congruence_holds},
      {4, "characterization recovers A_ell; perturbations fail", 60.0, characterization},
      {5, "strengthened congruence for even ell, failure for odd ell", 0, strengthening},
      {6, "m = 2 identity for ell <= 12", 0, m2_identity},
      {7, "Linial formulas agree and operator divisibility holds", 0, linial},
      {8, "Worpitzky identity in operator and numeric form", 0, worpitzky},
      {9, "Bernoulli bridges and zeta values", 0, bernoulli_bridges},
      {10, "exponential generating series truncations", 0, egf_truncations},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      detail = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit_s) + " s";
    }
    const bool ok = detail.empty();
    failures += ok ? 0 : 1;
    std::printf("AC%-2d %s  %-66s %8.3f s%s%s\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), seconds,
                ok ? "" : "  ", detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
