#include "eulerpoly/congruence.hpp"
#include "eulerpoly/eulerian.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace eulerpoly;

namespace {

// Defect computed by plain polynomial arithmetic, independent of the library.
Polynomial brute_defect(const Polynomial& f, unsigned ell, unsigned m) {
  std::vector<Rational> fm(static_cast<std::size_t>(m) * f.size());
  for (std::size_t i = 0; i < f.size(); ++i) fm[i * m] = f.coefficients()[i];
  const Polynomial avg(std::vector<Rational>(m, Rational(1, m)));
  Polynomial rhs = f;
  for (unsigned i = 0; i <= ell; ++i) rhs = rhs * avg;
  return Polynomial(fm) - rhs;
}

bool vanishes_to_order(const Polynomial& p, unsigned k) {
  for (unsigned j = 0; j < k; ++j) {
    if (oracle::derivative_at(p, j, 1) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("defect of A_2 at m = 2") {
  const CongruenceReport r = eulerian_congruence_report(2, 2);
  CHECK(r.holds);
  CHECK(r.remainder.is_zero());
  CHECK(r.defect == Polynomial{0, Rational(-1, 8), Rational(1, 2), Rational(-3, 4), Rational(1, 2),
                               Rational(-1, 8)});
  CHECK(r.quotient == Polynomial{0, Rational(1, 8), Rational(-1, 8)});
  CHECK(r.defect == congruence_defect(eulerian_poly(2), 2, 2));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(congruence_report(Polynomial{0, 1}, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(congruence_report(Polynomial{0, 1}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(congruence_report(Polynomial{0, 0, 0, 1}, 2, 2), std::invalid_argument);
}

TEST_CASE("soundness for Eulerian polynomials") {
  for (unsigned ell = 1; ell <= 12; ++ell) {
    for (unsigned m = 2; m <= 6; ++m) {
      const CongruenceReport r = eulerian_congruence_report(ell, m);
      CHECK(r.holds);
      CHECK(r.defect == brute_defect(eulerian_poly(ell), ell, m));
      CHECK(vanishes_to_order(r.defect, ell + 1));
      CHECK(r.quotient.degree() == static_cast<long>(m * ell + m - ell - 2));
    }
  }
}

TEST_CASE("falsification of perturbed inputs") {
  CHECK_FALSE(congruence_report(Polynomial{0, 2, 1}, 2, 2).holds);
  std::mt19937_64 rng(42);
  for (unsigned ell = 2; ell <= 8; ++ell) {
    for (unsigned m = 2; m <= 3; ++m) {
      for (int i = 0; i < 20; ++i) {
        const Polynomial delta = random_perturbation(ell, rng);
        CHECK_FALSE(delta.is_zero());
        CHECK(delta.degree() < static_cast<long>(ell));
        const Polynomial f = eulerian_poly(ell) + delta;
        const CongruenceReport r = congruence_report(f, ell, m);
        CHECK_FALSE(r.holds);
        CHECK(r.holds == vanishes_to_order(brute_defect(f, ell, m), ell + 1));
      }
    }
  }
}

TEST_CASE("report decomposition") {
  std::mt19937_64 rng(5);
  for (unsigned ell = 1; ell <= 6; ++ell) {
    for (int i = 0; i < 10; ++i) {
      const Polynomial f = oracle::random_poly(rng, ell);
      const CongruenceReport r = congruence_report(f, ell, 3);
      CHECK(r.quotient * pow(Polynomial{-1, 1}, ell + 1) + r.remainder == r.defect);
      CHECK(r.remainder.degree() <= static_cast<long>(ell));
      CHECK(r.holds == r.remainder.is_zero());
    }
  }
}

TEST_CASE("characterization solver") {
  for (unsigned ell = 1; ell <= 10; ++ell) {
    for (unsigned m : {2u, 3u, 5u}) {
      const CharacterizationSolution s = solve_characterization(ell, m);
      CHECK(s.unique);
      CHECK(s.solution == eulerian_poly(ell));
      CHECK(s.system_rank == ell);
    }
  }
  const EquivalenceAudit audit = equivalence_audit(6, {2, 3, 4, 5});
  CHECK(audit.all_equal);
  CHECK(audit.matches_eulerian);
  CHECK(audit.solutions.size() == 4);
}

TEST_CASE("strengthening for even ell") {
  for (unsigned ell = 2; ell <= 12; ell += 2) {
    for (unsigned m = 2; m <= 5; ++m) CHECK(even_ell_strengthening(ell, m).holds);
  }
  for (unsigned ell : {3u, 5u, 7u}) {
    const StrengthenedCheck c = even_ell_strengthening(ell, 2);
    CHECK_FALSE(c.holds);
    CHECK_FALSE(c.remainder.is_zero());
  }
  const Polynomial d = eulerian_congruence_report(4, 3).defect;
  CHECK(vanishes_to_order(d, 6));
}

TEST_CASE("m = 2 identity") {
  for (unsigned ell = 1; ell <= 12; ++ell) {
    const M2IdentityCheck c = m2_identity_check(ell);
    CHECK(c.polynomial_identity);
    CHECK(c.series_identity);
    CHECK(c.holds);
    CHECK(c.lhs == c.rhs);
  }
}

TEST_CASE("polynomiality") {
  const PolynomialityCheck a = polynomiality_check(1, 2, 24);
  CHECK(a.holds);
  CHECK(a.last_nonzero <= static_cast<long>(polynomiality_degree_bound(1, 2)));
  const PolynomialityCheck b = polynomiality_check(2, 3, 60);
  CHECK(b.holds);
  CHECK_THROWS_AS(polynomiality_check(2, 3, polynomiality_min_order(2, 3) - 1), std::invalid_argument);

  for (unsigned ell = 1; ell <= 5; ++ell) {
    for (unsigned m = 2; m <= 4; ++m) {
      const PolynomialityCheck c = polynomiality_check(ell, m, polynomiality_min_order(ell, m));
      CHECK(c.holds);
      // P(x) = (-m)^{ell+1} times the congruence quotient.
      Rational scale = 1;
      for (unsigned i = 0; i <= ell; ++i) scale *= -static_cast<long>(m);
      CHECK(c.polynomial == eulerian_congruence_report(ell, m).quotient * scale);
    }
  }
}
