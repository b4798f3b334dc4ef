#include "eulerpoly/bernoulli.hpp"

#include "eulerpoly/eulerian.hpp"
#include "eulerpoly/shift.hpp"

#include <stdexcept>

namespace eulerpoly {

SeriesT bernoulli_egf(std::size_t order) {
  // e^{xt} / ((e^t - 1)/t): numerator x^n/n!, denominator 1/(n+1)!.
  std::vector<Polynomial> num(order + 1);
  std::vector<Polynomial> den(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    const auto k = static_cast<unsigned>(n);
    num[n] = Polynomial::monomial(Rational(1) / Rational(factorial(k)), n);
    den[n] = Polynomial::constant(Rational(1) / Rational(factorial(k + 1)));
  }
  return series_t_divide(SeriesT(std::move(num)), SeriesT(std::move(den)));
}

BernoulliPoly bernoulli_poly(unsigned ell) {
  return {ell, bernoulli_egf(ell)[ell] * Rational(factorial(ell))};
}

Rational bernoulli_number_from_eulerian(unsigned ell) {
  if (ell == 0) throw std::invalid_argument("bernoulli_number_from_eulerian: ell must be >= 1");
  const Rational two_pow = pow(Rational(2), ell);
  return Rational(ell) / (two_pow * (1 - two_pow)) * eulerian_at_minus_one(ell - 1);
}

Rational power_sum_via_bernoulli(unsigned ell, unsigned long n) {
  const Polynomial b = bernoulli_poly(ell + 1).poly;
  return (b(Rational(n)) - b(Rational(0))) / Rational(ell + 1);
}

SecondFormCheck second_form_check(unsigned ell) {
  SecondFormCheck check;
  check.lhs = bernoulli_poly(ell + 1).poly;
  check.lhs -= Polynomial::constant(check.lhs.coefficient(0));
  check.rhs = apply(ShiftOperator(eulerian_poly(ell)), binom_poly(ell, ell + 1)) *
              Rational(ell + 1);
  check.holds = check.lhs == check.rhs;
  return check;
}

ZetaRoutes zeta_negative_routes(unsigned ell) {
  if (ell == 0) throw std::invalid_argument("zeta_negative: ell must be >= 1");
  ZetaRoutes routes;
  routes.via_bernoulli = -bernoulli_poly(ell + 1).poly.coefficient(0) / Rational(ell + 1);
  const Rational two_pow = pow(Rational(2), ell + 1);
  routes.via_eulerian = eulerian_at_minus_one(ell) / (two_pow * (two_pow - 1));
  return routes;
}

Rational zeta_negative(unsigned ell) {
  const ZetaRoutes routes = zeta_negative_routes(ell);
  if (routes.via_bernoulli != routes.via_eulerian) {
    throw std::logic_error("zeta_negative: Bernoulli route " + to_string(routes.via_bernoulli) +
                           " disagrees with Eulerian route " + to_string(routes.via_eulerian));
  }
  return routes.via_bernoulli;
}

}  // namespace eulerpoly
