#ifndef EULERPOLY_BERNOULLI_HPP
#define EULERPOLY_BERNOULLI_HPP

#include "eulerpoly/polynomial.hpp"
#include "eulerpoly/series.hpp"

namespace eulerpoly {

/// B_ell(x); monic of degree ell.
struct BernoulliPoly {
  unsigned ell = 0;
  Polynomial poly;
};

/// t e^{xt} / (e^t - 1) expanded through t^order, the factor t cancelled
/// first so the divisor (e^t - 1)/t has constant term 1.
SeriesT bernoulli_egf(std::size_t order);

BernoulliPoly bernoulli_poly(unsigned ell);

/// ell / (2^ell (1 - 2^ell)) * A_{ell-1}(-1), ell >= 1.
Rational bernoulli_number_from_eulerian(unsigned ell);

/// (B_{ell+1}(n) - B_{ell+1}(0)) / (ell + 1), which equals sum_{x=0}^{n-1} x^ell.
Rational power_sum_via_bernoulli(unsigned ell, unsigned long n);

struct SecondFormCheck {
  Polynomial lhs;  // B_{ell+1}(t) - B_{ell+1}(0)
  Polynomial rhs;  // (ell+1) A_ell(S) C(t+ell, ell+1)
  bool holds = false;
};

SecondFormCheck second_form_check(unsigned ell);

struct ZetaRoutes {
  Rational via_bernoulli;  // -B_{ell+1}(0) / (ell+1)
  Rational via_eulerian;   // A_ell(-1) / (2^{ell+1} (2^{ell+1} - 1))
};

ZetaRoutes zeta_negative_routes(unsigned ell);

/// zeta(-ell) for ell >= 1; std::logic_error if the two routes disagree.
Rational zeta_negative(unsigned ell);

}  // namespace eulerpoly

#endif  // EULERPOLY_BERNOULLI_HPP
