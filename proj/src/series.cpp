#include "eulerpoly/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eulerpoly {

SeriesX::SeriesX(std::size_t order) : coeffs_(order + 1) {}

SeriesX::SeriesX(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("SeriesX needs at least one coefficient");
}

SeriesX SeriesX::from_polynomial(const Polynomial& p, std::size_t order) {
  SeriesX s(order);
  for (std::size_t i = 0; i <= order && i < p.size(); ++i) s.coeffs_[i] = p.coefficients()[i];
  return s;
}

const Rational& SeriesX::operator[](std::size_t power) const {
  if (power > order()) {
    throw std::out_of_range("SeriesX: x^" + std::to_string(power) + " beyond order " +
                            std::to_string(order()));
  }
  return coeffs_[power];
}

SeriesX SeriesX::truncate(std::size_t order) const {
  if (order > this->order()) throw std::out_of_range("SeriesX::truncate beyond known order");
  return SeriesX(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

SeriesX SeriesX::substitute_power(unsigned m) const {
  if (m == 0) throw std::invalid_argument("substitute_power: m must be >= 1");
  SeriesX out(order());
  for (std::size_t i = 0; i * m <= order(); ++i) out.coeffs_[i * m] = coeffs_[i];
  return out;
}

SeriesX SeriesX::scale_argument(const Rational& c) const {
  SeriesX out = *this;
  Rational power = 1;
  for (auto& a : out.coeffs_) {
    a *= power;
    power *= c;
  }
  return out;
}

SeriesX operator+(const SeriesX& lhs, const SeriesX& rhs) {
  SeriesX out(std::min(lhs.order(), rhs.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = lhs.coeffs_[i] + rhs.coeffs_[i];
  return out;
}

SeriesX operator-(const SeriesX& lhs, const SeriesX& rhs) {
  SeriesX out(std::min(lhs.order(), rhs.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = lhs.coeffs_[i] - rhs.coeffs_[i];
  return out;
}

SeriesX operator*(const SeriesX& lhs, const SeriesX& rhs) {
  SeriesX out(std::min(lhs.order(), rhs.order()));
  const std::size_t n = out.order();
  for (std::size_t i = 0; i <= n; ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

SeriesX operator*(const Rational& c, const SeriesX& s) {
  SeriesX out = s;
  for (auto& a : out.coeffs_) a *= c;
  return out;
}

SeriesX SeriesX::operator-() const { return Rational(-1) * *this; }

SeriesT::SeriesT(std::size_t order) : coeffs_(order + 1) {}

SeriesT::SeriesT(std::vector<Polynomial> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("SeriesT needs at least one coefficient");
}

const Polynomial& SeriesT::operator[](std::size_t power) const {
  if (power > order()) {
    throw std::out_of_range("SeriesT: t^" + std::to_string(power) + " beyond order " +
                            std::to_string(order()));
  }
  return coeffs_[power];
}

SeriesT SeriesT::truncate(std::size_t order) const {
  if (order > this->order()) throw std::out_of_range("SeriesT::truncate beyond known order");
  return SeriesT(std::vector<Polynomial>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

SeriesT operator+(const SeriesT& lhs, const SeriesT& rhs) {
  SeriesT out(std::min(lhs.order(), rhs.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = lhs.coeffs_[i] + rhs.coeffs_[i];
  return out;
}

SeriesT operator-(const SeriesT& lhs, const SeriesT& rhs) {
  SeriesT out(std::min(lhs.order(), rhs.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = lhs.coeffs_[i] - rhs.coeffs_[i];
  return out;
}

SeriesT operator*(const SeriesT& lhs, const SeriesT& rhs) {
  SeriesT out(std::min(lhs.order(), rhs.order()));
  const std::size_t n = out.order();
  for (std::size_t i = 0; i <= n; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

SeriesX expand_quotient(const Polynomial& p, unsigned d, std::size_t order) {
  if (p.degree() > static_cast<long>(order)) {
    throw std::invalid_argument("expand_quotient: order " + std::to_string(order) +
                                " below numerator degree " + std::to_string(p.degree()));
  }
  // 1/(1-x)^d = sum_k C(k+d-1, d-1) x^k; d = 0 is the constant 1.
  std::vector<Rational> kernel(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    kernel[k] = d == 0 ? Rational(k == 0 ? 1 : 0)
                       : Rational(binomial(static_cast<unsigned>(k) + d - 1, d - 1));
  }
  return SeriesX::from_polynomial(p, order) * SeriesX(std::move(kernel));
}

SeriesT series_t_divide(const SeriesT& num, const SeriesT& den) {
  const Polynomial& lead = den[0];
  if (lead.degree() != 0) {
    throw std::domain_error(
        "series_t_divide: t^0 coefficient of the denominator is not a nonzero constant (" +
        to_canonical(lead) + ")");
  }
  const Rational inverse = 1 / lead.coefficient(0);
  const std::size_t n = std::min(num.order(), den.order());
  std::vector<Polynomial> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Polynomial acc = num[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= den[i] * q[k - i];
    q[k] = acc * inverse;
  }
  return SeriesT(std::move(q));
}

SeriesT exp_series(const Polynomial& a, std::size_t order) {
  std::vector<Polynomial> out(order + 1);
  Polynomial power = Polynomial::constant(1);
  for (std::size_t n = 0; n <= order; ++n) {
    out[n] = power / Rational(factorial(static_cast<unsigned>(n)));
    power *= a;
  }
  return SeriesT(std::move(out));
}

}  // namespace eulerpoly
