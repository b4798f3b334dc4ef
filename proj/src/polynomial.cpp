#include "eulerpoly/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eulerpoly {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::x() { return monomial(1, 1); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("polynomial divided by zero");
  for (auto& a : coeffs_) a /= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

Polynomial poly_multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

Polynomial taylor_shift(const Polynomial& p, const Rational& c) {
  if (c == 0 || p.degree() < 1) return p;
  // Repeated synthetic division by (x - c): after pass i, a[i] holds the
  // i-th coefficient in powers of (x - c).
  std::vector<Rational> a = p.coefficients();
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n - 1;; --j) {
      a[j] += c * a[j + 1];
      if (j == i) break;
    }
  }
  return Polynomial(std::move(a));
}

Polynomial compose_monomial(const Polynomial& p, unsigned m) {
  if (m == 0) throw std::invalid_argument("compose_monomial: m must be >= 1");
  if (m == 1 || p.is_zero()) return p;
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()) * m + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * m] = p.coefficients()[i];
  return Polynomial(std::move(out));
}

Polynomial scale_argument(const Polynomial& p, const Rational& c) {
  std::vector<Rational> out = p.coefficients();
  Rational power = 1;
  for (auto& a : out) {
    a *= power;
    power *= c;
  }
  return Polynomial(std::move(out));
}

std::vector<Rational> local_coefficients(const Polynomial& p, const Rational& c, unsigned k) {
  std::vector<Rational> shifted = taylor_shift(p, c).coefficients();
  shifted.resize(k);
  return shifted;
}

PowerDivision remainder_mod_power(const Polynomial& p, const Rational& c, unsigned k) {
  if (k == 0) throw std::invalid_argument("remainder_mod_power: k must be >= 1");
  const Polynomial shifted_poly = taylor_shift(p, c);
  const std::vector<Rational>& shifted = shifted_poly.coefficients();
  if (shifted.size() <= k) return {Polynomial(), p};
  std::vector<Rational> low(shifted.begin(), shifted.begin() + k);
  std::vector<Rational> high(shifted.begin() + k, shifted.end());
  return {taylor_shift(Polynomial(std::move(high)), -c),
          taylor_shift(Polynomial(std::move(low)), -c)};
}

Polynomial divide_exact_by_power(const Polynomial& p, const Rational& c, unsigned k) {
  if (k == 0) return p;
  PowerDivision d = remainder_mod_power(p, c, k);
  if (!d.remainder.is_zero()) {
    throw std::domain_error("divide_exact_by_power: (x - " + to_string(c) + ")^" +
                            std::to_string(k) + " does not divide " + to_canonical(p));
  }
  return d.quotient;
}

Polynomial one_minus_x_power(unsigned k) { return pow(Polynomial{1, -1}, k); }

Polynomial linear_power(const Rational& c, unsigned k) { return pow(Polynomial{-c, 1}, k); }

Polynomial geometric_sum(unsigned count) {
  return Polynomial(std::vector<Rational>(count, Rational(1)));
}

Polynomial binom_poly(long a, unsigned n) {
  Polynomial result = Polynomial::constant(1);
  for (unsigned i = 0; i < n; ++i) {
    result *= Polynomial{Rational(a - static_cast<long>(i)), 1};
  }
  return result / Rational(factorial(n));
}

std::string to_canonical(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(p.coefficients()[i]);
  }
  return out;
}

Polynomial parse_canonical(std::string_view text) {
  std::vector<Rational> coeffs;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) coeffs.push_back(parse_rational(token));
  if (coeffs.empty()) throw std::invalid_argument("empty polynomial string");
  return Polynomial(std::move(coeffs));
}

std::string to_pretty(const Polynomial& p, std::string_view variable, TermOrder order) {
  if (p.is_zero()) return "0";
  std::vector<std::size_t> powers;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.coefficients()[i] != 0) powers.push_back(i);
  }
  if (order == TermOrder::descending) std::reverse(powers.begin(), powers.end());

  std::string out;
  bool first = true;
  for (std::size_t power : powers) {
    const Rational& c = p.coefficients()[power];
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    if (power == 0) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) {
      if (magnitude.get_den() == 1) {
        out += to_string(magnitude);
      } else {
        out += '(' + to_string(magnitude) + ')';
      }
    }
    out += variable;
    if (power > 1) out += '^' + std::to_string(power);
  }
  return out;
}

}  // namespace eulerpoly
