#ifndef EULERPOLY_POLYNOMIAL_HPP
#define EULERPOLY_POLYNOMIAL_HPP

#include "eulerpoly/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace eulerpoly {

/*
 * Dense univariate polynomial with exact rational coefficients.
 *
 * Coefficient i multiplies the i-th power of the indeterminate. The same
 * type is used for polynomials in x, in t and for shift-operator symbols
 * in S; the indeterminate only matters when printing.
 *
 * Invariant: the highest stored coefficient is nonzero, so the zero
 * polynomial is the empty sequence and degree() == size() - 1 otherwise.
 */
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  /// The indeterminate itself.
  static Polynomial x();

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Coefficient of the given power; zero beyond the degree.
  Rational coefficient(std::size_t power) const;
  Rational leading_coefficient() const;
  bool is_monic() const;
  bool has_integer_coefficients() const;

  Rational operator()(const Rational& at) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator/=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator/(Polynomial p, const Rational& c) { return p /= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

/// Exact product; same as operator*.
Polynomial poly_multiply(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& base, unsigned exponent);

/// q(u) = p(u + c).
Polynomial taylor_shift(const Polynomial& p, const Rational& c);

/// p(x^m), m >= 1.
Polynomial compose_monomial(const Polynomial& p, unsigned m);

/// p(c x).
Polynomial scale_argument(const Polynomial& p, const Rational& c);

/// p = quotient * (x - c)^k + remainder with deg remainder < k.
struct PowerDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Division by (x - c)^k through a Taylor shift to c. k >= 1.
PowerDivision remainder_mod_power(const Polynomial& p, const Rational& c, unsigned k);

/// Coefficients of p in powers of (x - c), truncated to the first k; this
/// is the remainder of remainder_mod_power() before shifting back.
std::vector<Rational> local_coefficients(const Polynomial& p, const Rational& c, unsigned k);

/// Exact quotient p / (x - c)^k. Throws std::domain_error if the division
/// leaves a remainder.
Polynomial divide_exact_by_power(const Polynomial& p, const Rational& c, unsigned k);

/// (1 - x)^k and (x - c)^k.
Polynomial one_minus_x_power(unsigned k);
Polynomial linear_power(const Rational& c, unsigned k);

/// 1 + x + ... + x^(count-1).
Polynomial geometric_sum(unsigned count);

/// C(t + a, n) = (t + a)(t + a - 1)...(t + a - n + 1) / n! as a polynomial in t.
Polynomial binom_poly(long a, unsigned n);

/// Canonical text form: space separated "p/q" coefficients, lowest degree
/// first; "0" for the zero polynomial.
std::string to_canonical(const Polynomial& p);
/// Inverse of to_canonical(). Throws std::invalid_argument on malformed input.
Polynomial parse_canonical(std::string_view text);

enum class TermOrder { ascending, descending };

/// Human-readable form, e.g. "x + 11x^2 + 11x^3 + x^4" or "t^2 - 3t + 3".
/// Non-integer coefficients of non-constant terms are parenthesised: "(3/2)x^2".
std::string to_pretty(const Polynomial& p, std::string_view variable = "x",
                      TermOrder order = TermOrder::ascending);

}  // namespace eulerpoly

#endif  // EULERPOLY_POLYNOMIAL_HPP
