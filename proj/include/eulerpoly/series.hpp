#ifndef EULERPOLY_SERIES_HPP
#define EULERPOLY_SERIES_HPP

#include "eulerpoly/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace eulerpoly {

/// Power series in x truncated after x^order. Binary operations yield the
/// smaller of the two orders.
class SeriesX {
 public:
  /// The zero series of the given order.
  explicit SeriesX(std::size_t order);
  /// Order is coefficients.size() - 1; coefficients must be nonempty.
  explicit SeriesX(std::vector<Rational> coefficients);

  static SeriesX from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Throws std::out_of_range past the order.
  const Rational& operator[](std::size_t power) const;

  SeriesX truncate(std::size_t order) const;
  /// Drops trailing zeros; the result is exact only if the series is known
  /// to be a polynomial of degree <= order.
  Polynomial to_polynomial() const { return Polynomial(coeffs_); }

  /// f(x^m), same order.
  SeriesX substitute_power(unsigned m) const;
  /// f(c x), same order.
  SeriesX scale_argument(const Rational& c) const;

  friend SeriesX operator+(const SeriesX& lhs, const SeriesX& rhs);
  friend SeriesX operator-(const SeriesX& lhs, const SeriesX& rhs);
  friend SeriesX operator*(const SeriesX& lhs, const SeriesX& rhs);
  friend SeriesX operator*(const Rational& c, const SeriesX& s);
  SeriesX operator-() const;

  friend bool operator==(const SeriesX& lhs, const SeriesX& rhs) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Power series in t truncated after t^order whose coefficients are
/// polynomials in x.
class SeriesT {
 public:
  explicit SeriesT(std::size_t order);
  explicit SeriesT(std::vector<Polynomial> coefficients);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  const Polynomial& operator[](std::size_t power) const;

  SeriesT truncate(std::size_t order) const;
  /// Applies a polynomial map to every coefficient.
  template <typename F>
  SeriesT map(F&& f) const {
    std::vector<Polynomial> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return SeriesT(std::move(out));
  }

  friend SeriesT operator+(const SeriesT& lhs, const SeriesT& rhs);
  friend SeriesT operator-(const SeriesT& lhs, const SeriesT& rhs);
  friend SeriesT operator*(const SeriesT& lhs, const SeriesT& rhs);

  friend bool operator==(const SeriesT& lhs, const SeriesT& rhs) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

/// Truncated series of p(x) / (1 - x)^d through x^order. Requires
/// order >= deg p.
SeriesX expand_quotient(const Polynomial& p, unsigned d, std::size_t order);

/// Truncated quotient num / den to the common order. The t^0 coefficient of
/// den must be a nonzero constant; otherwise std::domain_error.
SeriesT series_t_divide(const SeriesT& num, const SeriesT& den);

/// exp(a t) with a a polynomial in x: coefficients a^n / n!.
SeriesT exp_series(const Polynomial& a, std::size_t order);

}  // namespace eulerpoly

#endif  // EULERPOLY_SERIES_HPP
