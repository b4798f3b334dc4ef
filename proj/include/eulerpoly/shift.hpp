#ifndef EULERPOLY_SHIFT_HPP
#define EULERPOLY_SHIFT_HPP

#include "eulerpoly/polynomial.hpp"

namespace eulerpoly {

/*
 * A polynomial in the shift operator S, acting on polynomials in t by
 * (S^k f)(t) = f(t - k). Operators compose by multiplying their symbols.
 */
class ShiftOperator {
 public:
  ShiftOperator() = default;
  explicit ShiftOperator(Polynomial symbol) : symbol_(std::move(symbol)) {}

  static ShiftOperator identity() { return ShiftOperator(Polynomial::constant(1)); }
  /// S^k.
  static ShiftOperator shift(unsigned k) { return ShiftOperator(Polynomial::monomial(1, k)); }
  /// (1 + S + ... + S^m) / (m + 1).
  static ShiftOperator average(unsigned m);

  const Polynomial& symbol() const { return symbol_; }

  Polynomial operator()(const Polynomial& f) const;

  friend ShiftOperator operator+(const ShiftOperator& a, const ShiftOperator& b) {
    return ShiftOperator(a.symbol_ + b.symbol_);
  }
  friend ShiftOperator operator-(const ShiftOperator& a, const ShiftOperator& b) {
    return ShiftOperator(a.symbol_ - b.symbol_);
  }
  friend ShiftOperator operator*(const ShiftOperator& a, const ShiftOperator& b) {
    return ShiftOperator(a.symbol_ * b.symbol_);
  }
  friend bool operator==(const ShiftOperator&, const ShiftOperator&) = default;

 private:
  Polynomial symbol_;
};

/// sum_k c_k f(t - k) for op = sum_k c_k S^k.
Polynomial apply(const ShiftOperator& op, const Polynomial& f);

struct WorpitzkyCheck {
  Polynomial value;  // A_ell(S) C(t+ell, ell)
  bool holds = false;  // value == t^ell
};

WorpitzkyCheck worpitzky_check(unsigned ell);

/// Characteristic polynomial of the extended Linial arrangement from the
/// averaging-operator formula ((1 + S + ... + S^m)/(m+1))^{ell+1} t^ell.
Polynomial linial_char_poly_ps(unsigned ell, unsigned m);

/// Same polynomial from A_ell(S^{m+1}) C(t+ell, ell). m = 0 reduces to the
/// Worpitzky identity.
Polynomial linial_char_poly_worp(unsigned ell, unsigned m);

struct OperatorDivision {
  ShiftOperator difference;  // D = avg^{ell+1} A_ell(S) - A_ell(S^{m+1})
  ShiftOperator quotient;    // D = (S - 1)^{ell+1} quotient + remainder
  ShiftOperator remainder;
};

/// Divides the difference of the two Linial operators by (S - 1)^{ell+1}.
OperatorDivision operator_divisibility(unsigned ell, unsigned m);

}  // namespace eulerpoly

#endif  // EULERPOLY_SHIFT_HPP
