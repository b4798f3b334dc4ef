#ifndef EULERPOLY_RATIONAL_HPP
#define EULERPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eulerpoly {

// Arbitrary-precision scalars. mpq_class keeps values canonical (lowest
// terms, positive denominator, zero as 0/1) as long as every value built
// from a numerator/denominator pair goes through make_rational().
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// "p/q" with the denominator omitted when it is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Strict parse of "p" or "p/q" (optional leading '-', decimal digits only).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Rational pow(const Rational& base, unsigned exponent);

}  // namespace eulerpoly

#endif  // EULERPOLY_RATIONAL_HPP
