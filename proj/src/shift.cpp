#include "eulerpoly/shift.hpp"

#include "eulerpoly/eulerian.hpp"

#include <stdexcept>
#include <string>

namespace eulerpoly {

ShiftOperator ShiftOperator::average(unsigned m) {
  return ShiftOperator(geometric_sum(m + 1) / Rational(m + 1));
}

Polynomial ShiftOperator::operator()(const Polynomial& f) const { return apply(*this, f); }

Polynomial apply(const ShiftOperator& op, const Polynomial& f) {
  Polynomial out;
  const auto& c = op.symbol().coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    out += taylor_shift(f, -Rational(static_cast<unsigned long>(k))) * c[k];
  }
  return out;
}

WorpitzkyCheck worpitzky_check(unsigned ell) {
  WorpitzkyCheck check;
  check.value = apply(ShiftOperator(eulerian_poly(ell)), binom_poly(ell, ell));
  check.holds = check.value == Polynomial::monomial(1, ell);
  return check;
}

namespace {

void require_positive(unsigned ell, const char* what) {
  if (ell == 0) throw std::invalid_argument(std::string(what) + ": ell must be >= 1");
}

ShiftOperator averaged_power(unsigned ell, unsigned m) {
  return ShiftOperator(pow(ShiftOperator::average(m).symbol(), ell + 1));
}

}  // namespace

Polynomial linial_char_poly_ps(unsigned ell, unsigned m) {
  require_positive(ell, "linial_char_poly_ps");
  return apply(averaged_power(ell, m), Polynomial::monomial(1, ell));
}

Polynomial linial_char_poly_worp(unsigned ell, unsigned m) {
  require_positive(ell, "linial_char_poly_worp");
  const ShiftOperator op(compose_monomial(eulerian_poly(ell), m + 1));
  return apply(op, binom_poly(ell, ell));
}

OperatorDivision operator_divisibility(unsigned ell, unsigned m) {
  require_positive(ell, "operator_divisibility");
  const Polynomial eulerian = eulerian_poly(ell);
  OperatorDivision out;
  out.difference = averaged_power(ell, m) * ShiftOperator(eulerian) -
                   ShiftOperator(compose_monomial(eulerian, m + 1));
  PowerDivision d = remainder_mod_power(out.difference.symbol(), 1, ell + 1);
  out.quotient = ShiftOperator(std::move(d.quotient));
  out.remainder = ShiftOperator(std::move(d.remainder));
  return out;
}

}  // namespace eulerpoly
