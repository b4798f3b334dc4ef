#include "eulerpoly/eulerian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eulerpoly {

Integer EulerianTable::at(unsigned l, unsigned k) const {
  if (l == 0 || l > ell || k == 0 || k > l) return 0;
  return rows[l - 1][k - 1];
}

EulerianTable eulerian_table(unsigned ell) {
  EulerianTable table;
  table.ell = ell;
  table.rows.reserve(ell);
  for (unsigned l = 1; l <= ell; ++l) {
    std::vector<Integer> row(l);
    if (l == 1) {
      row[0] = 1;
    } else {
      const auto& prev = table.rows.back();
      for (unsigned k = 1; k <= l; ++k) {
        Integer value = 0;
        if (k <= l - 1) value += k * prev[k - 1];
        if (k >= 2) value += (l - k + 1) * prev[k - 2];
        row[k - 1] = value;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Integer eulerian_number_direct(unsigned ell, long k) {
  if (k < 1 || k > static_cast<long>(ell)) return 0;
  Integer sum = 0;
  for (long j = 0; j <= k; ++j) {
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(k - j), ell);
    term *= binomial(ell + 1, static_cast<unsigned>(j));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Polynomial eulerian_poly(const EulerianTable& table, unsigned ell) {
  if (ell == 0) return Polynomial::constant(1);
  if (ell > table.ell) throw std::out_of_range("eulerian_poly: row beyond table");
  std::vector<Rational> coeffs(ell + 1);
  for (unsigned k = 1; k <= ell; ++k) coeffs[k] = Rational(table.rows[ell - 1][k - 1]);
  return Polynomial(std::move(coeffs));
}

Polynomial eulerian_poly(unsigned ell) { return eulerian_poly(eulerian_table(ell), ell); }

SeriesX frobenius_series(unsigned ell, std::size_t order) {
  std::vector<Rational> coeffs(order + 1);
  for (std::size_t k = 1; k <= order; ++k) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), k, ell);
    coeffs[k] = Rational(power);
  }
  return SeriesX(std::move(coeffs));
}

Polynomial eulerian_from_series(unsigned ell, std::size_t order) {
  if (order < ell) throw std::invalid_argument("eulerian_from_series: order below ell");
  const SeriesX product =
      SeriesX::from_polynomial(one_minus_x_power(ell + 1), order) * frobenius_series(ell, order);
  for (std::size_t i = ell + 1; i <= order; ++i) {
    if (product[i] != 0) {
      throw std::domain_error("eulerian_from_series: nonzero coefficient at x^" +
                              std::to_string(i));
    }
  }
  return product.truncate(ell).to_polynomial();
}

Polynomial alpha_polynomial(const Polynomial& f, unsigned ell) {
  const std::size_t last = std::max<std::size_t>(
      2 * static_cast<std::size_t>(ell) + 1,
      static_cast<std::size_t>(std::max(f.degree(), 0L)) + ell + 1);
  const SeriesX series = expand_quotient(f, ell + 1, last);

  // Newton forward-difference form on nodes 0..ell:
  // alpha(t) = sum_j (Delta^j s)(0) C(t, j).
  std::vector<Rational> diffs(series.coefficients().begin(),
                              series.coefficients().begin() + ell + 1);
  Polynomial alpha;
  for (unsigned j = 0; j <= ell; ++j) {
    alpha += diffs[0] * binom_poly(0, j);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }

  for (std::size_t k = ell + 1; k <= last; ++k) {
    if (alpha(Rational(static_cast<unsigned long>(k))) != series[k]) {
      throw std::domain_error("alpha_polynomial: series coefficient at x^" + std::to_string(k) +
                              " is not a polynomial of degree <= " + std::to_string(ell) +
                              " in k");
    }
  }
  return alpha;
}

namespace {

// f / (1 - x), exact.
Polynomial divide_by_one_minus_x(const Polynomial& f) { return -divide_exact_by_power(f, 1, 1); }

}  // namespace

EgfCheck egf_eulerian_check(unsigned order) {
  const EulerianTable table = eulerian_table(order);
  std::vector<Polynomial> lhs(order + 1);
  for (unsigned l = 0; l <= order; ++l) lhs[l] = eulerian_poly(table, l) / Rational(factorial(l));

  // Numerator 1 - x and denominator 1 - x e^{t(1-x)} share the factor
  // (1 - x) in every t-coefficient; cancelling it leaves a unit t^0 term.
  const Polynomial one_minus_x{1, -1};
  const SeriesT exponential = exp_series(one_minus_x, order);
  std::vector<Polynomial> num(order + 1);
  std::vector<Polynomial> den(order + 1);
  num[0] = one_minus_x;
  for (unsigned n = 0; n <= order; ++n) {
    den[n] = -(Polynomial::x() * exponential[n]);
  }
  den[0] += Polynomial::constant(1);

  const SeriesT rhs = series_t_divide(SeriesT(std::move(num)).map(divide_by_one_minus_x),
                                      SeriesT(std::move(den)).map(divide_by_one_minus_x));
  SeriesT left(std::move(lhs));
  const bool agree = left == rhs;
  return {std::move(left), rhs, agree};
}

std::vector<Rational> eulerian_at_minus_one_series(unsigned order) {
  // 2 / (1 + e^{2t}): denominator coefficients 2 at t^0, 2^n/n! above.
  std::vector<Polynomial> num(order + 1);
  std::vector<Polynomial> den(order + 1);
  num[0] = Polynomial::constant(2);
  for (unsigned n = 0; n <= order; ++n) {
    const Rational term = pow(Rational(2), n) / Rational(factorial(n));
    den[n] = Polynomial::constant(n == 0 ? Rational(1 + term) : term);
  }
  const SeriesT q = series_t_divide(SeriesT(std::move(num)), SeriesT(std::move(den)));
  std::vector<Rational> out(order + 1);
  for (unsigned l = 0; l <= order; ++l) out[l] = q[l].coefficient(0) * Rational(factorial(l));
  return out;
}

Rational eulerian_at_minus_one(unsigned ell) {
  const Rational direct = eulerian_poly(ell)(Rational(-1));
  const Rational via_series = eulerian_at_minus_one_series(ell)[ell];
  if (direct != via_series) {
    throw std::logic_error("eulerian_at_minus_one: evaluation " + to_string(direct) +
                           " disagrees with generating series " + to_string(via_series));
  }
  return direct;
}

}  // namespace eulerpoly
