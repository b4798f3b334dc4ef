#ifndef EULERPOLY_EULERIAN_HPP
#define EULERPOLY_EULERIAN_HPP

#include "eulerpoly/polynomial.hpp"
#include "eulerpoly/series.hpp"

#include <vector>

namespace eulerpoly {

/// Eulerian triangle: rows[l-1][k-1] = A(l, k) for 1 <= k <= l <= ell.
struct EulerianTable {
  unsigned ell = 0;
  std::vector<std::vector<Integer>> rows;

  /// A(l, k), zero outside 1 <= k <= l <= ell.
  Integer at(unsigned l, unsigned k) const;
};

/// Triangle built from A(l, k) = k A(l-1, k) + (l-k+1) A(l-1, k-1), A(1,1) = 1.
/// ell = 0 gives an empty table.
EulerianTable eulerian_table(unsigned ell);

/// Alternating binomial sum sum_{j=0}^{k} (-1)^j C(ell+1, j) (k-j)^ell.
/// Returns 0 for k outside [1, ell].
Integer eulerian_number_direct(unsigned ell, long k);

/// A_ell(x), with A_0 = 1.
Polynomial eulerian_poly(unsigned ell);

/// Row `ell` of a table as a polynomial sum_k A(ell,k) x^k.
Polynomial eulerian_poly(const EulerianTable& table, unsigned ell);

/// sum_{k=1}^{order} k^ell x^k.
SeriesX frobenius_series(unsigned ell, std::size_t order);

/// A_ell recovered as the degree <= ell part of (1-x)^{ell+1} F_ell(x)
/// truncated at `order`; throws std::domain_error if any coefficient in
/// degrees ell+1..order fails to vanish.
Polynomial eulerian_from_series(unsigned ell, std::size_t order);

/// The polynomial alpha of degree <= ell with f(x)/(1-x)^{ell+1} =
/// sum_k alpha(k) x^k. Interpolates on k = 0..ell and checks the remaining
/// coefficients through max(2 ell + 1, deg f + ell + 1); std::domain_error
/// if the series coefficients are not such a polynomial.
Polynomial alpha_polynomial(const Polynomial& f, unsigned ell);

struct EgfCheck {
  SeriesT lhs;  // sum A_l(x) t^l / l!
  SeriesT rhs;  // (1-x) / (1 - x e^{t(1-x)})
  bool agree = false;
};

/// Compares the exponential generating series of the Eulerian polynomials
/// with its closed form through t^order.
EgfCheck egf_eulerian_check(unsigned order);

/// A_ell(-1) by direct evaluation, cross-checked against the series
/// 2 / (1 + e^{2t}); std::logic_error if the two disagree.
Rational eulerian_at_minus_one(unsigned ell);

/// l! [t^l] 2/(1 + e^{2t}) for l = 0..order.
std::vector<Rational> eulerian_at_minus_one_series(unsigned order);

}  // namespace eulerpoly

#endif  // EULERPOLY_EULERIAN_HPP
