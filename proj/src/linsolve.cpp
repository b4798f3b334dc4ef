#include "eulerpoly/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace eulerpoly {

LinearSolution solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_exact: rhs length mismatch");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");
  }

  // Integer augmented matrix [A | b], each row scaled by its denominators' lcm.
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer scale = 1;
    for (const auto& q : a[i]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b[i].get_den_mpz_t());
    for (std::size_t j = 0; j <= cols; ++j) {
      const Rational& q = j < cols ? a[i][j] : b[i];
      m[i][j] = q.get_num() * (scale / q.get_den());
    }
  }

  std::vector<std::size_t> pivot_cols;
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(m[p], m[r]);

    const Integer& pivot = m[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j <= cols; ++j) {
        Integer v = pivot * m[i][j] - m[i][col] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][col] = 0;
    }
    previous = pivot;
    pivot_cols.push_back(col);
    ++r;
  }

  LinearSolution out;
  out.rank = pivot_cols.size();
  out.consistent = true;
  for (std::size_t i = out.rank; i < rows; ++i) {
    if (m[i][cols] != 0) out.consistent = false;
  }
  if (!out.consistent) return out;
  out.unique = out.rank == cols;

  out.solution.assign(cols, Rational(0));
  for (std::size_t k = out.rank; k-- > 0;) {
    const std::size_t col = pivot_cols[k];
    Rational acc(m[k][cols]);
    for (std::size_t j = col + 1; j < cols; ++j) acc -= Rational(m[k][j]) * out.solution[j];
    out.solution[col] = acc / Rational(m[k][col]);
  }
  return out;
}

}  // namespace eulerpoly
