#ifndef EULERPOLY_LINSOLVE_HPP
#define EULERPOLY_LINSOLVE_HPP

#include "eulerpoly/rational.hpp"

#include <cstddef>
#include <vector>

namespace eulerpoly {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
  std::size_t rank = 0;  // rank of the coefficient matrix
  bool consistent = false;
  bool unique = false;  // consistent and rank == number of unknowns
  /// A solution with every free unknown set to zero; empty if inconsistent.
  std::vector<Rational> solution;
};

/*
 * Solves A x = b for a possibly non-square rational system.
 *
 * Rows are scaled to integers and reduced to echelon form with Bareiss
 * fraction-free elimination, so every intermediate entry is a minor of
 * the scaled augmented matrix and each division is exact. The pivot is
 * the first nonzero entry at or below the current row. Back substitution
 * runs in rationals.
 *
 * Throws std::invalid_argument if the row lengths disagree with b or
 * with each other.
 */
LinearSolution solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace eulerpoly

#endif  // EULERPOLY_LINSOLVE_HPP
