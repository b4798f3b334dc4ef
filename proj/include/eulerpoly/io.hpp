#ifndef EULERPOLY_IO_HPP
#define EULERPOLY_IO_HPP

#include "eulerpoly/bernoulli.hpp"
#include "eulerpoly/congruence.hpp"
#include "eulerpoly/eulerian.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace eulerpoly {

/// Coefficients as exact "p/q" strings, lowest degree first; [] for zero.
nlohmann::ordered_json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::ordered_json& j);

/// Array of rows, each an array of decimal integer strings.
nlohmann::ordered_json to_json(const EulerianTable& table);
/// One line per row, entries comma separated, no header.
std::string to_csv(const EulerianTable& table);

/// {ell, m, f, holds, remainder, quotient, defect}.
nlohmann::ordered_json to_json(const CongruenceReport& report);

nlohmann::ordered_json to_json(const CharacterizationSolution& solution);

/// Rows B_0..B_ell as coefficient arrays.
std::vector<Polynomial> bernoulli_table(unsigned ell);
nlohmann::ordered_json bernoulli_table_json(const std::vector<Polynomial>& rows);
std::string bernoulli_table_csv(const std::vector<Polynomial>& rows);

}  // namespace eulerpoly

#endif  // EULERPOLY_IO_HPP
