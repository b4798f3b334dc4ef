#include "eulerpoly/io.hpp"

#include <stdexcept>

namespace eulerpoly {

nlohmann::ordered_json to_json(const Polynomial& p) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Polynomial polynomial_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Polynomial(std::move(coeffs));
}

nlohmann::ordered_json to_json(const EulerianTable& table) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_csv(const EulerianTable& table) {
  std::string out;
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ',';
      out += to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json to_json(const CongruenceReport& report) {
  return {
      {"ell", report.ell},
      {"m", report.m},
      {"f", to_json(report.f)},
      {"holds", report.holds},
      {"remainder", to_json(report.remainder)},
      {"quotient", to_json(report.quotient)},
      {"defect", to_json(report.defect)},
  };
}

nlohmann::ordered_json to_json(const CharacterizationSolution& solution) {
  return {
      {"ell", solution.ell},
      {"m", solution.m},
      {"solution", to_json(solution.solution)},
      {"rank", solution.system_rank},
      {"unique", solution.unique},
  };
}

std::vector<Polynomial> bernoulli_table(unsigned ell) {
  const SeriesT egf = bernoulli_egf(ell);
  std::vector<Polynomial> rows;
  rows.reserve(ell + 1);
  for (unsigned l = 0; l <= ell; ++l) rows.push_back(egf[l] * Rational(factorial(l)));
  return rows;
}

nlohmann::ordered_json bernoulli_table_json(const std::vector<Polynomial>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& p : rows) out.push_back(to_json(p));
  return out;
}

std::string bernoulli_table_csv(const std::vector<Polynomial>& rows) {
  std::string out;
  for (const auto& p : rows) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0) out += ',';
      out += to_string(p.coefficients()[k]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace eulerpoly
