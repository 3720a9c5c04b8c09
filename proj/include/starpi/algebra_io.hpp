#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "starpi/algebra.hpp"

namespace starpi {

// File schema: {"dim": n, "basis": [names], "sc": [[[coeff]]] with
// sc[i][j][k] the coefficient of basis k in the product of basis i and basis
// j, "grading": [0..3 per basis vector], "involution": row-major matrix M
// with column j the coordinates of the image of basis vector j}. Every
// coefficient is a string "p/q" or "n"; the format is exact, nothing is ever
// rounded.

inline nlohmann::json algebra_to_json(const FinDimAlgebra& A) {
  const uint32_t n = A.dim();
  nlohmann::json j;
  j["dim"] = n;
  j["basis"] = A.basis_names();

  nlohmann::json grading = nlohmann::json::array();
  for (uint32_t i = 0; i < n; ++i) grading.push_back(A.grading(i).value());
  j["grading"] = std::move(grading);

  nlohmann::json sc = nlohmann::json::array();
  for (uint32_t i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (uint32_t jj = 0; jj < n; ++jj) {
      std::vector<std::string> cell(n, "0");
      for (const auto& [k, c] : A.product(i, jj)) cell[k] = rational_to_string(c);
      row.push_back(cell);
    }
    sc.push_back(std::move(row));
  }
  j["sc"] = std::move(sc);

  nlohmann::json invol = nlohmann::json::array();
  std::vector<std::vector<std::string>> m(n, std::vector<std::string>(n, "0"));
  for (uint32_t col = 0; col < n; ++col)
    for (const auto& [rowi, c] : A.involution_column(col)) m[rowi][col] = rational_to_string(c);
  for (uint32_t rowi = 0; rowi < n; ++rowi) invol.push_back(m[rowi]);
  j["involution"] = std::move(invol);

  return j;
}

inline FinDimAlgebra algebra_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& msg) -> void { throw std::runtime_error("algebra file: " + msg); };

  if (!j.is_object()) fail("top level must be an object");
  for (const char* key : {"dim", "basis", "sc", "grading", "involution"})
    if (!j.contains(key)) fail(std::string("missing field '") + key + "'");

  if (!j["dim"].is_number_unsigned()) fail("'dim' must be a non-negative integer");
  const uint32_t n = j["dim"].get<uint32_t>();
  if (n == 0) fail("'dim' must be positive");

  if (!j["basis"].is_array() || j["basis"].size() != n) fail("'basis' must list dim names");
  std::vector<std::string> names;
  for (const auto& e : j["basis"]) {
    if (!e.is_string()) fail("basis names must be strings");
    names.push_back(e.get<std::string>());
  }

  if (!j["grading"].is_array() || j["grading"].size() != n) fail("'grading' must list dim grades");
  std::vector<Z4> grading;
  for (const auto& e : j["grading"]) {
    if (!e.is_number_unsigned() || e.get<uint64_t>() > 3) fail("grades must be integers 0..3");
    grading.push_back(Z4(e.get<unsigned>()));
  }

  auto parse_coeff = [&](const nlohmann::json& e, const char* where) -> Rational {
    if (!e.is_string()) fail(std::string(where) + ": coefficients must be strings like \"p/q\"");
    try {
      return rational_from_string(e.get<std::string>());
    } catch (const std::invalid_argument& ex) {
      fail(std::string(where) + ": " + ex.what());
    }
    return 0;  // unreachable
  };

  if (!j["sc"].is_array() || j["sc"].size() != n) fail("'sc' must be a dim x dim x dim array");
  std::vector<std::vector<SparseVec>> table(n, std::vector<SparseVec>(n));
  for (uint32_t i = 0; i < n; ++i) {
    if (!j["sc"][i].is_array() || j["sc"][i].size() != n) fail("'sc' must be a dim x dim x dim array");
    for (uint32_t jj = 0; jj < n; ++jj) {
      const auto& cell = j["sc"][i][jj];
      if (!cell.is_array() || cell.size() != n) fail("'sc' must be a dim x dim x dim array");
      for (uint32_t k = 0; k < n; ++k) {
        Rational c = parse_coeff(cell[k], "sc");
        if (c != 0) table[i][jj].emplace_back(k, std::move(c));
      }
    }
  }

  if (!j["involution"].is_array() || j["involution"].size() != n)
    fail("'involution' must be a dim x dim matrix");
  std::vector<SparseVec> invol(n);
  for (uint32_t rowi = 0; rowi < n; ++rowi) {
    const auto& row = j["involution"][rowi];
    if (!row.is_array() || row.size() != n) fail("'involution' must be a dim x dim matrix");
    for (uint32_t col = 0; col < n; ++col) {
      Rational c = parse_coeff(row[col], "involution");
      if (c != 0) invol[col].emplace_back(rowi, std::move(c));
    }
  }

  FinDimAlgebra A(std::move(names), std::move(grading), std::move(table), std::move(invol));
  if (auto violation = validate(A)) fail("invalid algebra: " + *violation);
  return A;
}

inline FinDimAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("algebra file: " + std::string(e.what()));
  }
  return algebra_from_json(j);
}

inline void save_algebra_file(const FinDimAlgebra& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << algebra_to_json(A).dump() << '\n';
}

}  // namespace starpi
