#pragma once

#include <string>
#include <utility>
#include <vector>

#include "starpi/algebra.hpp"
#include "starpi/grassmann.hpp"

namespace starpi {

namespace detail {

inline std::vector<std::vector<SparseVec>> matrix_unit_table() {
  // Basis e11, e12, e21, e22 of the 2x2 matrix algebra; e_{ab} e_{cd} =
  // [b==c] e_{ad}.
  auto idx = [](uint32_t a, uint32_t b) { return 2 * a + b; };
  std::vector<std::vector<SparseVec>> table(4, std::vector<SparseVec>(4));
  for (uint32_t a = 0; a < 2; ++a)
    for (uint32_t b = 0; b < 2; ++b)
      for (uint32_t c = 0; c < 2; ++c)
        for (uint32_t d = 0; d < 2; ++d)
          if (b == c) table[idx(a, b)][idx(c, d)] = {{idx(a, d), Rational(1)}};
  return table;
}

}  // namespace detail

// 2x2 matrices with the transpose involution and the trivial grading.
inline FinDimAlgebra m2_transpose() {
  std::vector<SparseVec> invol = {
      {{0, Rational(1)}}, {{2, Rational(1)}}, {{1, Rational(1)}}, {{3, Rational(1)}}};
  return FinDimAlgebra({"e11", "e12", "e21", "e22"}, std::vector<Z4>(4, Z4(0)),
                       detail::matrix_unit_table(), std::move(invol));
}

// 2x2 matrices with the symplectic involution and the trivial grading:
// e11 <-> e22, e12 -> -e12, e21 -> -e21. Its symmetric part is the span of
// the identity matrix.
inline FinDimAlgebra m2_symplectic() {
  std::vector<SparseVec> invol = {
      {{3, Rational(1)}}, {{1, Rational(-1)}}, {{2, Rational(-1)}}, {{0, Rational(1)}}};
  return FinDimAlgebra({"e11", "e12", "e21", "e22"}, std::vector<Z4>(4, Z4(0)),
                       detail::matrix_unit_table(), std::move(invol));
}

// The exterior algebra on n generators as an explicit finite-dimensional
// graded *-algebra: basis index = subset bitmask (so ascending index is colex
// subset order), grade = subset size mod 4, involution = the canonical one.
// Products come from a callback, so no 8^n table is ever stored.
inline FinDimAlgebra grassmann_findim(uint32_t n) {
  if (n > 12) throw std::invalid_argument("exterior algebra truncation too large");
  const uint32_t dim = uint32_t(1) << n;

  std::vector<std::string> names;
  std::vector<Z4> grading;
  std::vector<SparseVec> invol;
  names.reserve(dim);
  grading.reserve(dim);
  invol.reserve(dim);
  for (uint32_t mask = 0; mask < dim; ++mask) {
    names.push_back(subset_name(mask));
    grading.push_back(subset_grade(mask));
    const int k = std::popcount(mask);
    const bool neg = (k * (k - 1) / 2) % 2;
    invol.push_back({{mask, Rational(neg ? -1 : 1)}});
  }

  FinDimAlgebra::ProductFn fn = [](uint32_t s, uint32_t t) -> SparseVec {
    if (s & t) return {};
    return {{s | t, Rational(reorder_sign(s, t))}};
  };

  return FinDimAlgebra(std::move(names), std::move(grading), std::move(fn), std::move(invol));
}

// The named instances used throughout the tests and the command line.
inline std::vector<std::pair<std::string, FinDimAlgebra>> standard_catalog() {
  std::vector<std::pair<std::string, FinDimAlgebra>> out;
  out.emplace_back("m2-transpose", m2_transpose());
  out.emplace_back("m2-symplectic", m2_symplectic());
  out.emplace_back("e2", grassmann_findim(2));
  out.emplace_back("e3", grassmann_findim(3));
  out.emplace_back("m2t-x-e2", direct_product(m2_transpose(), grassmann_findim(2)));
  return out;
}

}  // namespace starpi
