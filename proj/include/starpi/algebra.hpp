#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starpi/linalg.hpp"
#include "starpi/rational.hpp"
#include "starpi/z4.hpp"

namespace starpi {

enum class Sign : int8_t { Plus = 1, Minus = -1 };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline const char* to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

// Sparse coordinates in a fixed basis: (index, nonzero coefficient) pairs
// with strictly ascending indices.
using SparseVec = std::vector<std::pair<uint32_t, Rational>>;

namespace detail {

inline void check_sparse(const SparseVec& v, uint32_t dim, const char* what) {
  uint32_t prev = 0;
  bool first = true;
  for (const auto& [i, c] : v) {
    if (i >= dim) throw std::invalid_argument(std::string(what) + ": index out of range");
    if (!first && i <= prev) throw std::invalid_argument(std::string(what) + ": indices not ascending");
    if (c == 0) throw std::invalid_argument(std::string(what) + ": stored zero coefficient");
    prev = i;
    first = false;
  }
}

}  // namespace detail

// An associative algebra presented by structure constants on a finite basis,
// together with a grade for each basis vector and the involution matrix
// (stored by columns: column j holds the coordinates of the image of basis
// vector j). Products are served either from an explicit table or from a
// callback, so envelope-sized algebras never materialize dim^3 entries.
// Instances are immutable and copies share the underlying data.
class FinDimAlgebra {
 public:
  using ProductFn = std::function<SparseVec(uint32_t, uint32_t)>;

  FinDimAlgebra(std::vector<std::string> basis_names, std::vector<Z4> grading,
                std::vector<std::vector<SparseVec>> table, std::vector<SparseVec> involution_columns)
      : data_(std::make_shared<Data>()) {
    init(std::move(basis_names), std::move(grading), std::move(involution_columns));
    if (table.size() != data_->dim)
      throw std::invalid_argument("product table has wrong dimension");
    for (const auto& row : table) {
      if (row.size() != data_->dim)
        throw std::invalid_argument("product table has wrong dimension");
      for (const auto& cell : row) detail::check_sparse(cell, data_->dim, "product");
    }
    data_->table = std::move(table);
  }

  FinDimAlgebra(std::vector<std::string> basis_names, std::vector<Z4> grading, ProductFn product,
                std::vector<SparseVec> involution_columns)
      : data_(std::make_shared<Data>()) {
    init(std::move(basis_names), std::move(grading), std::move(involution_columns));
    data_->fn = std::move(product);
  }

  uint32_t dim() const { return data_->dim; }
  const std::vector<std::string>& basis_names() const { return data_->names; }
  const std::string& basis_name(uint32_t i) const { return data_->names.at(i); }
  Z4 grading(uint32_t i) const { return data_->grading.at(i); }
  const std::vector<Z4>& grading_vector() const { return data_->grading; }

  SparseVec product(uint32_t i, uint32_t j) const {
    if (i >= dim() || j >= dim()) throw std::out_of_range("basis index out of range");
    if (!data_->table.empty()) return data_->table[i][j];
    return data_->fn(i, j);
  }

  const SparseVec& involution_column(uint32_t j) const { return data_->invol.at(j); }

  // Identity of the underlying presentation, not isomorphism.
  bool same(const FinDimAlgebra& o) const { return data_ == o.data_; }

 private:
  struct Data {
    uint32_t dim = 0;
    std::vector<std::string> names;
    std::vector<Z4> grading;
    std::vector<std::vector<SparseVec>> table;  // empty when fn is used
    ProductFn fn;
    std::vector<SparseVec> invol;
  };

  void init(std::vector<std::string> names, std::vector<Z4> grading, std::vector<SparseVec> invol) {
    Data& d = *data_;
    d.dim = uint32_t(names.size());
    if (d.dim == 0) throw std::invalid_argument("algebra dimension must be positive");
    if (grading.size() != d.dim || invol.size() != d.dim)
      throw std::invalid_argument("basis, grading and involution sizes disagree");
    for (const auto& col : invol) detail::check_sparse(col, d.dim, "involution");
    d.names = std::move(names);
    d.grading = std::move(grading);
    d.invol = std::move(invol);
  }

  std::shared_ptr<Data> data_;
};

// An element of a FinDimAlgebra, as sparse coordinates. Carries its algebra;
// elements of different algebras never combine.
class AlgebraElement {
 public:
  explicit AlgebraElement(FinDimAlgebra algebra) : alg_(std::move(algebra)) {}

  static AlgebraElement basis(FinDimAlgebra algebra, uint32_t i) {
    AlgebraElement e(std::move(algebra));
    if (i >= e.alg_.dim()) throw std::out_of_range("basis index out of range");
    e.coords_[i] = 1;
    return e;
  }

  static AlgebraElement from_coords(FinDimAlgebra algebra, const SparseVec& coords) {
    AlgebraElement e(std::move(algebra));
    detail::check_sparse(coords, e.alg_.dim(), "coords");
    for (const auto& [i, c] : coords) e.coords_[i] = c;
    return e;
  }

  const FinDimAlgebra& algebra() const { return alg_; }
  const std::map<uint32_t, Rational>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  Rational coeff(uint32_t i) const {
    auto it = coords_.find(i);
    return it == coords_.end() ? Rational(0) : it->second;
  }

  RatVec dense() const {
    RatVec v(alg_.dim(), Rational(0));
    for (const auto& [i, c] : coords_) v[i] = c;
    return v;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_same(o);
    for (const auto& [i, c] : o.coords_) add(i, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_same(o);
    for (const auto& [i, c] : o.coords_) add(i, -c);
    return *this;
  }
  AlgebraElement& operator*=(const Rational& c) {
    if (c == 0)
      coords_.clear();
    else
      for (auto& [i, x] : coords_) x *= c;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator-(AlgebraElement a) {
    for (auto& [i, c] : a.coords_) c = -c;
    return a;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.alg_.same(b.alg_) && a.coords_ == b.coords_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  void add(uint32_t i, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = coords_.try_emplace(i, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coords_.erase(it);
    }
  }

 private:
  void check_same(const AlgebraElement& o) const {
    if (!alg_.same(o.alg_)) throw std::invalid_argument("elements of different algebras");
  }

  FinDimAlgebra alg_;
  std::map<uint32_t, Rational> coords_;
};

inline AlgebraElement a_mul(const AlgebraElement& u, const AlgebraElement& v) {
  if (!u.algebra().same(v.algebra())) throw std::invalid_argument("elements of different algebras");
  AlgebraElement out(u.algebra());
  for (const auto& [i, ci] : u.coords())
    for (const auto& [j, cj] : v.coords()) {
      const Rational c = ci * cj;
      for (const auto& [k, sc] : u.algebra().product(i, j)) out.add(k, c * sc);
    }
  return out;
}

inline AlgebraElement a_involute(const AlgebraElement& u) {
  AlgebraElement out(u.algebra());
  for (const auto& [j, cj] : u.coords())
    for (const auto& [i, m] : u.algebra().involution_column(j)) out.add(i, cj * m);
  return out;
}

// Structural check of the presentation: associativity, graded products, an
// involution of order two that preserves grades and reverses products.
// Returns the first violation found, in that fixed order of checks, or
// nullopt for a valid graded *-algebra. Runs dim^3 products; meant for the
// explicit catalog and file loading, not for envelope-sized instances.
inline std::optional<std::string> validate(const FinDimAlgebra& A) {
  const uint32_t n = A.dim();
  std::ostringstream os;

  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      for (uint32_t k = 0; k < n; ++k) {
        AlgebraElement left(A), right(A);
        for (const auto& [p, c] : A.product(i, j))
          for (const auto& [q, d] : A.product(p, k)) left.add(q, c * d);
        for (const auto& [p, c] : A.product(j, k))
          for (const auto& [q, d] : A.product(i, p)) right.add(q, c * d);
        if (!(left == right)) {
          os << "associativity fails at (" << i << "," << j << "," << k << ")";
          return os.str();
        }
      }

  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      const Z4 expect = A.grading(i) + A.grading(j);
      for (const auto& [k, c] : A.product(i, j))
        if (!(A.grading(k) == expect)) {
          os << "grading violated at (" << i << "," << j << "," << k << ")";
          return os.str();
        }
    }

  for (uint32_t j = 0; j < n; ++j) {
    AlgebraElement twice = a_involute(a_involute(AlgebraElement::basis(A, j)));
    if (!(twice == AlgebraElement::basis(A, j))) {
      os << "involution order: M^2 != I at column " << j;
      return os.str();
    }
  }

  for (uint32_t j = 0; j < n; ++j)
    for (const auto& [i, c] : A.involution_column(j))
      if (!(A.grading(i) == A.grading(j))) {
        os << "involution not grade-preserving at (" << i << "," << j << ")";
        return os.str();
      }

  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      AlgebraElement lhs(A);
      for (const auto& [k, c] : A.product(i, j))
        for (const auto& [q, m] : A.involution_column(k)) lhs.add(q, c * m);
      const AlgebraElement rhs = a_mul(a_involute(AlgebraElement::basis(A, j)),
                                       a_involute(AlgebraElement::basis(A, i)));
      if (!(lhs == rhs)) {
        os << "involution is not an anti-automorphism at (" << i << "," << j << ")";
        return os.str();
      }
    }

  return std::nullopt;
}

// Basis of the delta-eigenspace of the involution inside the grade-theta
// coordinate subspace: reduced echelon vectors from the projections
// (e_i + delta*e_i^*)/2 of the grade-theta basis vectors, ordered by pivot.
inline std::vector<AlgebraElement> homogeneous_basis(const FinDimAlgebra& A, Z4 theta, Sign delta) {
  RowSpace space(A.dim());
  for (uint32_t i = 0; i < A.dim(); ++i) {
    if (!(A.grading(i) == theta)) continue;
    AlgebraElement v = AlgebraElement::basis(A, i);
    AlgebraElement w = a_involute(v);
    AlgebraElement proj = (delta == Sign::Plus) ? v + w : v - w;
    proj *= Rational(1, 2);
    if (!proj.is_zero()) space.insert(proj.dense());
  }

  std::vector<AlgebraElement> out;
  for (const auto& row : space.rows()) {
    AlgebraElement e(A);
    for (uint32_t i = 0; i < A.dim(); ++i)
      if (row[i] != 0) e.add(i, row[i]);
    out.push_back(std::move(e));
  }
  return out;
}

// All symmetric (delta = +) or skew (delta = -) basis elements, grouped by
// grade in ascending order.
inline std::vector<AlgebraElement> sym_skew_basis(const FinDimAlgebra& A, Sign delta) {
  std::vector<AlgebraElement> out;
  for (Z4 theta : all_z4()) {
    auto part = homogeneous_basis(A, theta, delta);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Direct product with componentwise product, grading and involution. Basis
// order: all of A, then all of B.
inline FinDimAlgebra direct_product(const FinDimAlgebra& A, const FinDimAlgebra& B) {
  const uint32_t da = A.dim(), db = B.dim();

  std::vector<std::string> names = A.basis_names();
  names.insert(names.end(), B.basis_names().begin(), B.basis_names().end());

  std::vector<Z4> grading = A.grading_vector();
  grading.insert(grading.end(), B.grading_vector().begin(), B.grading_vector().end());

  std::vector<SparseVec> invol;
  invol.reserve(da + db);
  for (uint32_t j = 0; j < da; ++j) invol.push_back(A.involution_column(j));
  for (uint32_t j = 0; j < db; ++j) {
    SparseVec col = B.involution_column(j);
    for (auto& [i, c] : col) i += da;
    invol.push_back(std::move(col));
  }

  FinDimAlgebra::ProductFn fn = [A, B, da](uint32_t i, uint32_t j) -> SparseVec {
    if (i < da && j < da) return A.product(i, j);
    if (i >= da && j >= da) {
      SparseVec v = B.product(i - da, j - da);
      for (auto& [k, c] : v) k += da;
      return v;
    }
    return {};
  };

  return FinDimAlgebra(std::move(names), std::move(grading), std::move(fn), std::move(invol));
}

inline std::string to_string(const AlgebraElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : e.coords()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (mag != 1) os << rational_to_string(mag) << '*';
    os << e.algebra().basis_name(i);
    first = false;
  }
  return os.str();
}

}  // namespace starpi
