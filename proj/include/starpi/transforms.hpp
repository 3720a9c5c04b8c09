#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "starpi/poly.hpp"
#include "starpi/z4.hpp"

namespace starpi {

namespace detail {

// Parity of a permutation given as an index vector.
inline int permutation_sign(const std::vector<uint32_t>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[j] < perm[i]) ++inv;
  return (inv % 2) ? -1 : 1;
}

inline void require_multilinear_graded(const StarPolynomial& f, const char* op) {
  for (const auto& [m, c] : f.terms()) {
    if (!m.graded())
      throw std::invalid_argument(std::string(op) + " requires graded variables");
    if (!m.multilinear())
      throw std::invalid_argument(std::string(op) + " requires multilinear input");
  }
}

}  // namespace detail

// The fixed order on odd variables (grades 1 and 3): grade-1 symmetric by
// index, then grade-1 skew, then grade-3 symmetric, then grade-3 skew. The
// signs produced by s_op are relative to this order, which is not
// configurable. It coincides with the canonical variable order restricted to
// odd variables.
inline bool odd_order_less(const Variable& a, const Variable& b) {
  if (a.grade().value() != b.grade().value()) return a.grade().value() < b.grade().value();
  if (a.kind() != b.kind()) return a.kind() == VarKind::Sym;
  return a.index() < b.index();
}

// Sign transform: each monomial picks up the sign of the permutation that
// sorts its odd-variable subword (read left to right) into the fixed odd
// order. Monomials without odd variables are untouched. Input must be
// multilinear in every term and fully graded. Involutive.
inline StarPolynomial s_op(const StarPolynomial& f) {
  detail::require_multilinear_graded(f, "s_op");
  StarPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Variable> odd;
    for (const auto& v : m.word())
      if (is_odd(v.grade())) odd.push_back(v);
    int inv = 0;
    for (size_t i = 0; i < odd.size(); ++i)
      for (size_t j = i + 1; j < odd.size(); ++j)
        if (odd_order_less(odd[j], odd[i])) ++inv;
    out += StarPolynomial::term(m, (inv % 2) ? -c : c);
  }
  return out;
}

// Kind swap on the upper grades: y <-> z at grades 2 and 3, same index;
// grades 0 and 1 are untouched. Coefficients never change. Involutive.
inline StarPolynomial t_op(const StarPolynomial& f) {
  detail::require_multilinear_graded(f, "t_op");
  StarPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Variable> w(m.word());
    for (auto& v : w)
      if (v.grade().value() >= 2)
        v = v.with_kind(v.kind() == VarKind::Sym ? VarKind::Skew : VarKind::Sym);
    out += StarPolynomial::term(Monomial(std::move(w)), c);
  }
  return out;
}

// The composite transform: kind swap first, then the sign transform. Its
// square is plus or minus the identity on each multihomogeneous component,
// and its fourth power is the identity.
inline StarPolynomial tilde(const StarPolynomial& f) { return s_op(t_op(f)); }

// A finite set of variables sharing kind, gradedness and (when graded) grade.
// Alternators and symmetrizers act on such sets.
class VariableSet {
 public:
  explicit VariableSet(std::vector<Variable> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw std::invalid_argument("variable set has a repeated member");
    for (const auto& v : members_) {
      const Variable& first = members_.front();
      if (v.kind() != first.kind() || v.graded() != first.graded() ||
          (v.graded() && !(v.grade() == first.grade())))
        throw std::invalid_argument("variable set members must share kind and grade");
    }
  }
  VariableSet(std::initializer_list<Variable> vars) : VariableSet(std::vector<Variable>(vars)) {}

  const std::vector<Variable>& members() const { return members_; }
  size_t size() const { return members_.size(); }

 private:
  std::vector<Variable> members_;
};

namespace detail {

inline void require_linear_in_set(const StarPolynomial& f, const VariableSet& s, const char* op) {
  for (const auto& [m, c] : f.terms())
    for (const auto& v : s.members()) {
      size_t n = 0;
      for (const auto& w : m.word())
        if (w == v) ++n;
      if (n != 1)
        throw std::invalid_argument(std::string(op) +
                                    ": every monomial must contain each set member exactly once");
    }
}

template <bool Signed>
StarPolynomial set_average(const VariableSet& s, const StarPolynomial& f) {
  if (s.size() <= 1) return f;
  std::vector<uint32_t> idx(s.size());
  std::iota(idx.begin(), idx.end(), 0u);
  StarPolynomial out;
  do {
    std::map<Variable, Variable> images;
    for (size_t t = 0; t < idx.size(); ++t)
      images.insert_or_assign(s.members()[t], s.members()[idx[t]]);
    StarPolynomial summand = rename(f, images);
    if constexpr (Signed) summand *= Rational(permutation_sign(idx));
    out += summand;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace detail

// Sum over all permutations of the set with the permutation sign. Each
// monomial of f must contain each member exactly once; other variables are
// free to repeat. Applying it twice scales by |set|!.
inline StarPolynomial alternator(const VariableSet& s, const StarPolynomial& f) {
  detail::require_linear_in_set(f, s, "alternator");
  return detail::set_average<true>(s, f);
}

// Same sum without signs.
inline StarPolynomial symmetrizer(const VariableSet& s, const StarPolynomial& f) {
  detail::require_linear_in_set(f, s, "symmetrizer");
  return detail::set_average<false>(s, f);
}

// A kind- and grade-preserving permutation of finitely many variables.
// Variables outside the support are implicitly fixed.
class PairPermutation {
 public:
  explicit PairPermutation(std::map<Variable, Variable> images) : images_(std::move(images)) {
    std::set<Variable> range;
    for (const auto& [from, to] : images_) {
      if (from.kind() != to.kind() || from.graded() != to.graded() ||
          (from.graded() && !(from.grade() == to.grade())))
        throw std::invalid_argument("permutation must preserve kind and grade");
      if (!range.insert(to).second)
        throw std::invalid_argument("permutation images must be distinct");
    }
    for (const auto& v : range)
      if (!images_.count(v))
        throw std::invalid_argument("permutation domain and image must coincide");
  }

  static PairPermutation transposition(const Variable& a, const Variable& b) {
    return PairPermutation({{a, b}, {b, a}});
  }

  const std::map<Variable, Variable>& images() const { return images_; }

  friend PairPermutation compose(const PairPermutation& p, const PairPermutation& q) {
    // apply q first, then p
    std::map<Variable, Variable> images;
    for (const auto& [from, mid] : q.images()) {
      auto it = p.images().find(mid);
      images.insert_or_assign(from, (it != p.images().end()) ? it->second : mid);
    }
    for (const auto& [from, to] : p.images())
      if (!images.count(from)) images.insert_or_assign(from, to);
    return PairPermutation(std::move(images));
  }

 private:
  std::map<Variable, Variable> images_;
};

// Act on a multilinear polynomial by renaming. A group action: composing
// permutations composes the actions.
inline StarPolynomial pair_action(const PairPermutation& p, const StarPolynomial& f) {
  for (const auto& [m, c] : f.terms())
    if (!m.multilinear())
      throw std::invalid_argument("pair_action requires multilinear input");
  return rename(f, p.images());
}

// All ways to grade the variables of a multilinear ungraded polynomial, one
// output per grade tuple. Variables are taken in canonical order; tuples run
// lexicographically with the first variable most significant, so the list
// has exactly 4^n entries.
inline std::vector<StarPolynomial> grade_expansions(const StarPolynomial& f) {
  const Multidegree deg = multidegree(f);
  if (!deg.multilinear()) throw std::invalid_argument("grade_expansions requires multilinear input");
  const std::vector<Variable> vars = deg.variables();
  for (const auto& v : vars)
    if (v.graded()) throw std::invalid_argument("grade_expansions requires ungraded input");
  if (vars.size() > 8) throw std::invalid_argument("grade expansion of more than 8 variables");

  const size_t n = vars.size();
  std::vector<StarPolynomial> out;
  out.reserve(size_t(1) << (2 * n));
  for (size_t tuple = 0; tuple < (size_t(1) << (2 * n)); ++tuple) {
    std::map<Variable, Variable> images;
    for (size_t i = 0; i < n; ++i) {
      const unsigned g = unsigned(tuple >> (2 * (n - 1 - i))) & 3u;
      images.insert_or_assign(vars[i], vars[i].with_grade(Z4(g)));
    }
    out.push_back(rename(f, images));
  }
  return out;
}

}  // namespace starpi
