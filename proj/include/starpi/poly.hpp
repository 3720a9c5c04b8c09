#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starpi/rational.hpp"
#include "starpi/z4.hpp"

namespace starpi {

// y-variables are fixed by the involution, z-variables change sign under it.
enum class VarKind : uint8_t { Sym, Skew };

// A variable of the free *-algebra, identified by (kind, index, grade).
// The grade is optional; graded and ungraded variables never meet inside one
// polynomial. Indices are positive and unbounded: the variable supply is
// countable, nothing ever depends on a fixed rank.
class Variable {
 public:
  static Variable sym(uint32_t index) { return Variable(VarKind::Sym, index, kNoGrade); }
  static Variable skew(uint32_t index) { return Variable(VarKind::Skew, index, kNoGrade); }
  static Variable sym(uint32_t index, Z4 grade) {
    return Variable(VarKind::Sym, index, static_cast<uint8_t>(grade.value()));
  }
  static Variable skew(uint32_t index, Z4 grade) {
    return Variable(VarKind::Skew, index, static_cast<uint8_t>(grade.value()));
  }
  static Variable make(VarKind kind, uint32_t index, std::optional<Z4> grade) {
    return Variable(kind, index, grade ? static_cast<uint8_t>(grade->value()) : kNoGrade);
  }

  VarKind kind() const { return static_cast<VarKind>(kind_); }
  uint32_t index() const { return index_; }
  bool graded() const { return grade_ != kNoGrade; }
  Z4 grade() const {
    if (!graded()) throw std::logic_error("ungraded variable has no grade");
    return Z4(grade_);
  }
  std::optional<Z4> grade_opt() const {
    return graded() ? std::optional<Z4>(Z4(grade_)) : std::nullopt;
  }

  Variable with_index(uint32_t index) const { return Variable(kind(), index, grade_); }
  Variable with_kind(VarKind kind) const { return Variable(kind, index_, grade_); }
  Variable with_grade(Z4 grade) const {
    return Variable(kind(), index_, static_cast<uint8_t>(grade.value()));
  }

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.index_ == b.index_ && a.kind_ == b.kind_ && a.grade_ == b.grade_;
  }
  friend bool operator!=(const Variable& a, const Variable& b) { return !(a == b); }

  // Canonical order: ungraded before graded, then grade 0 < 1 < 2 < 3, then
  // Sym before Skew, then index. Monomial comparison and every deterministic
  // enumeration in the library derive from this order.
  friend bool operator<(const Variable& a, const Variable& b) {
    int ga = a.grade_key(), gb = b.grade_key();
    if (ga != gb) return ga < gb;
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.index_ < b.index_;
  }

 private:
  static constexpr uint8_t kNoGrade = 0xff;

  Variable(VarKind kind, uint32_t index, uint8_t grade)
      : index_(index), kind_(static_cast<uint8_t>(kind)), grade_(grade) {
    if (index == 0) throw std::invalid_argument("variable index must be positive");
  }

  int grade_key() const { return grade_ == kNoGrade ? -1 : int(grade_); }

  uint32_t index_;
  uint8_t kind_;
  uint8_t grade_;
};

inline std::string to_string(const Variable& v) {
  std::ostringstream os;
  os << (v.kind() == VarKind::Sym ? 'y' : 'z') << v.index();
  if (v.graded()) os << '@' << v.grade().value();
  return os.str();
}

// A nonempty word in the free variables. Words form the multiplicative basis;
// there is no empty word because the algebra has no unit.
class Monomial {
 public:
  explicit Monomial(std::vector<Variable> word) : word_(std::move(word)) {
    if (word_.empty()) throw std::invalid_argument("empty word: the free algebra has no unit");
    for (const auto& v : word_)
      if (v.graded() != word_.front().graded())
        throw std::invalid_argument("graded and ungraded variables mixed in one word");
  }
  Monomial(std::initializer_list<Variable> vars) : Monomial(std::vector<Variable>(vars)) {}

  const std::vector<Variable>& word() const { return word_; }
  size_t degree() const { return word_.size(); }
  bool graded() const { return word_.front().graded(); }

  // No letter repeats.
  bool multilinear() const {
    std::vector<Variable> s(word_);
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<Variable> w(a.word_);
    w.insert(w.end(), b.word_.begin(), b.word_.end());
    return Monomial(std::move(w));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.word_ == b.word_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  // Degree first, then left-to-right by the variable order.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
    return std::lexicographical_compare(a.word_.begin(), a.word_.end(), b.word_.begin(),
                                        b.word_.end());
  }

 private:
  std::vector<Variable> word_;
};

// Sum of the letter grades. Defined only for fully graded words.
inline Z4 grade_of_monomial(const Monomial& m) {
  if (!m.graded()) throw std::invalid_argument("grade of an ungraded word is undefined");
  Z4 g(0);
  for (const auto& v : m.word()) g = g + v.grade();
  return g;
}

// A finite rational combination of words, kept in canonical form: monomials
// ascend in the monomial order and zero coefficients are never stored. All
// words of one polynomial are uniformly graded or uniformly ungraded.
class StarPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  StarPolynomial() = default;

  static StarPolynomial term(Monomial m, Rational c) {
    StarPolynomial p;
    p.add(std::move(m), std::move(c));
    return p;
  }
  static StarPolynomial var(Variable v) { return term(Monomial({v}), 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // Empty for the zero polynomial.
  std::optional<bool> gradedness() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.graded();
  }

  std::set<Variable> variables() const {
    std::set<Variable> out;
    for (const auto& [m, c] : terms_)
      for (const auto& v : m.word()) out.insert(v);
    return out;
  }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  StarPolynomial& operator+=(const StarPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  StarPolynomial& operator-=(const StarPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  StarPolynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
  }

  friend StarPolynomial operator+(StarPolynomial a, const StarPolynomial& b) { return a += b; }
  friend StarPolynomial operator-(StarPolynomial a, const StarPolynomial& b) { return a -= b; }
  friend StarPolynomial operator-(StarPolynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend StarPolynomial operator*(StarPolynomial a, const Rational& c) { return a *= c; }
  friend StarPolynomial operator*(const Rational& c, StarPolynomial a) { return a *= c; }

  friend StarPolynomial operator*(const StarPolynomial& a, const StarPolynomial& b) {
    StarPolynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
    return out;
  }

  friend bool operator==(const StarPolynomial& a, const StarPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const StarPolynomial& a, const StarPolynomial& b) { return !(a == b); }
  friend bool operator<(const StarPolynomial& a, const StarPolynomial& b) {
    return a.terms_ < b.terms_;
  }

 private:
  void add(Monomial m, Rational c) {
    if (c == 0) return;
    if (!terms_.empty() && terms_.begin()->first.graded() != m.graded())
      throw std::invalid_argument("graded and ungraded variables mixed in one polynomial");
    auto [it, fresh] = terms_.try_emplace(std::move(m), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

// The involution of the free *-algebra: reverse every word and flip the sign
// once per skew letter. Grades are untouched, so it is grade-preserving, and
// it is an anti-automorphism of order two.
inline StarPolynomial involute(const StarPolynomial& p) {
  StarPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Variable> w(m.word().rbegin(), m.word().rend());
    size_t skew = 0;
    for (const auto& v : w)
      if (v.kind() == VarKind::Skew) ++skew;
    out += StarPolynomial::term(Monomial(std::move(w)), (skew % 2) ? -c : c);
  }
  return out;
}

struct InhomogeneousError : std::invalid_argument {
  InhomogeneousError() : std::invalid_argument("polynomial is not multihomogeneous") {}
};

// Occurrence counts per variable.
struct Multidegree {
  std::map<Variable, unsigned> counts;

  bool multilinear() const {
    for (const auto& [v, n] : counts)
      if (n != 1) return false;
    return true;
  }
  unsigned total() const {
    unsigned t = 0;
    for (const auto& [v, n] : counts) t += n;
    return t;
  }
  std::vector<Variable> variables() const {
    std::vector<Variable> out;
    out.reserve(counts.size());
    for (const auto& [v, n] : counts) out.push_back(v);
    return out;
  }

  friend bool operator==(const Multidegree& a, const Multidegree& b) {
    return a.counts == b.counts;
  }
  friend bool operator<(const Multidegree& a, const Multidegree& b) {
    return a.counts < b.counts;
  }
};

inline Multidegree multidegree_of_monomial(const Monomial& m) {
  Multidegree d;
  for (const auto& v : m.word()) ++d.counts[v];
  return d;
}

inline bool is_multihomogeneous(const StarPolynomial& p) {
  if (p.is_zero()) return true;
  auto it = p.terms().begin();
  const Multidegree first = multidegree_of_monomial(it->first);
  for (++it; it != p.terms().end(); ++it)
    if (multidegree_of_monomial(it->first) != first) return false;
  return true;
}

// The common multidegree of all terms; empty for the zero polynomial.
inline Multidegree multidegree(const StarPolynomial& p) {
  Multidegree d;
  bool have = false;
  for (const auto& [m, c] : p.terms()) {
    Multidegree dm = multidegree_of_monomial(m);
    if (!have) {
      d = std::move(dm);
      have = true;
    } else if (dm != d) {
      throw InhomogeneousError();
    }
  }
  return d;
}

// Every monomial multilinear; different monomials may use different variables.
inline bool termwise_multilinear(const StarPolynomial& p) {
  for (const auto& [m, c] : p.terms())
    if (!m.multilinear()) return false;
  return true;
}

// Split into multihomogeneous pieces, ordered by multidegree. The pieces sum
// back to the input.
inline std::vector<StarPolynomial> multihomogeneous_components(const StarPolynomial& p) {
  std::map<Multidegree, StarPolynomial> groups;
  for (const auto& [m, c] : p.terms())
    groups[multidegree_of_monomial(m)] += StarPolynomial::term(m, c);
  std::vector<StarPolynomial> out;
  out.reserve(groups.size());
  for (auto& [d, q] : groups) out.push_back(std::move(q));
  return out;
}

// Fresh copies produced by full_linearization: occurrence j of the variable
// with index i becomes index i*kFreshIndexBase + j. Inputs must keep their
// indices below the base so copies can never collide with originals.
constexpr uint32_t kFreshIndexBase = 1'000'000;

// Full polarization of a multihomogeneous polynomial: each degree-d variable
// splits into d fresh copies (same kind and grade) and every monomial is
// summed over all ways to match its occurrences with the copies. The result
// is multilinear. Renaming all copies of index i*kFreshIndexBase + j back to
// index i recovers the input scaled by the product of the factorials of the
// degrees.
inline StarPolynomial full_linearization(const StarPolynomial& p) {
  const Multidegree deg = multidegree(p);
  for (const auto& [v, n] : deg.counts)
    if (v.index() >= kFreshIndexBase)
      throw std::invalid_argument("variable index collides with the fresh-copy scheme");

  StarPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::map<Variable, std::vector<size_t>> positions;
    for (size_t k = 0; k < m.word().size(); ++k) positions[m.word()[k]].push_back(k);

    // Odometer over one permutation of copies per variable.
    std::vector<std::pair<Variable, std::vector<uint32_t>>> wheels;
    wheels.reserve(positions.size());
    for (const auto& [v, ps] : positions) {
      std::vector<uint32_t> copies(ps.size());
      for (size_t j = 0; j < copies.size(); ++j) copies[j] = uint32_t(j + 1);
      wheels.emplace_back(v, std::move(copies));
    }

    while (true) {
      std::vector<Variable> w(m.word());
      for (const auto& [v, copies] : wheels) {
        const auto& ps = positions[v];
        for (size_t t = 0; t < ps.size(); ++t)
          w[ps[t]] = v.with_index(v.index() * kFreshIndexBase + copies[t]);
      }
      out += StarPolynomial::term(Monomial(std::move(w)), c);

      size_t k = 0;
      while (k < wheels.size() &&
             !std::next_permutation(wheels[k].second.begin(), wheels[k].second.end()))
        ++k;
      if (k == wheels.size()) break;
    }
  }
  return out;
}

// Replace each letter by its image; unmapped letters stay. Images multiply in
// the order the letters appear, so this is the algebra substitution.
inline StarPolynomial substitute(const StarPolynomial& p,
                                 const std::map<Variable, StarPolynomial>& images) {
  StarPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    StarPolynomial acc;
    bool first = true;
    for (const auto& v : m.word()) {
      auto it = images.find(v);
      StarPolynomial factor = (it != images.end()) ? it->second : StarPolynomial::var(v);
      acc = first ? std::move(factor) : acc * factor;
      first = false;
    }
    out += acc * c;
  }
  return out;
}

// Letterwise renaming. The map is applied simultaneously, so swaps need no
// intermediate names; merging distinct variables is allowed.
inline StarPolynomial rename(const StarPolynomial& p, const std::map<Variable, Variable>& images) {
  StarPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Variable> w(m.word());
    for (auto& v : w) {
      auto it = images.find(v);
      if (it != images.end()) v = it->second;
    }
    out += StarPolynomial::term(Monomial(std::move(w)), c);
  }
  return out;
}

inline std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : m.word()) {
    if (!first) os << '*';
    os << to_string(v);
    first = false;
  }
  return os.str();
}

// Canonical rendering, parseable back by the expression parser. Terms appear
// in the monomial order; unit coefficients are dropped.
inline std::string to_string(const StarPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (mag != 1) os << rational_to_string(mag) << '*';
    os << to_string(m);
    first = false;
  }
  return os.str();
}

}  // namespace starpi
