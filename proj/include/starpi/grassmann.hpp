#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "starpi/rational.hpp"
#include "starpi/z4.hpp"

namespace starpi {

// Subsets of {1..n} are bitmasks: generator i sits at bit i-1, so ascending
// bitmask order is colexicographic subset order.

inline Z4 subset_grade(uint32_t mask) { return Z4(unsigned(std::popcount(mask)) & 3u); }

// Parity sign of merging two disjoint sorted blocks: counts the pairs s in S,
// t in T with s > t, i.e. the adjacent transpositions needed to sort the
// concatenation S|T.
inline int reorder_sign(uint32_t s_mask, uint32_t t_mask) {
  int inv = 0;
  uint32_t t = t_mask;
  while (t) {
    const int bit = std::countr_zero(t);
    inv += std::popcount(s_mask >> (bit + 1));
    t &= t - 1;
  }
  return (inv % 2) ? -1 : 1;
}

// Element of the exterior algebra on n anticommuting generators, with the
// empty product as unit. The truncation n is part of the value and mixed
// truncations never combine.
class GrassmannElement {
 public:
  explicit GrassmannElement(uint32_t n_generators) : n_(n_generators) {
    if (n_generators > 30) throw std::invalid_argument("truncation too large");
  }

  static GrassmannElement unit(uint32_t n) { return basis(n, 0); }

  static GrassmannElement basis(uint32_t n, uint32_t mask, Rational c = 1) {
    GrassmannElement g(n);
    g.add(mask, std::move(c));
    return g;
  }

  uint32_t n_generators() const { return n_; }
  const std::map<uint32_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  GrassmannElement& operator+=(const GrassmannElement& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  GrassmannElement& operator-=(const GrassmannElement& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  GrassmannElement& operator*=(const Rational& c) {
    if (c == 0)
      terms_.clear();
    else
      for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
  }

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(GrassmannElement a, const Rational& c) { return a *= c; }
  friend GrassmannElement operator*(const Rational& c, GrassmannElement a) { return a *= c; }

  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GrassmannElement& a, const GrassmannElement& b) { return !(a == b); }

 private:
  void check_same(const GrassmannElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("mixed Grassmann truncations");
  }
  void add(uint32_t mask, Rational c) {
    if (mask >= (uint32_t(1) << n_)) throw std::invalid_argument("subset outside the truncation");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(mask, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  uint32_t n_;
  std::map<uint32_t, Rational> terms_;
};

// e_S e_T = 0 when the subsets meet, otherwise the merge sign times e_{S|T}.
inline GrassmannElement g_mul(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.n_generators() != b.n_generators())
    throw std::invalid_argument("mixed Grassmann truncations");
  GrassmannElement out(a.n_generators());
  for (const auto& [s, cs] : a.terms()) {
    for (const auto& [t, ct] : b.terms()) {
      if (s & t) continue;
      out += GrassmannElement::basis(a.n_generators(), s | t, cs * ct * reorder_sign(s, t));
    }
  }
  return out;
}

// The canonical involution fixes the generators and reverses products, so
// e_S picks up the sign of reversing |S| letters: (-1)^{|S|(|S|-1)/2}.
inline GrassmannElement g_involute(const GrassmannElement& a) {
  GrassmannElement out(a.n_generators());
  for (const auto& [s, c] : a.terms()) {
    const int k = std::popcount(s);
    const bool flip = (k * (k - 1) / 2) % 2;
    out += GrassmannElement::basis(a.n_generators(), s, flip ? -c : c);
  }
  return out;
}

// Projection onto the span of the subsets of size congruent to the grade.
inline GrassmannElement g_grade_component(const GrassmannElement& a, Z4 grade) {
  GrassmannElement out(a.n_generators());
  for (const auto& [s, c] : a.terms())
    if (subset_grade(s) == grade) out += GrassmannElement::basis(a.n_generators(), s, c);
  return out;
}

inline std::string subset_name(uint32_t mask) {
  std::ostringstream os;
  os << "e{";
  bool first = true;
  while (mask) {
    const int bit = std::countr_zero(mask);
    if (!first) os << ',';
    os << (bit + 1);
    first = false;
    mask &= mask - 1;
  }
  os << '}';
  return os.str();
}

inline std::string to_string(const GrassmannElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : a.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (mag != 1) os << rational_to_string(mag) << '*';
    os << subset_name(s);
    first = false;
  }
  return os.str();
}

}  // namespace starpi
