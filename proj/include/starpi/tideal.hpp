#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "starpi/linalg.hpp"
#include "starpi/poly.hpp"

namespace starpi {

// Indices renumbered 1,2,... inside each (kind, grade) class, by ascending
// old index. Two generators that differ only by variable names collapse to
// the same canonical form.
inline StarPolynomial canonical_relabel(const StarPolynomial& p) {
  std::map<Variable, Variable> images;
  std::map<std::pair<int, VarKind>, uint32_t> next;
  for (const auto& v : p.variables()) {
    const int gkey = v.graded() ? int(v.grade().value()) : -1;
    uint32_t& n = next[{gkey, v.kind()}];
    images.insert_or_assign(v, v.with_index(++n));
  }
  return rename(p, images);
}

// Scale so the leading (smallest) monomial has coefficient 1.
inline StarPolynomial normalize_leading(const StarPolynomial& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.terms().begin()->second);
}

// Normal form of a generating set: multihomogeneous components, full
// linearization of the non-multilinear ones, the involute of each, all
// relabeled canonically, deduplicated and sorted. Closing under the
// involution here is what lets membership work with substitutions of the
// form u + u* and u - u* only.
inline std::vector<StarPolynomial> prepare_generators(const std::vector<StarPolynomial>& gens) {
  std::set<StarPolynomial> seen;
  for (const auto& g : gens) {
    for (const auto& comp : multihomogeneous_components(g)) {
      const StarPolynomial lin =
          multidegree(comp).multilinear() ? comp : full_linearization(comp);
      for (const StarPolynomial& q : {lin, involute(lin)}) {
        const StarPolynomial canon = normalize_leading(canonical_relabel(q));
        if (!canon.is_zero()) seen.insert(canon);
      }
    }
  }
  return std::vector<StarPolynomial>(seen.begin(), seen.end());
}

// The span of all substitution instances of the generators at one multilinear
// multidegree: rows are coefficient vectors over the arrangements of the
// multidegree's variables.
struct ConsequenceSpace {
  Multidegree degree;
  std::vector<Monomial> monomial_index;  // all arrangements, ascending
  std::vector<StarPolynomial> generated;  // deduplicated generated elements
  std::vector<RatVec> matrix;             // rows aligned with `generated`
  RowSpace space;                         // echelon form of the row space

  explicit ConsequenceSpace(size_t width) : space(width) {}
};

namespace detail {

inline RatVec coefficient_vector(const StarPolynomial& p, const std::vector<Monomial>& index) {
  RatVec v(index.size(), Rational(0));
  size_t found = 0;
  for (size_t m = 0; m < index.size(); ++m) {
    Rational c = p.coeff(index[m]);
    if (c != 0) ++found;
    v[m] = std::move(c);
  }
  if (found != p.term_count())
    throw std::invalid_argument("polynomial has monomials outside the multidegree");
  return v;
}

// All compositions (n1, u_1.., u_t, n2) of n with u_i >= 1 and n1, n2 >= 0.
inline void for_each_composition(unsigned n, unsigned t,
                                 const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> parts(t + 2, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
    if (pos == t + 1) {
      parts[pos] = left;
      visit(parts);
      return;
    }
    const unsigned lo = (pos == 0) ? 0 : 1;
    if (left < lo) return;
    for (unsigned take = lo; take <= left; ++take) {
      parts[pos] = take;
      self(self, pos + 1, left - take);
    }
  };
  rec(rec, 0, n);
}

}  // namespace detail

// Default cap on the total degree of a consequence-space computation; the
// arrangement count is factorial.
constexpr unsigned kConsequenceDegreeCap = 6;

// Span of { v1 * g(u_1 +- u_1*, ..., u_t +- u_t*) * v2 } over all prepared
// generators g, all splits of the multidegree's variables into an optional
// prefix word v1, nonempty argument words u_l (one per variable of g, with +
// for a symmetric slot, - for a skew slot) and an optional suffix word v2.
// Rows are normalized, deduplicated and inserted into an exact echelon form.
inline ConsequenceSpace consequence_span(const std::vector<StarPolynomial>& prepared,
                                         const Multidegree& D,
                                         unsigned max_total_degree = kConsequenceDegreeCap) {
  if (!D.multilinear())
    throw std::invalid_argument("consequence_span expects a multilinear multidegree");
  if (D.total() > max_total_degree)
    throw std::invalid_argument("total degree exceeds the cap; raise max_total_degree explicitly");
  for (const auto& g : prepared)
    if (!multidegree(g).multilinear())
      throw std::invalid_argument("generators must be prepared (multilinear)");

  const std::vector<Variable> vars = D.variables();
  const unsigned n = unsigned(vars.size());

  std::vector<Monomial> index;
  if (n > 0) {
    std::vector<Variable> arrangement = vars;
    do {
      index.push_back(Monomial(arrangement));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }

  ConsequenceSpace out(index.size());
  out.degree = D;
  out.monomial_index = index;
  if (n == 0) return out;

  std::set<StarPolynomial> seen;
  for (const auto& g : prepared) {
    const std::vector<Variable> slots = multidegree(g).variables();
    const unsigned t = unsigned(slots.size());
    if (t > n) continue;

    std::vector<Variable> arrangement = vars;
    do {
      detail::for_each_composition(n, t, [&](const std::vector<unsigned>& parts) {
        // parts = (|v1|, |u_1|, .., |u_t|, |v2|)
        size_t at = parts[0];
        std::map<Variable, StarPolynomial> images;
        for (unsigned l = 0; l < t; ++l) {
          std::vector<Variable> word(arrangement.begin() + at, arrangement.begin() + at + parts[l + 1]);
          at += parts[l + 1];
          const StarPolynomial u = StarPolynomial::term(Monomial(std::move(word)), 1);
          images[slots[l]] =
              slots[l].kind() == VarKind::Sym ? u + involute(u) : u - involute(u);
        }

        StarPolynomial h = substitute(g, images);
        if (parts[0] > 0) {
          std::vector<Variable> prefix(arrangement.begin(), arrangement.begin() + parts[0]);
          h = StarPolynomial::term(Monomial(std::move(prefix)), 1) * h;
        }
        if (parts[t + 1] > 0) {
          std::vector<Variable> suffix(arrangement.end() - parts[t + 1], arrangement.end());
          h = h * StarPolynomial::term(Monomial(std::move(suffix)), 1);
        }
        if (h.is_zero()) return;

        h = normalize_leading(h);
        if (!seen.insert(h).second) return;
        RatVec row = detail::coefficient_vector(h, out.monomial_index);
        out.space.insert(row);
        out.generated.push_back(std::move(h));
        out.matrix.push_back(std::move(row));
      });
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }
  return out;
}

// Degree-bounded membership of a multilinear polynomial in the smallest set
// containing the generators and closed under substitution, the involution and
// two-sided multiplication. Membership at the multilinear level is decided
// exactly by one rational rank computation; callers with non-multilinear
// targets must linearize first (componentwise), which is equivalent over the
// rationals.
inline bool is_member(const std::vector<StarPolynomial>& generators, const StarPolynomial& f,
                      unsigned max_total_degree = kConsequenceDegreeCap) {
  if (f.is_zero()) return true;
  const Multidegree D = multidegree(f);
  if (!D.multilinear())
    throw std::invalid_argument("is_member expects a multilinear polynomial; linearize first");

  const ConsequenceSpace span = consequence_span(prepare_generators(generators), D, max_total_degree);
  return span.space.contains(detail::coefficient_vector(f, span.monomial_index));
}

}  // namespace starpi
