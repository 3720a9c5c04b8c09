#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "starpi/algebra.hpp"
#include "starpi/grassmann.hpp"

namespace starpi {

// The Grassmann envelope of a graded *-algebra A over the exterior algebra on
// n generators: spanned by the pairs b (x) e_S where b runs over the basis of
// A and the size of S is congruent to the grade of b mod 4. Realized as a
// FinDimAlgebra whose basis order is (index of b, then S in colex order),
// with componentwise grading, product (a (x) g)(b (x) h) = ab (x) gh, and
// involution (a (x) g)* = (-1)^eta(grade) a* (x) g. Products are served by a
// callback, so building an envelope is cheap even when its dimension is in
// the thousands.
class EnvelopeAlgebra {
 public:
  EnvelopeAlgebra(FinDimAlgebra base, uint32_t n_generators, FinDimAlgebra realized,
                  std::shared_ptr<const std::vector<std::pair<uint32_t, uint32_t>>> pairs,
                  std::shared_ptr<const std::unordered_map<uint64_t, uint32_t>> lookup)
      : base_(std::move(base)),
        n_(n_generators),
        realized_(std::move(realized)),
        pairs_(std::move(pairs)),
        lookup_(std::move(lookup)) {}

  const FinDimAlgebra& base() const { return base_; }
  uint32_t n_generators() const { return n_; }
  const FinDimAlgebra& realized() const { return realized_; }

  // (base index, subset mask) of a realized basis vector.
  std::pair<uint32_t, uint32_t> pair(uint32_t flat) const { return pairs_->at(flat); }

  std::optional<uint32_t> flat_index(uint32_t base_index, uint32_t mask) const {
    auto it = lookup_->find((uint64_t(base_index) << 32) | mask);
    if (it == lookup_->end()) return std::nullopt;
    return it->second;
  }

  // b (x) e_S for a grade-homogeneous base element whose grade matches |S|.
  AlgebraElement tensor(const AlgebraElement& b, uint32_t mask) const {
    if (!b.algebra().same(base_)) throw std::invalid_argument("element not in the base algebra");
    AlgebraElement out(realized_);
    for (const auto& [i, c] : b.coords()) {
      auto flat = flat_index(i, mask);
      if (!flat)
        throw std::invalid_argument("base grade does not match the subset size");
      out.add(*flat, c);
    }
    return out;
  }

 private:
  FinDimAlgebra base_;
  uint32_t n_;
  FinDimAlgebra realized_;
  std::shared_ptr<const std::vector<std::pair<uint32_t, uint32_t>>> pairs_;
  std::shared_ptr<const std::unordered_map<uint64_t, uint32_t>> lookup_;
};

inline EnvelopeAlgebra build_envelope(const FinDimAlgebra& A, uint32_t n_generators) {
  if (n_generators > 24) throw std::invalid_argument("envelope truncation too large");
  const uint32_t masks = uint32_t(1) << n_generators;

  auto pairs = std::make_shared<std::vector<std::pair<uint32_t, uint32_t>>>();
  auto lookup = std::make_shared<std::unordered_map<uint64_t, uint32_t>>();
  for (uint32_t i = 0; i < A.dim(); ++i)
    for (uint32_t mask = 0; mask < masks; ++mask)
      if (A.grading(i) == subset_grade(mask)) {
        lookup->emplace((uint64_t(i) << 32) | mask, uint32_t(pairs->size()));
        pairs->emplace_back(i, mask);
      }
  if (pairs->empty()) throw std::invalid_argument("envelope is zero: no matching subsets");

  const uint32_t dim = uint32_t(pairs->size());
  std::vector<std::string> names;
  std::vector<Z4> grading;
  names.reserve(dim);
  grading.reserve(dim);
  for (const auto& [i, mask] : *pairs) {
    names.push_back(A.basis_name(i) + "⊗" + subset_name(mask));
    grading.push_back(A.grading(i));
  }

  // (a (x) e_S)* = (-1)^eta(theta) a* (x) e_S on the grade-theta part.
  std::vector<SparseVec> invol(dim);
  for (uint32_t flat = 0; flat < dim; ++flat) {
    const auto [i, mask] = (*pairs)[flat];
    const bool neg = eta(A.grading(i)) == 1;
    SparseVec col;
    for (const auto& [k, c] : A.involution_column(i)) {
      auto it = lookup->find((uint64_t(k) << 32) | mask);
      if (it == lookup->end())
        throw std::logic_error("involution of the base algebra is not grade-preserving");
      col.emplace_back(it->second, neg ? -c : c);
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    invol[flat] = std::move(col);
  }

  FinDimAlgebra::ProductFn fn = [A, pairs, lookup](uint32_t x, uint32_t y) -> SparseVec {
    const auto [a, s] = (*pairs)[x];
    const auto [b, t] = (*pairs)[y];
    if (s & t) return {};
    const int sign = reorder_sign(s, t);
    SparseVec out;
    for (const auto& [k, c] : A.product(a, b)) {
      auto it = lookup->find((uint64_t(k) << 32) | (s | t));
      if (it == lookup->end())
        throw std::logic_error("product of the base algebra is not graded");
      out.emplace_back(it->second, sign < 0 ? -c : c);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a2, const auto& b2) { return a2.first < b2.first; });
    return out;
  };

  FinDimAlgebra realized(std::move(names), std::move(grading), std::move(fn), std::move(invol));
  return EnvelopeAlgebra(A, n_generators, std::move(realized), std::move(pairs), std::move(lookup));
}

// Basis of the grade-theta, delta-symmetric part of the envelope. Because the
// envelope involution carries the extra sign (-1)^eta(theta), the base
// elements must be taken from the delta-part when eta(theta) = 0 and from the
// (-delta)-part when eta(theta) = 1. Order: base element outer, subset colex
// inner.
inline std::vector<AlgebraElement> envelope_sym_skew_basis(const EnvelopeAlgebra& env, Z4 theta,
                                                           Sign delta) {
  const Sign base_delta = eta(theta) == 1 ? flip(delta) : delta;
  const std::vector<AlgebraElement> base_part = homogeneous_basis(env.base(), theta, base_delta);

  std::vector<AlgebraElement> out;
  const uint32_t masks = uint32_t(1) << env.n_generators();
  for (const auto& b : base_part)
    for (uint32_t mask = 0; mask < masks; ++mask)
      if (subset_grade(mask) == theta) out.push_back(env.tensor(b, mask));
  return out;
}

// Slot in a witness tuple: the grade and the symmetric/skew flag of one
// variable.
struct WitnessSlot {
  Z4 theta;
  Sign delta;
};

// Fewest Grassmann generators that a grade-theta envelope element can occupy.
inline uint32_t minimal_support_size(Z4 theta) { return theta.value(); }

// Per-slot candidate lists for the minimal witness pattern: slot k is set on
// the next block of minimal_support_size(theta_k) fresh generators, and runs
// over (base homogeneous basis) (x) (that fixed subset). Throws when the
// blocks do not fit into the truncation.
inline std::vector<std::vector<AlgebraElement>> minimal_witness_choices(
    const EnvelopeAlgebra& env, const std::vector<WitnessSlot>& slots) {
  uint32_t used = 0;
  std::vector<std::vector<AlgebraElement>> out;
  out.reserve(slots.size());
  for (const auto& slot : slots) {
    const uint32_t size = minimal_support_size(slot.theta);
    if (used + size > env.n_generators())
      throw std::invalid_argument("not enough Grassmann generators for the witness pattern");
    const uint32_t mask = ((uint32_t(1) << size) - 1) << used;
    used += size;

    const Sign base_delta = eta(slot.theta) == 1 ? flip(slot.delta) : slot.delta;
    std::vector<AlgebraElement> choices;
    for (const auto& b : homogeneous_basis(env.base(), slot.theta, base_delta))
      choices.push_back(env.tensor(b, mask));
    out.push_back(std::move(choices));
  }
  return out;
}

// The materialized cross product of the per-slot choices, odometer order with
// the last slot fastest. Empty when some slot has no candidates.
inline std::vector<std::vector<AlgebraElement>> minimal_witnesses(
    const EnvelopeAlgebra& env, const std::vector<WitnessSlot>& slots) {
  const auto choices = minimal_witness_choices(env, slots);
  std::vector<std::vector<AlgebraElement>> out;
  for (const auto& c : choices)
    if (c.empty()) return out;

  std::vector<size_t> idx(choices.size(), 0);
  while (true) {
    std::vector<AlgebraElement> tuple;
    tuple.reserve(choices.size());
    for (size_t k = 0; k < choices.size(); ++k) tuple.push_back(choices[k][idx[k]]);
    out.push_back(std::move(tuple));

    size_t k = choices.size();
    while (k > 0) {
      --k;
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

}  // namespace starpi
