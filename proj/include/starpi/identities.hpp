#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "starpi/algebra.hpp"
#include "starpi/envelope.hpp"
#include "starpi/linalg.hpp"
#include "starpi/poly.hpp"
#include "starpi/transforms.hpp"

namespace starpi {

struct Assignment {
  std::map<Variable, AlgebraElement> values;
};

struct IdentityReport {
  bool holds = true;
  std::optional<Assignment> witness;  // first failing tuple in enumeration order
  uint64_t tuples_checked = 0;
};

namespace detail {

// A multilinear polynomial flattened for tuple loops: variables in canonical
// order become slots, each monomial a coefficient plus a slot sequence.
struct CompiledPoly {
  std::vector<Variable> slots;
  std::vector<std::pair<Rational, std::vector<uint32_t>>> monomials;
};

inline CompiledPoly compile_multilinear(const StarPolynomial& f) {
  const Multidegree deg = multidegree(f);
  if (!deg.multilinear())
    throw std::invalid_argument("expected a multilinear polynomial");
  CompiledPoly out;
  out.slots = deg.variables();
  std::map<Variable, uint32_t> slot_of;
  for (uint32_t s = 0; s < out.slots.size(); ++s) slot_of[out.slots[s]] = s;
  for (const auto& [m, c] : f.terms()) {
    std::vector<uint32_t> seq;
    seq.reserve(m.word().size());
    for (const auto& v : m.word()) seq.push_back(slot_of.at(v));
    out.monomials.emplace_back(c, std::move(seq));
  }
  return out;
}

inline AlgebraElement eval_compiled(const CompiledPoly& p, const FinDimAlgebra& A,
                                    const std::vector<const AlgebraElement*>& tuple) {
  AlgebraElement acc(A);
  for (const auto& [c, seq] : p.monomials) {
    AlgebraElement prod = *tuple[seq[0]];
    for (size_t k = 1; k < seq.size(); ++k) prod = a_mul(prod, *tuple[seq[k]]);
    prod *= c;
    acc += prod;
  }
  return acc;
}

// Odometer over the per-slot ranges, last slot fastest; stops at the first
// nonzero value. Accumulates into `report` and returns false on a failure.
inline bool check_all_tuples(const CompiledPoly& p, const FinDimAlgebra& A,
                             const std::vector<std::vector<AlgebraElement>>& ranges,
                             IdentityReport& report) {
  for (const auto& r : ranges)
    if (r.empty()) return true;  // no admissible substitution: vacuously holds

  const size_t n = ranges.size();
  std::vector<size_t> idx(n, 0);
  std::vector<const AlgebraElement*> tuple(n);
  while (true) {
    for (size_t k = 0; k < n; ++k) tuple[k] = &ranges[k][idx[k]];
    ++report.tuples_checked;
    if (!eval_compiled(p, A, tuple).is_zero()) {
      Assignment w;
      for (size_t k = 0; k < n; ++k) w.values.emplace(p.slots[k], *tuple[k]);
      report.holds = false;
      report.witness = std::move(w);
      return false;
    }
    size_t k = n;
    bool done = true;
    while (k > 0) {
      --k;
      if (++idx[k] < ranges[k].size()) {
        done = false;
        break;
      }
      idx[k] = 0;
    }
    if (done || n == 0) return true;
  }
}

// Multilinear pieces of f: multihomogeneous components, already-multilinear
// ones kept verbatim (so witnesses stay on the original variables), the rest
// fully linearized.
inline std::vector<StarPolynomial> multilinear_pieces(const StarPolynomial& f) {
  std::vector<StarPolynomial> out;
  for (const auto& comp : multihomogeneous_components(f)) {
    if (multidegree(comp).multilinear())
      out.push_back(comp);
    else
      out.push_back(full_linearization(comp));
  }
  return out;
}

}  // namespace detail

// Value of f under the assignment. Defined for any polynomial; each variable
// must be assigned an element of A that matches it: symmetric for y, skew for
// z, supported on the grade-theta basis vectors when the variable is graded.
inline AlgebraElement evaluate(const StarPolynomial& f, const Assignment& a,
                               const FinDimAlgebra& A) {
  for (const auto& [v, e] : a.values) {
    if (!e.algebra().same(A)) throw std::invalid_argument("assignment lives in a different algebra");
    const AlgebraElement star = a_involute(e);
    if (v.kind() == VarKind::Sym && !(star == e))
      throw std::invalid_argument("symmetric variable assigned a non-symmetric element");
    if (v.kind() == VarKind::Skew && !(star == -e))
      throw std::invalid_argument("skew variable assigned a non-skew element");
    if (v.graded())
      for (const auto& [i, c] : e.coords())
        if (!(A.grading(i) == v.grade()))
          throw std::invalid_argument("assigned element is not homogeneous of the variable's grade");
  }

  AlgebraElement acc(A);
  for (const auto& [m, c] : f.terms()) {
    AlgebraElement prod(A);
    bool first = true;
    for (const auto& v : m.word()) {
      auto it = a.values.find(v);
      if (it == a.values.end())
        throw std::invalid_argument("unassigned variable " + to_string(v));
      prod = first ? it->second : a_mul(prod, it->second);
      first = false;
    }
    prod *= c;
    acc += prod;
  }
  return acc;
}

// Does f vanish under every admissible substitution? Variables must be
// ungraded: y-slots range over the symmetric part of A, z-slots over the skew
// part. The check reduces f to multilinear pieces (sound and complete over
// the rationals) and enumerates basis tuples; the first failing tuple is
// reported as the witness.
inline IdentityReport is_star_identity(const FinDimAlgebra& A, const StarPolynomial& f) {
  if (f.gradedness().value_or(false))
    throw std::invalid_argument("is_star_identity expects an ungraded polynomial");

  const std::vector<AlgebraElement> sym = sym_skew_basis(A, Sign::Plus);
  const std::vector<AlgebraElement> skew = sym_skew_basis(A, Sign::Minus);

  IdentityReport report;
  for (const auto& piece : detail::multilinear_pieces(f)) {
    const auto compiled = detail::compile_multilinear(piece);
    std::vector<std::vector<AlgebraElement>> ranges;
    ranges.reserve(compiled.slots.size());
    for (const auto& v : compiled.slots) ranges.push_back(v.kind() == VarKind::Sym ? sym : skew);
    if (!detail::check_all_tuples(compiled, A, ranges, report)) return report;
  }
  return report;
}

// Graded version: a slot of grade theta ranges over the basis of the
// symmetric or skew part of the grade-theta component. Components with an
// empty admissible range hold vacuously.
inline IdentityReport is_graded_star_identity(const FinDimAlgebra& A, const StarPolynomial& f) {
  if (!f.gradedness().value_or(true))
    throw std::invalid_argument("is_graded_star_identity expects a graded polynomial");

  std::map<std::pair<unsigned, VarKind>, std::vector<AlgebraElement>> cache;
  auto range_for = [&](const Variable& v) -> const std::vector<AlgebraElement>& {
    auto key = std::make_pair(v.grade().value(), v.kind());
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, homogeneous_basis(A, v.grade(),
                                                v.kind() == VarKind::Sym ? Sign::Plus : Sign::Minus))
               .first;
    return it->second;
  };

  IdentityReport report;
  for (const auto& piece : detail::multilinear_pieces(f)) {
    const auto compiled = detail::compile_multilinear(piece);
    std::vector<std::vector<AlgebraElement>> ranges;
    ranges.reserve(compiled.slots.size());
    for (const auto& v : compiled.slots) ranges.push_back(range_for(v));
    if (!detail::check_all_tuples(compiled, A, ranges, report)) return report;
  }
  return report;
}

enum class EnvelopeMode { Minimal, Exhaustive };

struct EnvelopeLemmaReport {
  IdentityReport base;      // f on A
  IdentityReport envelope;  // tilde(f) on the realized envelope
  bool agree = false;
};

namespace detail {

// Envelope-side check of a multilinear graded polynomial. Minimal mode fixes
// one disjoint block of Grassmann generators per slot and runs over the base
// homogeneous bases; exhaustive mode runs over every envelope sym/skew basis
// tuple with pairwise disjoint supports. Tuples with overlapping supports
// evaluate to zero term by term (every word repeats a Grassmann generator),
// so skipping them loses nothing; they are not counted.
inline IdentityReport envelope_side_check(const EnvelopeAlgebra& env, const StarPolynomial& tf,
                                          EnvelopeMode mode) {
  const auto compiled = compile_multilinear(tf);
  std::vector<WitnessSlot> slots;
  slots.reserve(compiled.slots.size());
  for (const auto& v : compiled.slots)
    slots.push_back({v.grade(), v.kind() == VarKind::Sym ? Sign::Plus : Sign::Minus});

  IdentityReport report;
  if (mode == EnvelopeMode::Minimal) {
    const auto ranges = minimal_witness_choices(env, slots);
    check_all_tuples(compiled, env.realized(), ranges, report);
    return report;
  }

  // Exhaustive: per-slot basis elements each live on a single subset mask.
  const size_t n = slots.size();
  std::vector<std::vector<AlgebraElement>> ranges;
  std::vector<std::vector<uint32_t>> masks;
  for (const auto& s : slots) {
    auto basis = envelope_sym_skew_basis(env, s.theta, s.delta);
    std::vector<uint32_t> m;
    m.reserve(basis.size());
    for (const auto& e : basis) m.push_back(env.pair(e.coords().begin()->first).second);
    ranges.push_back(std::move(basis));
    masks.push_back(std::move(m));
  }
  for (const auto& r : ranges)
    if (r.empty()) return report;

  std::vector<const AlgebraElement*> tuple(n);
  bool failed = false;
  auto rec = [&](auto&& self, size_t k, uint32_t used) -> void {
    if (failed) return;
    if (k == n) {
      ++report.tuples_checked;
      if (!eval_compiled(compiled, env.realized(), tuple).is_zero()) {
        Assignment w;
        for (size_t t = 0; t < n; ++t) w.values.emplace(compiled.slots[t], *tuple[t]);
        report.holds = false;
        report.witness = std::move(w);
        failed = true;
      }
      return;
    }
    for (size_t i = 0; i < ranges[k].size(); ++i) {
      if (masks[k][i] & used) continue;
      tuple[k] = &ranges[k][i];
      self(self, k + 1, used | masks[k][i]);
      if (failed) return;
    }
  };
  if (n == 0) return report;
  rec(rec, 0, 0);
  return report;
}

}  // namespace detail

// Checks the transfer between a graded *-identity of A and the transformed
// identity of the Grassmann envelope: f vanishes on A under graded
// substitution iff tilde(f) vanishes on the envelope. Requires a multilinear
// multihomogeneous graded f and enough Grassmann generators for the minimal
// witness pattern of tilde(f).
inline EnvelopeLemmaReport check_envelope_lemma(const FinDimAlgebra& A, const StarPolynomial& f,
                                                uint32_t n_generators,
                                                EnvelopeMode mode = EnvelopeMode::Minimal) {
  if (!f.gradedness().value_or(true))
    throw std::invalid_argument("check_envelope_lemma expects a graded polynomial");
  if (!multidegree(f).multilinear())
    throw std::invalid_argument("check_envelope_lemma expects a multilinear polynomial");

  EnvelopeLemmaReport out;
  out.base = is_graded_star_identity(A, f);

  const StarPolynomial tf = tilde(f);
  uint32_t needed = 0;
  for (const auto& v : multidegree(tf).variables()) needed += minimal_support_size(v.grade());
  if (n_generators < needed)
    throw std::invalid_argument("truncation too small for the witness pattern");

  const EnvelopeAlgebra env = build_envelope(A, n_generators);
  out.envelope = detail::envelope_side_check(env, tf, mode);
  out.agree = out.base.holds == out.envelope.holds;
  return out;
}

// All multilinear graded (or ungraded) *-identities of A at the given
// multidegree: coefficient vectors over the n! arrangements whose evaluations
// vanish on every admissible basis tuple, returned as polynomials. Used to
// manufacture identities that hold by construction.
inline std::vector<StarPolynomial> multilinear_identity_basis(const FinDimAlgebra& A,
                                                              const Multidegree& D) {
  if (!D.multilinear()) throw std::invalid_argument("expected a multilinear multidegree");
  const std::vector<Variable> vars = D.variables();
  if (vars.empty()) return {};

  std::vector<Monomial> monomials;
  {
    std::vector<Variable> arrangement = vars;
    do {
      monomials.push_back(Monomial(arrangement));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }
  const size_t M = monomials.size();

  std::vector<std::vector<AlgebraElement>> ranges;
  for (const auto& v : vars) {
    const Sign d = v.kind() == VarKind::Sym ? Sign::Plus : Sign::Minus;
    ranges.push_back(v.graded() ? homogeneous_basis(A, v.grade(), d) : sym_skew_basis(A, d));
    if (ranges.back().empty()) {
      // No admissible substitution: every polynomial at D holds vacuously.
      std::vector<StarPolynomial> all;
      for (const auto& m : monomials) all.push_back(StarPolynomial::term(m, 1));
      return all;
    }
  }

  RowSpace constraints(M);
  std::vector<size_t> idx(vars.size(), 0);
  while (true) {
    Assignment a;
    for (size_t k = 0; k < vars.size(); ++k) a.values.emplace(vars[k], ranges[k][idx[k]]);

    std::map<uint32_t, RatVec> rows;  // output coordinate -> constraint row
    for (size_t m = 0; m < M; ++m) {
      const AlgebraElement val = evaluate(StarPolynomial::term(monomials[m], 1), a, A);
      for (const auto& [i, c] : val.coords()) {
        auto it = rows.try_emplace(i, RatVec(M, Rational(0))).first;
        it->second[m] = c;
      }
    }
    for (auto& [i, row] : rows) constraints.insert(std::move(row));

    if (constraints.rank() == M) break;  // only the zero polynomial is left
    size_t k = vars.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (++idx[k] < ranges[k].size()) {
        done = false;
        break;
      }
      idx[k] = 0;
    }
    if (done) break;
  }

  std::vector<StarPolynomial> out;
  for (const auto& coeffs : nullspace(constraints.rows(), M)) {
    StarPolynomial p;
    for (size_t m = 0; m < M; ++m)
      if (coeffs[m] != 0) p += StarPolynomial::term(monomials[m], coeffs[m]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace starpi
