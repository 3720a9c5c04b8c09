#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "starpi/poly.hpp"
#include "starpi/transforms.hpp"

namespace starpi {

// Deterministic generator of random test inputs. All draws go through
// below(), which uses plain modulo on mt19937_64 output, so a seed fixes the
// exact sequence on every platform; std::uniform_int_distribution is
// implementation-defined and never used.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  uint64_t below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    return rng_() % n;
  }

  bool coin() { return below(2) == 1; }

  Z4 z4() { return Z4(unsigned(below(4))); }

  VarKind kind() { return coin() ? VarKind::Skew : VarKind::Sym; }

  // Nonzero, numerator in [-4,4], denominator in [1,3].
  Rational nonzero_rational() {
    const long num = long(below(4)) + 1;
    const long den = long(below(3)) + 1;
    Rational q(coin() ? -num : num, den);
    q.canonicalize();
    return q;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  // Fresh variables, one per slot, indices 1.. per (kind, grade) class.
  std::vector<Variable> fresh_variables(size_t count, bool graded) {
    std::map<std::pair<int, int>, uint32_t> next;
    std::vector<Variable> vars;
    vars.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      const VarKind k = kind();
      if (graded) {
        const Z4 g = z4();
        uint32_t& n = next[{int(k == VarKind::Skew), int(g.value())}];
        vars.push_back(Variable::make(k, ++n, g));
      } else {
        uint32_t& n = next[{int(k == VarKind::Skew), -1}];
        vars.push_back(Variable::make(k, ++n, std::nullopt));
      }
    }
    return vars;
  }

  // Nonzero multilinear polynomial on `degree` fresh variables with at most
  // max_terms arrangements.
  StarPolynomial multilinear(size_t degree, size_t max_terms, bool graded) {
    if (degree == 0) throw std::invalid_argument("degree must be positive");
    std::vector<Variable> vars = fresh_variables(degree, graded);
    while (true) {
      StarPolynomial p;
      const size_t terms = 1 + below(max_terms);
      for (size_t t = 0; t < terms; ++t) {
        std::vector<Variable> word = vars;
        shuffle(word);
        p += StarPolynomial::term(Monomial(std::move(word)), nonzero_rational());
      }
      if (!p.is_zero()) return p;
    }
  }

  StarPolynomial multilinear_graded(size_t max_degree, size_t max_terms) {
    return multilinear(1 + below(max_degree), max_terms, true);
  }

  StarPolynomial multilinear_plain(size_t max_degree, size_t max_terms) {
    return multilinear(1 + below(max_degree), max_terms, false);
  }

  // Nonzero multihomogeneous polynomial: `var_count` fresh ungraded variables
  // with per-variable degrees up to max_degree_per_var.
  StarPolynomial multihomogeneous(size_t var_count, size_t max_degree_per_var, size_t max_terms) {
    std::vector<Variable> vars = fresh_variables(var_count, false);
    std::vector<Variable> multiset;
    for (const auto& v : vars) {
      const size_t d = 1 + below(max_degree_per_var);
      for (size_t k = 0; k < d; ++k) multiset.push_back(v);
    }
    while (true) {
      StarPolynomial p;
      const size_t terms = 1 + below(max_terms);
      for (size_t t = 0; t < terms; ++t) {
        std::vector<Variable> word = multiset;
        shuffle(word);
        p += StarPolynomial::term(Monomial(std::move(word)), nonzero_rational());
      }
      if (!p.is_zero()) return p;
    }
  }

  // A product of alternators: nested alternators over disjoint grade-1 sets
  // applied to one monomial that also carries a few grade-0 spectator
  // variables. These are the polynomials whose transform is symmetrizing.
  struct AlternatorSample {
    StarPolynomial poly;
    std::vector<VariableSet> sets;
  };

  AlternatorSample alternator_product(size_t max_sets, size_t max_set_size,
                                      size_t max_spectators) {
    const size_t set_count = 1 + below(max_sets);
    std::vector<VariableSet> sets;
    std::vector<Variable> all;
    uint32_t next_index = 1;
    for (size_t s = 0; s < set_count; ++s) {
      const VarKind k = kind();
      const size_t size = 2 + below(max_set_size - 1);
      std::vector<Variable> members;
      for (size_t i = 0; i < size; ++i) {
        members.push_back(Variable::make(k, next_index++, Z4(1)));
        all.push_back(members.back());
      }
      sets.emplace_back(std::move(members));
    }
    const size_t spectators = below(max_spectators + 1);
    for (size_t i = 0; i < spectators; ++i)
      all.push_back(Variable::make(kind(), next_index++, Z4(0)));

    shuffle(all);
    StarPolynomial f = StarPolynomial::term(Monomial(std::move(all)), 1);
    for (const auto& s : sets) f = alternator(s, f);
    return {std::move(f), std::move(sets)};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace starpi
