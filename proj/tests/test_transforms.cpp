#include <catch2/catch_amalgamated.hpp>

#include "starpi/sampler.hpp"
#include "starpi/transforms.hpp"

using namespace starpi;

namespace {

StarPolynomial word(std::initializer_list<Variable> vars) {
  return StarPolynomial::term(Monomial(vars), 1);
}

const Variable y10 = Variable::sym(1, Z4(0));
const Variable y11 = Variable::sym(1, Z4(1));
const Variable y21 = Variable::sym(2, Z4(1));
const Variable z11 = Variable::skew(1, Z4(1));
const Variable y12 = Variable::sym(1, Z4(2));
const Variable z12 = Variable::skew(1, Z4(2));
const Variable y13 = Variable::sym(1, Z4(3));
const Variable z13 = Variable::skew(1, Z4(3));

}  // namespace

TEST_CASE("eta table and shift rule") {
  CHECK(eta(Z4(0)) == 0);
  CHECK(eta(Z4(1)) == 0);
  CHECK(eta(Z4(2)) == 1);
  CHECK(eta(Z4(3)) == 1);

  for (Z4 a : all_z4())
    for (Z4 b : all_z4()) {
      const int lhs = (eta(a) + eta(b)) % 2;
      if (is_odd(a) && is_odd(b))
        CHECK(lhs == (eta(a + b) + 1) % 2);
      else
        CHECK(lhs == eta(a + b) % 2);
    }
}

TEST_CASE("s_op: sign of sorting the odd subword") {
  // odd letters out of order: y1@1 precedes y1@3 in the fixed order
  CHECK(s_op(word({y13, y10, y11})) == -word({y13, y10, y11}));
  // same grade: Sym before Skew
  CHECK(s_op(word({z11, y11})) == -word({z11, y11}));
  CHECK(s_op(word({y11, z11})) == word({y11, z11}));
  // index order inside one class
  CHECK(s_op(word({y21, y11})) == -word({y21, y11}));
  // even letters contribute nothing
  CHECK(s_op(word({y12, z12, y10})) == word({y12, z12, y10}));

  CHECK_THROWS_AS(s_op(word({y11, y11})), std::invalid_argument);  // not multilinear
  CHECK_THROWS_AS(s_op(StarPolynomial::var(Variable::sym(1))), std::invalid_argument);
}

TEST_CASE("t_op: kind swap at grades 2 and 3 only") {
  CHECK(t_op(StarPolynomial::var(y12)) == StarPolynomial::var(z12));
  CHECK(t_op(StarPolynomial::var(z13)) == StarPolynomial::var(y13));
  CHECK(t_op(StarPolynomial::var(y11)) == StarPolynomial::var(y11));
  CHECK(t_op(StarPolynomial::var(y10)) == StarPolynomial::var(y10));
  // simultaneous swap inside one word
  CHECK(t_op(word({y13, z13})) == word({z13, y13}));
}

TEST_CASE("tilde on a grade-3 pair, frozen values") {
  const StarPolynomial f = word({y13, z13});

  // t sends the word to (z1@3, y1@3); s sorts it back at the cost of a sign
  CHECK(tilde(f) == -word({z13, y13}));
  CHECK(tilde(tilde(f)) == -f);
  CHECK(tilde(tilde(tilde(tilde(f)))) == f);

  // the operators commute only up to sign here
  CHECK(s_op(t_op(f)) == -t_op(s_op(f)));
}

TEST_CASE("operator laws on random multilinear graded polynomials") {
  Sampler s(91);
  for (int i = 0; i < 300; ++i) {
    const StarPolynomial f = s.multilinear_graded(5, 3);
    CHECK(s_op(s_op(f)) == f);
    CHECK(t_op(t_op(f)) == f);

    const StarPolynomial st = s_op(t_op(f));
    const StarPolynomial ts = t_op(s_op(f));
    CHECK((st == ts || st == -ts));

    const StarPolynomial tt = tilde(tilde(f));
    CHECK((tt == f || tt == -f));
    CHECK(tilde(tilde(tt)) == f);
  }
}

TEST_CASE("alternator and symmetrizer") {
  const StarPolynomial f = word({y11, y21});
  const VariableSet s({y11, y21});

  CHECK(alternator(s, f) == word({y11, y21}) - word({y21, y11}));
  CHECK(symmetrizer(s, f) == word({y11, y21}) + word({y21, y11}));

  // applying twice scales by |set|!
  CHECK(alternator(s, alternator(s, f)) == Rational(2) * alternator(s, f));
  CHECK(symmetrizer(s, symmetrizer(s, f)) == Rational(2) * symmetrizer(s, f));

  // a transposition flips the alternator and fixes the symmetrizer
  const PairPermutation swap = PairPermutation::transposition(y11, y21);
  CHECK(pair_action(swap, alternator(s, f)) == -alternator(s, f));
  CHECK(pair_action(swap, symmetrizer(s, f)) == symmetrizer(s, f));

  // membership must be exactly once per monomial
  CHECK_THROWS_AS(alternator(s, word({y11, y11})), std::invalid_argument);
  CHECK_THROWS_AS(alternator(s, StarPolynomial::var(y11)), std::invalid_argument);

  // sets are homogeneous
  CHECK_THROWS_AS(VariableSet({y11, z11}), std::invalid_argument);
  CHECK_THROWS_AS(VariableSet({y11, y12}), std::invalid_argument);
  CHECK_THROWS_AS(VariableSet({y11, y11}), std::invalid_argument);
}

TEST_CASE("pair_action is a group action") {
  const PairPermutation p = PairPermutation::transposition(y11, y21);
  const Variable y31 = Variable::sym(3, Z4(1));
  const PairPermutation q(
      std::map<Variable, Variable>{{y11, y21}, {y21, y31}, {y31, y11}});

  CHECK_THROWS_AS(
      PairPermutation(std::map<Variable, Variable>{{y11, z11}, {z11, y11}}),
      std::invalid_argument);
  CHECK_THROWS_AS(PairPermutation(std::map<Variable, Variable>{{y11, y21}}),
                  std::invalid_argument);  // not closed

  Sampler s(7);
  for (int i = 0; i < 50; ++i) {
    StarPolynomial f;
    std::vector<Variable> vars = {y11, y21, y31};
    for (int t = 0; t < 2; ++t) {
      std::vector<Variable> w = vars;
      s.shuffle(w);
      f += StarPolynomial::term(Monomial(std::move(w)), s.nonzero_rational());
    }
    CHECK(pair_action(p, pair_action(q, f)) == pair_action(compose(p, q), f));
  }
}

TEST_CASE("grade_expansions: lexicographic grade tuples") {
  const Variable y1 = Variable::sym(1);
  const auto single = grade_expansions(StarPolynomial::var(y1));
  REQUIRE(single.size() == 4);
  for (unsigned g = 0; g < 4; ++g)
    CHECK(single[g] == StarPolynomial::var(y1.with_grade(Z4(g))));

  const Variable y2 = Variable::sym(2);
  const auto pairs = grade_expansions(word({y1, y2}) - word({y2, y1}));
  REQUIRE(pairs.size() == 16);
  // first tuple (0,0), second (0,1): the second variable moves fastest
  CHECK(pairs[0] == word({y1.with_grade(Z4(0)), y2.with_grade(Z4(0))}) -
                        word({y2.with_grade(Z4(0)), y1.with_grade(Z4(0))}));
  CHECK(pairs[1] == word({y1.with_grade(Z4(0)), y2.with_grade(Z4(1))}) -
                        word({y2.with_grade(Z4(1)), y1.with_grade(Z4(0))}));
  CHECK(pairs[4] == word({y1.with_grade(Z4(1)), y2.with_grade(Z4(0))}) -
                        word({y2.with_grade(Z4(0)), y1.with_grade(Z4(1))}));

  CHECK_THROWS_AS(grade_expansions(word({y1, y1})), std::invalid_argument);
  CHECK_THROWS_AS(grade_expansions(StarPolynomial::var(y11)), std::invalid_argument);
}

TEST_CASE("transform of nested alternators is symmetrizing in each set") {
  Sampler s(1234);
  for (int i = 0; i < 50; ++i) {
    const auto sample = s.alternator_product(2, 3, 2);
    const StarPolynomial tf = tilde(sample.poly);

    // variables only at grades 0 and 1, so the kind swap is trivial
    CHECK(tf == s_op(sample.poly));

    for (const auto& set : sample.sets) {
      REQUIRE(set.size() >= 2);
      const PairPermutation swap =
          PairPermutation::transposition(set.members()[0], set.members()[1]);
      CHECK(pair_action(swap, tf) == tf);
    }
  }
}
