#include <catch2/catch_amalgamated.hpp>

#include "starpi/catalog.hpp"
#include "starpi/envelope.hpp"

using namespace starpi;

TEST_CASE("envelope basis pairs base vectors with matching subsets") {
  // trivial grading: only the empty subset has size 0 mod 4 below n = 4
  const EnvelopeAlgebra env = build_envelope(m2_transpose(), 2);
  REQUIRE(env.realized().dim() == 4);
  CHECK(env.realized().basis_name(0) == "e11⊗e{}");
  CHECK(env.pair(0) == std::pair<uint32_t, uint32_t>{0, 0});
  CHECK(env.flat_index(1, 0).has_value());
  CHECK_FALSE(env.flat_index(1, 0b1).has_value());  // grade 0 vs subset size 1
  CHECK_FALSE(validate(env.realized()).has_value());

  // exterior base: per grade, (base count) x (subset count of that size)
  const EnvelopeAlgebra e3 = build_envelope(grassmann_findim(3), 3);
  CHECK(e3.realized().dim() == 1 + 3 * 3 + 3 * 3 + 1 * 1);  // 20

  // with n = 4 the empty-grade part also admits the full subset
  const EnvelopeAlgebra m4 = build_envelope(m2_transpose(), 4);
  CHECK(m4.realized().dim() == 8);
  CHECK_FALSE(validate(m4.realized()).has_value());
}

TEST_CASE("envelope product carries the Grassmann sign") {
  const EnvelopeAlgebra env = build_envelope(grassmann_findim(2), 2);
  REQUIRE(env.realized().dim() == 6);
  CHECK_FALSE(validate(env.realized()).has_value());

  const FinDimAlgebra& B = env.base();
  const auto b1 = AlgebraElement::basis(B, 0b01);  // e{1}, grade 1
  const auto b2 = AlgebraElement::basis(B, 0b10);  // e{2}, grade 1

  const auto x = env.tensor(b1, 0b01);
  const auto y = env.tensor(b2, 0b10);
  const auto xy = a_mul(x, y);
  const auto base12 = AlgebraElement::basis(B, 0b11);

  // (e1 (x) e1')(e2 (x) e2') = e1e2 (x) e1'e2', no sign yet
  CHECK(xy == env.tensor(base12, 0b11));
  // reversing both factors flips two signs, so the product is symmetric
  CHECK(a_mul(y, x) == xy);
  // overlapping Grassmann supports kill the product
  CHECK(a_mul(x, env.tensor(b2, 0b01)).is_zero());

  CHECK_THROWS_AS(env.tensor(b1, 0b11), std::invalid_argument);
  CHECK_THROWS_AS(env.tensor(AlgebraElement::basis(m2_transpose(), 0), 0),
                  std::invalid_argument);
}

TEST_CASE("the envelope of the exterior algebra is commutative") {
  const EnvelopeAlgebra env = build_envelope(grassmann_findim(2), 2);
  const FinDimAlgebra& R = env.realized();
  for (uint32_t i = 0; i < R.dim(); ++i)
    for (uint32_t j = 0; j < R.dim(); ++j) {
      const auto a = AlgebraElement::basis(R, i);
      const auto b = AlgebraElement::basis(R, j);
      CHECK(a_mul(a, b) == a_mul(b, a));
    }
}

TEST_CASE("envelope involution twists by the grade") {
  const EnvelopeAlgebra env = build_envelope(grassmann_findim(2), 2);
  const FinDimAlgebra& B = env.base();

  // grade 1: eta = 0 and e{1}* = e{1}, so the tensor stays symmetric
  const auto x1 = env.tensor(AlgebraElement::basis(B, 0b01), 0b01);
  CHECK(a_involute(x1) == x1);

  // grade 2: eta = 1 and e{1,2}* = -e{1,2}, and the two signs cancel
  const auto x2 = env.tensor(AlgebraElement::basis(B, 0b11), 0b11);
  CHECK(a_involute(x2) == x2);

  // the sym/skew split sees the same twist
  CHECK(envelope_sym_skew_basis(env, Z4(1), Sign::Plus).size() == 4);
  CHECK(envelope_sym_skew_basis(env, Z4(1), Sign::Minus).empty());
  CHECK(envelope_sym_skew_basis(env, Z4(2), Sign::Plus).size() == 1);
  CHECK(envelope_sym_skew_basis(env, Z4(2), Sign::Minus).empty());
  CHECK(envelope_sym_skew_basis(env, Z4(0), Sign::Plus).size() == 1);
}

TEST_CASE("minimal witness pattern uses consecutive generator blocks") {
  const EnvelopeAlgebra env = build_envelope(grassmann_findim(2), 3);
  const std::vector<WitnessSlot> slots = {{Z4(1), Sign::Plus}, {Z4(2), Sign::Plus}};

  CHECK(minimal_support_size(Z4(0)) == 0);
  CHECK(minimal_support_size(Z4(1)) == 1);
  CHECK(minimal_support_size(Z4(2)) == 2);
  CHECK(minimal_support_size(Z4(3)) == 3);

  const auto choices = minimal_witness_choices(env, slots);
  REQUIRE(choices.size() == 2);
  REQUIRE(choices[0].size() == 2);  // base e{1}, e{2} on block e{1}
  REQUIRE(choices[1].size() == 1);  // base e{1,2} on block e{2,3}

  // slot 0 occupies generator 1, slot 1 the next two
  CHECK(env.pair(choices[0][0].coords().begin()->first).second == 0b001);
  CHECK(env.pair(choices[1][0].coords().begin()->first).second == 0b110);

  // the grade-2 slot wants symmetric envelope elements, hence skew base ones
  const auto base_of = env.pair(choices[1][0].coords().begin()->first).first;
  CHECK(env.base().basis_name(base_of) == "e{1,2}");
  CHECK(a_involute(choices[1][0]) == choices[1][0]);

  const auto tuples = minimal_witnesses(env, slots);
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[0][0] == choices[0][0]);
  CHECK(tuples[0][1] == choices[1][0]);
  CHECK(tuples[1][0] == choices[0][1]);

  CHECK_THROWS_AS(minimal_witness_choices(env, {{Z4(3), Sign::Plus}, {Z4(2), Sign::Plus}}),
                  std::invalid_argument);  // needs 5 generators, have 3
}

TEST_CASE("construction guards and degenerate envelopes") {
  CHECK_THROWS_AS(build_envelope(m2_transpose(), 25), std::invalid_argument);

  // a base concentrated in grade 3 pairs with nothing below 3 generators
  const std::vector<std::vector<SparseVec>> zero_table(1, std::vector<SparseVec>(1));
  const FinDimAlgebra G3({"g"}, {Z4(3)}, zero_table, {{{0, Rational(1)}}});
  CHECK_THROWS_AS(build_envelope(G3, 2), std::invalid_argument);
  CHECK(build_envelope(G3, 3).realized().dim() == 1);
}
