#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "starpi/linalg.hpp"

using namespace starpi;

namespace {

RatVec vec(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("RowSpace keeps a reduced echelon basis") {
  RowSpace s(3);
  CHECK(s.insert(vec({2, 4, 0})));
  CHECK(s.insert(vec({1, 2, 1})));
  CHECK_FALSE(s.insert(vec({3, 6, 1})));  // dependent

  REQUIRE(s.rank() == 2);
  CHECK(s.pivots() == std::vector<size_t>{0, 2});
  CHECK(s.rows()[0] == vec({1, 2, 0}));
  CHECK(s.rows()[1] == vec({0, 0, 1}));

  CHECK(s.contains(vec({5, 10, -7})));
  CHECK_FALSE(s.contains(vec({0, 1, 0})));
  CHECK(s.contains(vec({0, 0, 0})));

  CHECK_THROWS_AS(s.contains(vec({1, 0})), std::invalid_argument);
}

TEST_CASE("stored rows are independent of insertion order") {
  std::vector<RatVec> rows = {
      vec({1, 2, 3, 4}),
      vec({0, 1, 1, 0}),
      vec({2, 5, 7, 8}),  // rows[0] + rows[1] doubled, dependent
      vec({1, 0, 0, 1}),
  };

  std::vector<size_t> perm = {0, 1, 2, 3};
  std::vector<std::vector<RatVec>> seen;
  std::sort(perm.begin(), perm.end());
  do {
    RowSpace s(4);
    for (size_t i : perm) s.insert(rows[i]);
    seen.push_back(s.rows());
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (const auto& basis : seen) CHECK(basis == seen.front());
}

TEST_CASE("exact_rank and in_span") {
  CHECK(exact_rank({}, 3) == 0);
  CHECK(exact_rank({vec({0, 0, 0})}, 3) == 0);
  CHECK(exact_rank({vec({1, 1, 0}), vec({0, 1, 1}), vec({1, 0, -1})}, 3) == 2);
  CHECK(exact_rank({vec({1, 1, 0}), vec({0, 1, 1}), vec({1, 0, 1})}, 3) == 3);

  CHECK(in_span({vec({1, 1, 0}), vec({0, 1, 1})}, vec({1, 0, -1})));
  CHECK_FALSE(in_span({vec({1, 1, 0}), vec({0, 1, 1})}, vec({1, 0, 0})));
  CHECK(in_span({}, vec({0, 0})));
  CHECK_FALSE(in_span({}, vec({1, 0})));
}

TEST_CASE("fractions survive exactly") {
  RowSpace s(2);
  RatVec v = {Rational(1, 3), Rational(1, 7)};
  s.insert(v);
  CHECK(s.rows()[0] == RatVec{Rational(1), Rational(3, 7)});
  CHECK(s.contains({Rational(7, 3), Rational(1)}));
  CHECK_FALSE(s.contains({Rational(7, 3), Rational(1, 2)}));
}

TEST_CASE("nullspace vectors annihilate every row") {
  const std::vector<RatVec> rows = {vec({1, 2, 0, 1}), vec({0, 0, 1, -1})};
  const auto basis = nullspace(rows, 4);
  REQUIRE(basis.size() == 2);

  for (const auto& x : basis)
    for (const auto& r : rows) {
      Rational dot = 0;
      for (size_t k = 0; k < 4; ++k) dot += r[k] * x[k];
      CHECK(dot == 0);
    }

  // one basis vector per free column (columns 1 and 3), unit there
  CHECK(basis[0][1] == 1);
  CHECK(basis[0][3] == 0);
  CHECK(basis[1][1] == 0);
  CHECK(basis[1][3] == 1);

  CHECK(nullspace({}, 3).size() == 3);
  CHECK(nullspace({vec({1, 0}), vec({0, 1})}, 2).empty());
}

TEST_CASE("rank plus nullity is the width on random matrices") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    const size_t w = 1 + rng() % 6;
    const size_t h = rng() % 7;
    std::vector<RatVec> rows;
    for (size_t i = 0; i < h; ++i) {
      RatVec r;
      for (size_t j = 0; j < w; ++j) r.emplace_back(long(rng() % 7) - 3);
      rows.push_back(std::move(r));
    }
    CHECK(exact_rank(rows, w) + nullspace(rows, w).size() == w);
  }
}
