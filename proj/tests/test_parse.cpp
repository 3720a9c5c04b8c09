#include <catch2/catch_amalgamated.hpp>

#include "starpi/parse.hpp"
#include "starpi/sampler.hpp"

using namespace starpi;

TEST_CASE("variables, grades and kinds") {
  CHECK(parse_poly("y1") == StarPolynomial::var(Variable::sym(1)));
  CHECK(parse_poly("z3") == StarPolynomial::var(Variable::skew(3)));
  CHECK(parse_poly("y2@3") == StarPolynomial::var(Variable::sym(2, Z4(3))));
  CHECK(parse_variable("z10@0") == Variable::skew(10, Z4(0)));

  CHECK_THROWS_AS(parse_poly("y0"), ParseError);
  CHECK_THROWS_AS(parse_poly("y1@4"), ParseError);
  CHECK_THROWS_AS(parse_variable("y1*y2"), ParseError);
  CHECK_THROWS_AS(parse_poly("x1"), ParseError);
}

TEST_CASE("terms, signs and coefficients") {
  const auto y1 = StarPolynomial::var(Variable::sym(1));
  const auto y2 = StarPolynomial::var(Variable::sym(2));

  CHECK(parse_poly("y1*y2") == y1 * y2);
  CHECK(parse_poly("-y1 + y2") == y2 - y1);
  CHECK(parse_poly("3/2*y1") == Rational(3, 2) * y1);
  CHECK(parse_poly("2*y1 - y1") == y1);
  CHECK(parse_poly("4/6*y1") == Rational(2, 3) * y1);
  CHECK(parse_poly(" y1 \n + y2 ") == y1 + y2);

  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("y1 - y1").is_zero());
  CHECK(parse_poly("y1 + 0") == y1);
  CHECK(parse_poly("0 - y1") == -y1);

  CHECK_THROWS_AS(parse_poly("3"), ParseError);    // bare nonzero coefficient
  CHECK_THROWS_AS(parse_poly("3 y1"), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0*y1"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("y1 +"), ParseError);
  CHECK_THROWS_AS(parse_poly("y1 y2"), ParseError);  // missing '*'
}

TEST_CASE("primes, parentheses and commutators") {
  const auto y1 = StarPolynomial::var(Variable::sym(1));
  const auto z1 = StarPolynomial::var(Variable::skew(1));
  const auto z2 = StarPolynomial::var(Variable::skew(2));

  CHECK(parse_poly("y1'") == y1);
  CHECK(parse_poly("z1'") == -z1);
  CHECK(parse_poly("(y1*z1)'") == involute(y1 * z1));
  CHECK(parse_poly("(y1*z1)'") == -(z1 * y1));
  CHECK(parse_poly("[z1,z2]") == z1 * z2 - z2 * z1);
  CHECK(parse_poly("[z1,z2]'") == involute(z1 * z2 - z2 * z1));
  CHECK(parse_poly("[[y1,z1],z2]") ==
        (y1 * z1 - z1 * y1) * z2 - z2 * (y1 * z1 - z1 * y1));
  CHECK(parse_poly("2*(y1 + z1)*y1") == Rational(2) * ((y1 + z1) * y1));

  CHECK_THROWS_AS(parse_poly("(y1"), ParseError);
  CHECK_THROWS_AS(parse_poly("[y1]"), ParseError);
  CHECK_THROWS_AS(parse_poly("[y1,y1,y1]"), ParseError);
}

TEST_CASE("error positions are 1-based line and column") {
  try {
    parse_poly("y1 +\n @");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 2);
  }

  try {
    parse_poly("y1**y2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 4);
  }
}

TEST_CASE("canonical rendering round-trips through the parser") {
  Sampler s(777);
  for (int i = 0; i < 400; ++i) {
    const StarPolynomial p =
        s.coin() ? s.multilinear_graded(5, 4) : s.multihomogeneous(3, 2, 4);
    CHECK(parse_poly(to_string(p)) == p);
  }
  CHECK(parse_poly(to_string(StarPolynomial())).is_zero());
}

TEST_CASE("grassmann expressions") {
  const uint32_t n = 4;
  const auto b = [&](uint32_t mask) { return GrassmannElement::basis(n, mask); };

  CHECK(parse_grassmann("e{}", n) == GrassmannElement::unit(n));
  CHECK(parse_grassmann("e{1,3}", n) == b(0b101));
  CHECK(parse_grassmann("e{3,1}", n) == Rational(-1) * b(0b101));  // multiplies out
  CHECK(parse_grassmann("e{1,1}", n).is_zero());
  CHECK(parse_grassmann("e{1}*e{2}", n) == b(0b011));
  CHECK(parse_grassmann("e{2}*e{1}", n) == Rational(-1) * b(0b011));
  CHECK(parse_grassmann("2*e{1} - 1/2*e{}", n) ==
        Rational(2) * b(0b001) - Rational(1, 2) * b(0b000));
  CHECK(parse_grassmann("0", n).is_zero());
  CHECK(parse_grassmann("e{1} - e{1}", n).is_zero());

  CHECK_THROWS_AS(parse_grassmann("e{0}", n), ParseError);
  CHECK_THROWS_AS(parse_grassmann("e{5}", n), ParseError);
  CHECK_THROWS_AS(parse_grassmann("e{1", n), ParseError);
  CHECK_THROWS_AS(parse_grassmann("y1", n), ParseError);

  // rendering round trip over all basis elements
  for (uint32_t m = 0; m < (uint32_t(1) << n); ++m)
    CHECK(parse_grassmann(to_string(b(m)), n) == b(m));
}
