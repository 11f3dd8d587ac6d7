#include <doctest.h>

#include <random>

#include "indsets/errors.hpp"
#include "indsets/polynomial.hpp"

using namespace indsets;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-20, 20);
  std::vector<BigInt> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("canonical degree") {
  CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{1, -1} + IntPolynomial{-1, 1} == IntPolynomial{});
}

TEST_CASE("multiplication") {
  CHECK(IntPolynomial{1, -4, 2} * IntPolynomial{1, 2} == IntPolynomial{1, -2, -6, 4});
  CHECK((IntPolynomial{1, -8, 4, 4} * IntPolynomial{1, 2, -2}) ==
        IntPolynomial{1, -6, -14, 28, 0, -8});
  CHECK((IntPolynomial{3} * IntPolynomial{}).is_zero());
}

TEST_CASE("formatting") {
  CHECK(IntPolynomial{1, -4, 2}.to_string() == "1-4x+2x^2");
  CHECK(IntPolynomial{1, 2}.to_string() == "1+2x");
  CHECK(IntPolynomial{0, -1, 0, 3}.to_string() == "-x+3x^3");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{-7}.to_string() == "-7");
}

TEST_CASE("parsing") {
  CHECK(parse_polynomial("1-4x+2x^2") == IntPolynomial{1, -4, 2});
  CHECK(parse_polynomial(" -x + 3*x^3 ") == IntPolynomial{0, -1, 0, 3});
  CHECK(parse_polynomial("0") == IntPolynomial{});
  CHECK(parse_polynomial("x^2+x^2") == IntPolynomial{0, 0, 2});
  CHECK_THROWS_AS(parse_polynomial(""), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial("1+"), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial("2x3"), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial("1+y"), InvalidArgument);
}

TEST_CASE("format and parse are inverse") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_poly(rng, 8);
    CHECK(parse_polynomial(p.to_string()) == p);
  }
}

TEST_CASE("content and primitive part") {
  const IntPolynomial p{6, -4, 10};
  CHECK(p.content() == 2);
  CHECK(p.primitive_part() == IntPolynomial{3, -2, 5});
  CHECK(IntPolynomial{}.content() == 0);
}

TEST_CASE("exact division") {
  const IntPolynomial a{1, -4, 2}, b{1, 2};
  CHECK(divide_exact(a * b, b) == a);
  CHECK(divide_exact(a * b * BigInt(3), IntPolynomial{3}) == a * b);
  CHECK_THROWS_AS(divide_exact(a, b), InvalidArgument);
  CHECK_THROWS_AS(divide_exact(a, IntPolynomial{}), InvalidArgument);
  CHECK_THROWS_AS(divide_exact(IntPolynomial{1, 1}, IntPolynomial{0, 2}),
                  InvalidArgument);
}

TEST_CASE("gcd over the rationals") {
  const IntPolynomial f{1, 2, -2};
  const IntPolynomial g{1, -8, 4, 4};
  CHECK(gcd(f * g, f * IntPolynomial{1, 1}) == f * BigInt(-1));  // leading > 0
  CHECK(gcd(IntPolynomial{2, 4}, IntPolynomial{3, 6}) == IntPolynomial{1, 2});
  CHECK(gcd(g, f).degree() == 0);
  CHECK(gcd(IntPolynomial{}, IntPolynomial{}).is_zero());
  CHECK(gcd(f, IntPolynomial{}) == f * BigInt(-1));
}

TEST_CASE("gcd divides both arguments") {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto common = random_poly(rng, 3);
    if (common.is_zero()) continue;
    const auto a = common * random_poly(rng, 4);
    const auto b = common * random_poly(rng, 4);
    if (a.is_zero() || b.is_zero()) continue;
    const auto g = gcd(a, b);
    CHECK(pseudo_remainder(a, g).is_zero());
    CHECK(pseudo_remainder(b, g).is_zero());
    CHECK(g.degree() >= common.degree());
  }
}
