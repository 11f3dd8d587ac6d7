#include <doctest.h>

#include <vector>

#include "indsets/errors.hpp"
#include "indsets/genfunc.hpp"
#include "indsets/transfer.hpp"

using namespace indsets;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("series expansion") {
  CHECK(series_of(RationalGF({1}, {1, -4, 2}), 4) == ints({1, 4, 14, 48, 164}));
  CHECK(series_of(RationalGF({1, 2}, {1, -2, -2}), 5) ==
        ints({1, 4, 10, 28, 76, 208}));
  CHECK(series_of(RationalGF({1}, {1, -1}), 3) == ints({1, 1, 1, 1}));
  CHECK_THROWS_AS(series_of(IntPolynomial{1}, IntPolynomial{2, -1}, 3),
                  InvalidArgument);
}

TEST_CASE("canonical form") {
  // (1+x)/((1+x)(1-x)) reduces to 1/(1-x).
  const RationalGF reduced({1, 1}, IntPolynomial{1, 1} * IntPolynomial{1, -1});
  CHECK(reduced.num() == IntPolynomial{1});
  CHECK(reduced.den() == IntPolynomial{1, -1});
  CHECK(RationalGF({-2}, {-2, 2}) == RationalGF({1}, {1, -1}));
  CHECK(RationalGF({}, {5, 1}).den() == IntPolynomial{1});
  CHECK_THROWS_AS(RationalGF({1}, {}), InvalidArgument);
  CHECK_THROWS_AS(RationalGF({1}, {2, 1}), InvalidArgument);
  CHECK(RationalGF({1, 2}, {1, -2, -2}).to_string() == "(1+2x)/(1-2x-2x^2)");
  CHECK(parse_gf("(1+2x)/(1-3x-2x^2)") == p_gf(4));
  CHECK_THROWS_AS(parse_gf("1+2x/(1-x)"), InvalidArgument);
}

TEST_CASE("minimal recurrences") {
  CHECK(min_recurrence(ints({1, 4, 14, 48, 164, 560, 1912, 6528})) ==
        IntPolynomial{1, -4, 2});
  CHECK(min_recurrence(ints({1, 4, 10, 28, 76, 208, 568, 1552, 4240})) ==
        IntPolynomial{1, -2, -2});
  CHECK(min_recurrence(ints({1, 1, 1, 1, 1, 1})) == IntPolynomial{1, -1});
  CHECK(min_recurrence(ints({0, 0, 0, 0})) == IntPolynomial{1});
  // 1, 2, 4, 8 followed by a break needs more terms than given.
  CHECK_THROWS_AS(min_recurrence(ints({1, 2, 4, 8, 16, 33})),
                  NoCertifiedRecurrence);
  CHECK_THROWS_AS(min_recurrence(ints({1, 2, 3})), NoCertifiedRecurrence);
}

TEST_CASE("minimal recurrence recovers random rational series") {
  // Denominators with unit constant term and random numerators.
  const IntPolynomial dens[] = {{1, -3, 1}, {1, 2, -5, 1}, {1, 0, 0, -2},
                                {1, -1, -1}};
  const IntPolynomial nums[] = {{1}, {2, -1, 4}, {1, 1, 1, 1, 1}, {0, 3}};
  for (const auto& d : dens)
    for (const auto& n : nums) {
      const RationalGF gf(n, d);
      const int order = std::max(gf.den().degree(), gf.num().degree() + 1);
      const auto s = series_of(gf, 2 * order + 5);
      CHECK(min_recurrence(s) == gf.den());
    }
}

TEST_CASE("generating functions from transfer matrices") {
  CHECK(gf_from_transfer(Family::G, 3) == RationalGF({1}, {1, -4, 2}));
  CHECK(gf_from_transfer(Family::G, 4) ==
        RationalGF({1, 4, -1, -2}, {1, -3, -14, 15, 7}));
  CHECK(gf_from_transfer(Family::R, 6) ==
        RationalGF({1, 12, -24, 0, 8},
                   IntPolynomial{1, -8, 4, 4} * IntPolynomial{1, 2, -2}));
}

TEST_CASE("tabulated generating functions") {
  CHECK(paper_gf(Family::K, 6) ==
        RationalGF({1, -1, 38, -72, -8, 30},
                   {1, -8, -66, 280, 178, -532, -84, 108}));
  CHECK(paper_gf(Family::G, 6) ==
        RationalGF({1, 10, -12, -50, 10, 20, -12},
                   {1, -8, -66, 280, 178, -532, -84, 108}));
  CHECK(paper_gf(Family::P, 7) == RationalGF({1, 2}, {1, -6, -2}));
  CHECK(paper_gf(Family::G, 5).num() == IntPolynomial{1, 6, -3, -8});
  CHECK_THROWS_AS(paper_gf(Family::G, 7), NotInTable);
  CHECK_THROWS_AS(paper_gf(Family::R, 2), NotInTable);
}

TEST_CASE("computed and tabulated generating functions agree") {
  for (Family f : {Family::G, Family::R, Family::K})
    for (int ell = 3; ell <= 6; ++ell) {
      CAPTURE(ell);
      const RationalGF computed = gf_from_transfer(f, ell);
      const RationalGF table = paper_gf(f, ell);
      CHECK(computed == table);
      CHECK(series_of(computed, 39) == series_of(table, 39));
      CHECK(series_of(table, 39) == count_series(f, ell, 39));
      CHECK(computed.den()[0] == 1);
    }
}

TEST_CASE("P family generating function") {
  CHECK(p_gf(3) == RationalGF({1, 2}, {1, -2, -2}));
  CHECK(p_gf(4) == RationalGF({1, 2}, {1, -3, -2}));
  CHECK(series_of(p_gf(4), 5) == ints({1, 5, 17, 61, 217, 773}));
  CHECK_THROWS_AS(p_gf(2), InvalidSpec);
  for (int ell = 3; ell <= 12; ++ell) {
    CHECK(series_of(p_gf(ell), 20) == count_series(Family::P, ell, 20));
    CHECK(gf_from_transfer(Family::P, ell) == p_gf(ell));
    CHECK(verify_p_first_column(ell));
  }
}

TEST_CASE("rational function arithmetic") {
  const RationalFunction half{{1}, {2}};
  const RationalFunction third{{1}, {3}};
  CHECK(half + third == RationalFunction{{5}, {6}});
  CHECK(half - third == RationalFunction{{1}, {6}});
  CHECK(half * third == RationalFunction{{2}, {12}});
  CHECK_FALSE(half == third);
}
