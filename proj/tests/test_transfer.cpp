#include <doctest.h>

#include <functional>
#include <vector>

#include "indsets/errors.hpp"
#include "indsets/transfer.hpp"

using namespace indsets;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) {
  return {v.begin(), v.end()};
}

// Counts chains v_1 .. v_n of collection members with each consecutive pair
// compatible and the last one accepted, by explicit recursion.
BigInt count_chains(Family f, int ell, int n) {
  const auto vs = level_vectors(f, ell);
  std::function<BigInt(std::size_t, int)> go = [&](std::size_t last,
                                                   int remaining) -> BigInt {
    if (remaining == 0) return accepts(f, vs[last]) ? 1 : 0;
    BigInt total = 0;
    for (std::size_t next = 0; next < vs.size(); ++next)
      if (compatible(vs[last], vs[next])) total += go(next, remaining - 1);
    return total;
  };
  if (n == 0) return 1;
  BigInt total = 0;
  for (std::size_t first = 0; first < vs.size(); ++first)
    total += go(first, n - 1);
  return total;
}

}  // namespace

TEST_CASE("G_3 transfer matrix") {
  const std::vector<std::vector<int>> expected{
      {1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 0, 0, 1, 0, 0, 0},
      {1, 1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0}};
  CHECK(build_transfer(Family::G, 3).dense() == expected);
  CHECK(build_transfer(Family::K, 3).dense() == expected);
}

TEST_CASE("R_3 transfer matrix") {
  CHECK(build_transfer(Family::R, 3).dense() ==
        std::vector<std::vector<int>>{
            {1, 1, 1, 1}, {1, 0, 0, 1}, {1, 1, 0, 0}, {1, 0, 1, 0}});
}

TEST_CASE("P transfer matrix structure") {
  for (int ell = 3; ell <= 10; ++ell) {
    const auto m = build_transfer(Family::P, ell);
    REQUIRE(m.dim() == static_cast<std::size_t>(ell + 1));
    const auto& order = m.index_order();
    for (std::size_t r = 0; r < m.dim(); ++r) {
      CHECK(m.entry(0, r) == 1);
      CHECK(m.entry(r, 0) == 1);
    }
    // Row of e_i has zeros exactly at e_{i-1} and e_i.
    for (std::size_t r = 1; r < m.dim(); ++r)
      for (std::size_t c = 1; c < m.dim(); ++c) {
        int i = 0, j = 0;
        for (int p = 0; p < ell; ++p) {
          if (order[r].at(p)) i = p;
          if (order[c].at(p)) j = p;
        }
        const bool blocked = j == i || j == (i + ell - 1) % ell;
        CHECK(m.entry(r, c) == (blocked ? 0 : 1));
      }
  }
}

TEST_CASE("apply agrees with the dense product") {
  for (Family f : kAllFamilies)
    for (int ell = 3; ell <= 6; ++ell) {
      const auto m = build_transfer(f, ell);
      const auto dense = m.dense();
      std::vector<BigInt> x(m.dim());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = (7 * i + 3) % 11;
      const auto y = m.apply(x);
      for (std::size_t r = 0; r < m.dim(); ++r) {
        BigInt expect = 0;
        for (std::size_t c = 0; c < m.dim(); ++c) expect += dense[r][c] * x[c];
        CHECK(y[r] == expect);
      }
    }
}

TEST_CASE("counts") {
  CHECK(count({Family::G, 3, 5}) == 560);
  CHECK(count({Family::R, 3, 3}) == 28);
  CHECK(count({Family::P, 4, 5}) == 773);
  for (Family f : kAllFamilies)
    for (int ell = 3; ell <= 8; ++ell) CHECK(count({f, ell, 0}) == 1);
}

TEST_CASE("count series") {
  CHECK(count_series(Family::K, 3, 4) == ints({1, 4, 14, 48, 164}));
  CHECK(count_series(Family::K, 4, 2) == ints({1, 5, 32}));
  CHECK(count_series(Family::P, 3, 3) == ints({1, 4, 10, 28}));
  CHECK_THROWS_AS(count_series(Family::G, 3, -1), InvalidArgument);
  CHECK_THROWS_AS(count_series(Family::G, 17, 1), ResourceError);
}

TEST_CASE("counts equal chain enumeration") {
  for (Family f : kAllFamilies)
    for (int ell = 3; ell <= 7; ++ell) {
      if (level_vectors(f, ell).size() > 8) continue;
      const auto series = count_series(f, ell, 5);
      for (int n = 0; n <= 5; ++n) CHECK(series[n] == count_chains(f, ell, n));
    }
}

TEST_CASE("series properties") {
  for (Family f : kAllFamilies)
    for (int ell = 3; ell <= 6; ++ell) {
      const auto longer = count_series(f, ell, 12);
      const auto shorter = count_series(f, ell, 7);
      CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
      for (int n = 0; n + 1 < static_cast<int>(longer.size()); ++n)
        CHECK(longer[n + 1] > longer[n]);
      CHECK(count({f, ell, 5}) == longer[5]);
    }
  CHECK(count_series(Family::K, 3, 20) == count_series(Family::G, 3, 20));
  CHECK(count_series(Family::P, 3, 20) == count_series(Family::R, 3, 20));
}

TEST_CASE("one level counts the base graph") {
  long long prev = 3, lucas = 4;  // L_2, L_3
  for (int ell = 3; ell <= 12; ++ell) {
    CHECK(count({Family::G, ell, 1}) == lucas);
    CHECK(count({Family::R, ell, 1}) == lucas);
    CHECK(count({Family::K, ell, 1}) == ell + 1);
    CHECK(count({Family::P, ell, 1}) == ell + 1);
    const long long next = prev + lucas;
    prev = lucas;
    lucas = next;
  }
}
