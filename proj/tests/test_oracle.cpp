#include <doctest.h>

#include <random>
#include <set>

#include "indsets/errors.hpp"
#include "indsets/oracle.hpp"
#include "indsets/transfer.hpp"

using namespace indsets;

namespace {

ExplicitGraph random_graph(std::mt19937& rng, int vertices, double density) {
  ExplicitGraph g;
  g.ell = std::max(vertices, 1);
  g.levels = vertices ? 1 : 0;
  g.vertex_count = vertices;
  std::bernoulli_distribution edge(density);
  for (int a = 0; a < vertices; ++a)
    for (int b = a + 1; b < vertices; ++b)
      if (edge(rng)) g.edges.emplace_back(a, b);
  return g;
}

ExplicitGraph path_graph(int vertices) {
  ExplicitGraph g;
  g.ell = vertices;
  g.levels = 1;
  g.vertex_count = vertices;
  for (int v = 0; v + 1 < vertices; ++v) g.edges.emplace_back(v, v + 1);
  return g;
}

}  // namespace

TEST_CASE("small graphs") {
  CHECK(count_independent_sets(build_graph({Family::G, 3, 1},
                                           EdgeInterpretation::literal)) == 4);
  CHECK(count_independent_sets(build_graph({Family::G, 3, 2},
                                           EdgeInterpretation::literal)) == 14);
  CHECK(count_independent_sets(ExplicitGraph{}) == 1);
  // Paths count Fibonacci numbers: P_10 has F_12 = 144.
  CHECK(count_independent_sets(path_graph(10)) == 144);
}

TEST_CASE("both counting paths agree on random graphs") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> size(0, 20);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_graph(rng, size(rng), density(rng));
    CHECK(count_by_subsets(g) == count_by_branching(g));
  }
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(count_by_subsets(path_graph(27)), ResourceError);
  CHECK_THROWS_AS(count_by_branching(path_graph(41)), ResourceError);
  CHECK_THROWS_AS(count_independent_sets(path_graph(41)), ResourceError);
  // Above the subset cap only branching runs. F_42 = 267914296.
  CHECK(count_independent_sets(path_graph(40)) == 267914296);
}

TEST_CASE("G graphs match the transfer count") {
  for (int ell = 3; ell <= 5; ++ell)
    for (int n = 1; n <= 4 && ell * n <= 20; ++n)
      for (auto interp : {EdgeInterpretation::literal, EdgeInterpretation::algorithm}) {
        const auto r = compare({Family::G, ell, n}, interp);
        CHECK(r.agree);
        CHECK(r.oracle_count == r.transfer_count);
      }
}

TEST_CASE("algorithm-consistent graphs match the transfer count") {
  for (Family f : kAllFamilies)
    for (int ell = 3; ell <= 4; ++ell)
      for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        CHECK(compare({f, ell, n}, EdgeInterpretation::algorithm).agree);
      }
}

TEST_CASE("literal graphs") {
  const auto g3 = compare({Family::G, 3, 3}, EdgeInterpretation::literal);
  CHECK(g3.agree);
  CHECK(g3.oracle_count == 48);

  const auto r3 = compare({Family::R, 3, 3}, EdgeInterpretation::algorithm);
  CHECK(r3.agree);
  CHECK(r3.transfer_count == 28);

  // The doubled base cycle alone does not constrain the middle levels the
  // way the transfer algorithm does.
  const auto lit = compare({Family::R, 3, 3}, EdgeInterpretation::literal);
  CHECK(lit.transfer_count == 28);
  CHECK(lit.oracle_count == 32);
  CHECK_FALSE(lit.agree);

  for (int ell = 3; ell <= 5; ++ell)
    for (int n = 1; n <= 2; ++n)
      CHECK(compare({Family::R, ell, n}, EdgeInterpretation::literal).agree);
  CHECK(compare({Family::R, 3, 2}, EdgeInterpretation::literal).oracle_count == 10);

  // K_4 keeps its chords on the base level; the transfer count ignores them.
  const auto k42 = compare({Family::K, 4, 2}, EdgeInterpretation::literal);
  CHECK(k42.oracle_count == 25);
  CHECK(k42.transfer_count == 32);
}
