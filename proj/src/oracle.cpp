#include "indsets/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "indsets/errors.hpp"
#include "indsets/transfer.hpp"

namespace indsets {

namespace {

std::vector<std::uint64_t> neighbor_masks(const ExplicitGraph& g) {
  std::vector<std::uint64_t> masks(g.vertex_count, 0);
  for (auto [a, b] : g.edges) {
    masks[a] |= std::uint64_t{1} << b;
    masks[b] |= std::uint64_t{1} << a;
  }
  return masks;
}

std::uint64_t branch(std::uint64_t remaining,
                     const std::vector<std::uint64_t>& nbr) {
  if (remaining == 0) return 1;
  int pick = -1;
  int best = 0;
  for (std::uint64_t rest = remaining; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int deg = std::popcount(nbr[v] & remaining);
    if (deg > best) {
      best = deg;
      pick = v;
    }
  }
  if (pick < 0) return std::uint64_t{1} << std::popcount(remaining);
  const std::uint64_t bit = std::uint64_t{1} << pick;
  return branch(remaining & ~bit, nbr) +
         branch(remaining & ~(bit | nbr[pick]), nbr);
}

}  // namespace

BigInt count_by_subsets(const ExplicitGraph& g) {
  if (g.vertex_count > kSubsetEnumerationMaxVertices)
    throw ResourceError("subset enumeration limited to " +
                        std::to_string(kSubsetEnumerationMaxVertices) +
                        " vertices, graph has " +
                        std::to_string(g.vertex_count));
  const auto nbr = neighbor_masks(g);
  const std::uint64_t total = std::uint64_t{1} << g.vertex_count;
  std::uint64_t independent = 0;
  for (std::uint64_t subset = 0; subset < total; ++subset) {
    bool ok = true;
    for (std::uint64_t rest = subset; rest && ok; rest &= rest - 1)
      ok = (nbr[std::countr_zero(rest)] & subset) == 0;
    independent += ok;
  }
  return independent;
}

BigInt count_by_branching(const ExplicitGraph& g) {
  if (g.vertex_count > kBranchingMaxVertices)
    throw ResourceError("branching count limited to " +
                        std::to_string(kBranchingMaxVertices) +
                        " vertices, graph has " +
                        std::to_string(g.vertex_count));
  const std::uint64_t all =
      g.vertex_count == 0 ? 0 : (~std::uint64_t{0} >> (64 - g.vertex_count));
  return branch(all, neighbor_masks(g));
}

BigInt count_independent_sets(const ExplicitGraph& g) {
  BigInt by_branching = count_by_branching(g);
  if (g.vertex_count <= kSubsetEnumerationMaxVertices) {
    const BigInt by_subsets = count_by_subsets(g);
    if (by_subsets != by_branching)
      throw std::logic_error("oracle paths disagree: subsets " +
                             by_subsets.str() + ", branching " +
                             by_branching.str());
  }
  return by_branching;
}

OracleReport compare(const FamilySpec& spec, EdgeInterpretation interp) {
  OracleReport r{spec, interp, 0, 0, false};
  r.oracle_count = count_independent_sets(build_graph(spec, interp));
  r.transfer_count = count(spec);
  r.agree = r.oracle_count == r.transfer_count;
  return r;
}

}  // namespace indsets
