#pragma once

#include "indsets/bigint.hpp"
#include "indsets/family.hpp"
#include "indsets/graph.hpp"

namespace indsets {

inline constexpr int kSubsetEnumerationMaxVertices = 26;
inline constexpr int kBranchingMaxVertices = 40;

/// Independent sets (including the empty set) by plain subset enumeration.
/// Throws ResourceError above kSubsetEnumerationMaxVertices.
BigInt count_by_subsets(const ExplicitGraph& g);

/// Independent sets by I(G) = I(G - v) + I(G - N[v]).
/// Throws ResourceError above kBranchingMaxVertices.
BigInt count_by_branching(const ExplicitGraph& g);

/// Uses both paths when the graph is small enough for subset enumeration and
/// throws std::logic_error if they disagree; otherwise branching only.
BigInt count_independent_sets(const ExplicitGraph& g);

struct OracleReport {
  FamilySpec spec;
  EdgeInterpretation interpretation;
  BigInt oracle_count;
  BigInt transfer_count;
  bool agree;
};

OracleReport compare(const FamilySpec& spec, EdgeInterpretation interp);

}  // namespace indsets
