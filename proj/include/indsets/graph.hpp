#pragma once

#include <map>
#include <ostream>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "indsets/family.hpp"

namespace indsets {

/// How the intra-level edges of R, K and P are laid out.
///
/// `literal` follows the recursive graph definitions (extra cycle edges only
/// on the base level, chords of K_ell on every level). `algorithm` builds the
/// graph whose independent sets the level-vector transfer matrices count
/// (cycle edges on every level for R, a complete graph on the innermost
/// level for K, complete graphs on every level for P). For G the two agree.
enum class EdgeInterpretation { literal, algorithm };

std::string_view interpretation_name(EdgeInterpretation e);
std::optional<EdgeInterpretation> parse_interpretation(std::string_view name);

/// Simple undirected graph on vertices 0..vertex_count-1. Level k (1-based,
/// level 1 outermost) position i (0-based) has id (k-1)*ell + i.
struct ExplicitGraph {
  int ell = 0;
  int levels = 0;
  int vertex_count = 0;
  /// Sorted, each pair (a, b) with a < b, no duplicates.
  std::vector<std::pair<int, int>> edges;

  int vertex_id(int level, int position) const {
    return (level - 1) * ell + position;
  }
  std::vector<std::vector<int>> adjacency() const;
};

ExplicitGraph build_graph(const FamilySpec& spec, EdgeInterpretation interp);

/// Degree -> number of vertices with that degree.
std::map<int, int> degree_profile(const ExplicitGraph& g);

/// Graphviz export: one node per vertex labelled "k:i", one line per edge.
void write_dot(std::ostream& out, const ExplicitGraph& g,
               std::string_view name = "G");

}  // namespace indsets
