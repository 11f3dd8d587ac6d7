#include "indsets/graph.hpp"

#include <algorithm>
#include <set>

#include "indsets/errors.hpp"

namespace indsets {

std::string_view interpretation_name(EdgeInterpretation e) {
  return e == EdgeInterpretation::literal ? "literal" : "algorithm";
}

std::optional<EdgeInterpretation> parse_interpretation(std::string_view name) {
  if (name == "literal") return EdgeInterpretation::literal;
  if (name == "algorithm" || name == "algorithm-consistent")
    return EdgeInterpretation::algorithm;
  return std::nullopt;
}

std::vector<std::vector<int>> ExplicitGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

namespace {

class EdgeSet {
 public:
  explicit EdgeSet(const ExplicitGraph& g) : g_(g) {}

  void add(int a, int b) {
    if (a == b) return;
    edges_.insert({std::min(a, b), std::max(a, b)});
  }
  void cycle(int level) {
    for (int i = 0; i < g_.ell; ++i)
      add(g_.vertex_id(level, i), g_.vertex_id(level, (i + 1) % g_.ell));
  }
  // Chords of K_ell: pairs at cyclic distance >= 2.
  void chords(int level) {
    for (int i = 0; i < g_.ell; ++i)
      for (int j = i + 2; j < g_.ell; ++j)
        if (!(i == 0 && j == g_.ell - 1))
          add(g_.vertex_id(level, i), g_.vertex_id(level, j));
  }
  void complete(int level) {
    cycle(level);
    chords(level);
  }
  std::vector<std::pair<int, int>> take() {
    return {edges_.begin(), edges_.end()};
  }

 private:
  const ExplicitGraph& g_;
  std::set<std::pair<int, int>> edges_;
};

}  // namespace

ExplicitGraph build_graph(const FamilySpec& spec, EdgeInterpretation interp) {
  spec.validate();
  ExplicitGraph g;
  g.ell = spec.ell;
  g.levels = spec.n;
  g.vertex_count = spec.ell * spec.n;
  const int n = spec.n;
  if (n == 0) return g;

  EdgeSet es(g);
  // Vertex i of level k+1 splits the edge {i, i+1} of level k.
  for (int k = 1; k < n; ++k)
    for (int i = 0; i < spec.ell; ++i) {
      es.add(g.vertex_id(k + 1, i), g.vertex_id(k, i));
      es.add(g.vertex_id(k + 1, i), g.vertex_id(k, (i + 1) % spec.ell));
    }

  const bool literal = interp == EdgeInterpretation::literal;
  switch (spec.family) {
    case Family::G:
      es.cycle(n);
      break;
    case Family::R:
      if (literal) {
        es.cycle(n);
        es.cycle(1);
      } else {
        for (int k = 1; k <= n; ++k) es.cycle(k);
      }
      break;
    case Family::K:
      es.cycle(n);
      if (literal) {
        for (int k = 1; k <= n; ++k) es.chords(k);
      } else {
        es.chords(n);
      }
      break;
    case Family::P:
      if (literal) {
        es.cycle(n);
        es.cycle(1);
        for (int k = 1; k <= n; ++k) es.chords(k);
      } else {
        for (int k = 1; k <= n; ++k) es.complete(k);
      }
      break;
  }
  g.edges = es.take();
  return g;
}

std::map<int, int> degree_profile(const ExplicitGraph& g) {
  std::vector<int> degree(g.vertex_count, 0);
  for (auto [a, b] : g.edges) {
    ++degree[a];
    ++degree[b];
  }
  std::map<int, int> hist;
  for (int d : degree) ++hist[d];
  return hist;
}

void write_dot(std::ostream& out, const ExplicitGraph& g,
               std::string_view name) {
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count; ++v)
    out << "  v" << v << " [label=\"" << (v / g.ell + 1) << ':' << (v % g.ell)
        << "\"];\n";
  for (auto [a, b] : g.edges) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
}

}  // namespace indsets
