#include "codedcast/graphs.hpp"

#include <ostream>

namespace codedcast {

long long Digraph::edge_count() const {
  long long total = 0;
  for (const auto& row : out) total += static_cast<long long>(row.size());
  return total;
}

DependencyGraph build_dependency_graph(const std::vector<int>& requests,
                                       std::vector<std::unordered_set<int>> side_info) {
  const int n = static_cast<int>(requests.size());
  DependencyGraph dep;
  dep.n = n;
  dep.request = requests;
  dep.side_info = std::move(side_info);
  dep.graph = Digraph(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && dep.side_info[j].count(requests[i]) != 0) {
        dep.graph.add_edge(i, j);
      }
    }
  }
  return dep;
}

Ugraph bidirected_core(const Digraph& g) {
  Ugraph core(g.n);
  for (int i = 0; i < g.n; ++i) {
    for (int j : g.out[i]) {
      if (j > i && g.has_edge(j, i)) core.add_edge(i, j);
    }
  }
  return core;
}

ConflictGraph::ConflictGraph(const Ugraph& conflicts)
    : n(conflicts.n), adj(conflicts.adj), degree(conflicts.degree) {}

ConflictGraph conflict_graph(const DependencyGraph& dep) {
  const Ugraph core = bidirected_core(dep.graph);
  Ugraph complement(dep.n);
  for (int i = 0; i < dep.n; ++i) {
    for (int j = i + 1; j < dep.n; ++j) {
      if (!core.has_edge(i, j)) complement.add_edge(i, j);
    }
  }
  return ConflictGraph(complement);
}

Digraph random_directed_graph(int n, double p, Rng& rng) {
  Digraph g(n);
  if (p <= 0.0) return g;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p >= 1.0 || rng.bernoulli(p)) g.add_edge(i, j);
      if (p >= 1.0 || rng.bernoulli(p)) g.add_edge(j, i);
    }
  }
  return g;
}

Ugraph random_undirected_graph(int n, double p, Rng& rng) {
  Ugraph g(n);
  if (p <= 0.0) return g;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p >= 1.0 || rng.bernoulli(p)) g.add_edge(i, j);
    }
  }
  return g;
}

DependencyGraph dependency_from_digraph(const Digraph& g) {
  std::vector<int> requests(g.n);
  std::vector<std::unordered_set<int>> side(g.n);
  for (int i = 0; i < g.n; ++i) requests[i] = i + 1;
  for (int i = 0; i < g.n; ++i) {
    for (int j : g.out[i]) side[j].insert(i + 1);
  }
  return build_dependency_graph(requests, std::move(side));
}

void dump_edge_list(std::ostream& os, const Digraph& g) {
  os << "# n=" << g.n << " directed\n";
  for (int i = 0; i < g.n; ++i) {
    for (int j : g.out[i]) os << i << ' ' << j << '\n';
  }
}

void dump_edge_list(std::ostream& os, const Ugraph& g) {
  os << "# n=" << g.n << " undirected\n";
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (g.has_edge(i, j)) os << i << ' ' << j << '\n';
    }
  }
}

}  // namespace codedcast
