#include <doctest.h>

#include <cmath>
#include <sstream>

#include "codedcast/graphs.hpp"

using namespace codedcast;

namespace {

// N1 wants M3 holding {M1,M4}; N2 wants M1 holding {M3,M4}; N5 wants M4
// holding {M1,M3}: every ordered pair is an edge.
DependencyGraph example_instance() {
  return build_dependency_graph({3, 1, 4},
                                {{1, 4}, {3, 4}, {1, 3}});
}

}  // namespace

TEST_CASE("dependency graph of the worked example is fully bidirected") {
  const DependencyGraph dep = example_instance();
  CHECK(dep.graph.edge_count() == 6);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) CHECK(dep.graph.has_edge(i, j));
    }
  }
}

TEST_CASE("dependency graph: empty caches and a 2-cycle") {
  const DependencyGraph none = build_dependency_graph({1, 2, 3}, {{}, {}, {}});
  CHECK(none.graph.edge_count() == 0);

  const DependencyGraph pair = build_dependency_graph({1, 2}, {{2}, {1}});
  CHECK(pair.graph.has_edge(0, 1));
  CHECK(pair.graph.has_edge(1, 0));
  CHECK(pair.graph.edge_count() == 2);
}

TEST_CASE("dependency edges match the membership predicate on random instances") {
  Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(20));
    std::vector<int> requests(n);
    std::vector<std::unordered_set<int>> side(n);
    for (int i = 0; i < n; ++i) {
      requests[i] = 1 + static_cast<int>(rng.below(15));
      const int items = static_cast<int>(rng.below(6));
      for (int t = 0; t < items; ++t) side[i].insert(1 + static_cast<int>(rng.below(15)));
    }
    const DependencyGraph dep = build_dependency_graph(requests, side);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const bool expected = i != j && side[j].count(requests[i]) != 0;
        CHECK(dep.graph.has_edge(i, j) == expected);
      }
    }
  }
}

TEST_CASE("conflict graph: complement of the bidirected core") {
  const ConflictGraph triangle = conflict_graph(example_instance());
  for (int i = 0; i < 3; ++i) CHECK(triangle.degree[i] == 0);

  const DependencyGraph none = build_dependency_graph({1, 2, 3}, {{}, {}, {}});
  const ConflictGraph complete = conflict_graph(none);
  for (int i = 0; i < 3; ++i) CHECK(complete.degree[i] == 2);

  // one-directional edges do not license joint coding
  DependencyGraph oneway = build_dependency_graph({1, 2, 3}, {{}, {1}, {}});
  CHECK(oneway.graph.has_edge(0, 1));
  const ConflictGraph cg = conflict_graph(oneway);
  for (int i = 0; i < 3; ++i) CHECK(cg.degree[i] == 2);
}

TEST_CASE("conflict graph is the set complement of the core on random instances") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Digraph g = random_directed_graph(40, 0.25, rng);
    const DependencyGraph dep = dependency_from_digraph(g);
    const Ugraph core = bidirected_core(dep.graph);
    const ConflictGraph cg = conflict_graph(dep);
    for (int i = 0; i < 40; ++i) {
      for (int j = 0; j < 40; ++j) {
        if (i == j) continue;
        CHECK(cg.has_edge(i, j) == !core.has_edge(i, j));
      }
    }
  }
}

TEST_CASE("random_directed_graph: degenerate probabilities") {
  Rng rng(1);
  CHECK(random_directed_graph(20, 0.0, rng).edge_count() == 0);
  CHECK(random_directed_graph(20, 1.0, rng).edge_count() == 20 * 19);
}

TEST_CASE("random_directed_graph: mean edge count within 2%") {
  const int n = 200;
  const double p = 0.3;
  double total = 0.0;
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    total += static_cast<double>(random_directed_graph(n, p, rng).edge_count());
  }
  const double mean = total / 100.0;
  const double expected = n * (n - 1) * p;
  CHECK(std::abs(mean - expected) / expected < 0.02);
}

TEST_CASE("bidirected_core: degenerate graphs") {
  Rng rng(2);
  const Digraph complete = random_directed_graph(10, 1.0, rng);
  CHECK(bidirected_core(complete).edges == 45);

  Digraph oneway(2);
  oneway.add_edge(0, 1);
  CHECK(bidirected_core(oneway).edges == 0);
}

TEST_CASE("bidirected core of directed G(n,p) has density near p squared") {
  const int n = 300;
  const double p = 0.3;
  double total = 0.0;
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(derive_seed(9, seed));
    total += static_cast<double>(bidirected_core(random_directed_graph(n, p, rng)).edges);
  }
  const double density = total / 100.0 / (n * (n - 1) / 2.0);
  CHECK(std::abs(density - p * p) / (p * p) < 0.05);
}

TEST_CASE("dependency_from_digraph reproduces the input graph") {
  Rng rng(4);
  const Digraph g = random_directed_graph(30, 0.2, rng);
  const DependencyGraph dep = dependency_from_digraph(g);
  CHECK(dep.graph.edge_count() == g.edge_count());
  for (int i = 0; i < 30; ++i) {
    for (int j = 0; j < 30; ++j) {
      if (i != j) CHECK(dep.graph.has_edge(i, j) == g.has_edge(i, j));
    }
  }
}

TEST_CASE("edge list dumps") {
  Digraph g(3);
  g.add_edge(0, 2);
  g.add_edge(2, 0);
  std::ostringstream os;
  dump_edge_list(os, g);
  CHECK(os.str() == "# n=3 directed\n0 2\n2 0\n");

  Ugraph u(3);
  u.add_edge(1, 2);
  std::ostringstream os2;
  dump_edge_list(os2, u);
  CHECK(os2.str() == "# n=3 undirected\n1 2\n");
}
