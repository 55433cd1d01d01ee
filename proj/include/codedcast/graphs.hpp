#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_set>
#include <vector>

#include "codedcast/cache.hpp"
#include "codedcast/rng.hpp"

namespace codedcast {

/// Square bit matrix used for O(1) edge tests on small graphs.
class BitMatrix {
 public:
  BitMatrix() : n_(0), stride_(0) {}
  explicit BitMatrix(int n)
      : n_(n), stride_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * stride_, 0) {}

  int size() const { return n_; }
  void set(int i, int j) {
    bits_[static_cast<std::size_t>(i) * stride_ + j / 64] |= 1ull << (j % 64);
  }
  bool test(int i, int j) const {
    return (bits_[static_cast<std::size_t>(i) * stride_ + j / 64] >> (j % 64)) & 1u;
  }

 private:
  int n_;
  int stride_;
  std::vector<std::uint64_t> bits_;
};

/// Directed graph with sorted adjacency lists plus a bit matrix.
struct Digraph {
  int n = 0;
  std::vector<std::vector<int>> out;
  BitMatrix bits;

  Digraph() = default;
  explicit Digraph(int vertices) : n(vertices), out(vertices), bits(vertices) {}

  void add_edge(int i, int j) {
    out[i].push_back(j);
    bits.set(i, j);
  }
  bool has_edge(int i, int j) const { return bits.test(i, j); }
  long long edge_count() const;
};

/// Undirected graph (symmetric adjacency).
struct Ugraph {
  int n = 0;
  BitMatrix adj;
  std::vector<int> degree;
  long long edges = 0;

  Ugraph() = default;
  explicit Ugraph(int vertices) : n(vertices), adj(vertices), degree(vertices, 0) {}

  void add_edge(int i, int j) {
    adj.set(i, j);
    adj.set(j, i);
    ++degree[i];
    ++degree[j];
    ++edges;
  }
  bool has_edge(int i, int j) const { return adj.test(i, j); }
};

/// Directed graph over the currently requesting terminals: an edge i -> j
/// means vertex i requests a content that vertex j has cached. Vertices are
/// local indices; `request` and `side_info` carry the instance data.
struct DependencyGraph {
  int n = 0;
  std::vector<int> request;                         // rank per vertex
  std::vector<std::unordered_set<int>> side_info;   // cached ranks per vertex
  Digraph graph;
};

/// Build the dependency graph from per-vertex requests and cached-content
/// sets (edge i->j iff request[i] is in side_info[j], i != j).
DependencyGraph build_dependency_graph(const std::vector<int>& requests,
                                       std::vector<std::unordered_set<int>> side_info);

/// Mutual-edge core: undirected edge (i,j) iff both i->j and j->i.
Ugraph bidirected_core(const Digraph& g);

/// Complement of the bidirected core: vertices conflict unless they are
/// mutually connected in the dependency graph. Proper colorings of this
/// graph are clique partitions of the core.
struct ConflictGraph {
  int n = 0;
  BitMatrix adj;
  std::vector<int> degree;

  ConflictGraph() = default;
  explicit ConflictGraph(const Ugraph& conflicts);  // adopts edges as-is
  bool has_edge(int i, int j) const { return adj.test(i, j); }
};

ConflictGraph conflict_graph(const DependencyGraph& dep);

/// Erdos-Renyi style generators; every ordered pair (directed) or unordered
/// pair (undirected) gets an edge independently with probability p.
Digraph random_directed_graph(int n, double p, Rng& rng);
Ugraph random_undirected_graph(int n, double p, Rng& rng);

/// Dependency instance realizing an arbitrary digraph: vertex i requests
/// rank i+1 and caches exactly the requests of its in-neighbors, so the
/// Def.-style edge predicate reproduces the input graph.
DependencyGraph dependency_from_digraph(const Digraph& g);

/// Edge-list dumps: header line `# n=<n> directed|undirected`, then one
/// `src dst` pair per line (undirected lists each edge once, i < j).
void dump_edge_list(std::ostream& os, const Digraph& g);
void dump_edge_list(std::ostream& os, const Ugraph& g);

}  // namespace codedcast
