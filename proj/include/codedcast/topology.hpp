#pragma once

#include <iosfwd>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "codedcast/rng.hpp"

namespace codedcast {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr int kUnreachable = -1;
inline constexpr int kMiss = -1;

/// Disk cell with unit-disk connectivity. Node ids cover helpers first
/// ([0, k)) then terminals ([k, k+n)); adjacency lists are sorted so every
/// traversal is deterministic.
class Topology {
 public:
  static Topology make(double cell_radius, double tx_range,
                       std::vector<Point> helpers, std::vector<Point> uts);

  double cell_radius() const { return cell_radius_; }
  double tx_range() const { return tx_range_; }
  int helper_count() const { return static_cast<int>(helpers_.size()); }
  int ut_count() const { return static_cast<int>(uts_.size()); }
  int node_count() const { return helper_count() + ut_count(); }

  const std::vector<Point>& helper_positions() const { return helpers_; }
  const std::vector<Point>& ut_positions() const { return uts_; }

  int ut_node(int ut_index) const { return helper_count() + ut_index; }
  const std::vector<int>& neighbors(int node) const { return adjacency_[node]; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

 private:
  double cell_radius_ = 0.0;
  double tx_range_ = 0.0;
  std::vector<Point> helpers_;
  std::vector<Point> uts_;
  std::vector<std::vector<int>> adjacency_;
};

/// Deterministic helper layout: k=1 at the center; 2..8 evenly spaced on the
/// R/2 ring; k>=9 on concentric annulus-midpoint rings with counts
/// proportional to annulus area.
std::vector<Point> helper_layout(int k, double cell_radius);

/// Terminals uniform on the disk (polar sqrt sampling), helpers per
/// helper_layout.
Topology generate_cell(int n_uts, int k_helpers, double cell_radius,
                       double tx_range, Rng& rng);

/// Per-terminal hop count from the nearest of `helper_ids` (joint BFS);
/// kUnreachable where no helper reaches the terminal.
std::vector<int> hop_distances(const Topology& topo,
                               const std::vector<int>& helper_ids);

/// Fraction of terminals within max_hops hops of any helper.
double coverage_fraction(const Topology& topo, int max_hops);

/// BFS shortest-path parents from `root` over all nodes (-1 for the root
/// and for unreached nodes). Neighbor order is ascending id, so parents are
/// deterministic.
std::vector<int> bfs_parents(const Topology& topo, int root);

struct UnreachableError : std::runtime_error {
  int terminal;
  explicit UnreachableError(int ut_index);
};

/// Shortest-path multicast tree from a helper to a set of terminals. The
/// transmission count is the number of transmitters: the root plus every
/// internal relay (wireless broadcast reaches all of a node's children at
/// once).
struct MulticastTree {
  int root = -1;
  std::vector<std::pair<int, int>> edges;  // (parent, child)
  std::vector<int> transmitters;           // sorted node ids
  int transmission_count() const { return static_cast<int>(transmitters.size()); }
};

MulticastTree tree_from_parents(const std::vector<int>& parents, int root,
                                const std::vector<int>& target_nodes);

/// Targets are terminal indices (0-based UT ids). Throws UnreachableError
/// naming the first unreachable terminal.
MulticastTree multicast_tree(const Topology& topo, int helper_id,
                             const std::vector<int>& target_uts);

/// Uncoded multihop unicast: one transmission per hop per request, no
/// sharing. Requests are (ut_index, rank) pairs; the rank does not affect
/// the cost but keeps call sites honest about what is delivered.
long long baseline_unicast_cost(const Topology& topo, int helper_id,
                                const std::vector<std::pair<int, int>>& requests);

/// Content availability of one helper.
struct HelperStore {
  bool stores_all = true;
  std::unordered_set<int> ranks;
  bool has(int rank) const { return stores_all || ranks.count(rank) != 0; }
};

/// Closest helper (hop distance) that stores each request's content, ties to
/// the lower helper id; kMiss when no storing helper is reachable within
/// max_hops (pass a negative max_hops for no cap).
std::vector<int> assign_helpers(const Topology& topo,
                                const std::vector<std::pair<int, int>>& requests,
                                const std::vector<HelperStore>& stores,
                                int max_hops = -1);

/// CSV dump, columns node_id,kind{helper|ut},x_m,y_m.
void dump_topology_csv(std::ostream& os, const Topology& topo);

}  // namespace codedcast
