#include "codedcast/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <ostream>
#include <string>

namespace codedcast {

namespace {

bool within_range(const Point& a, const Point& b, double range) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy <= range * range;
}

}  // namespace

Topology Topology::make(double cell_radius, double tx_range,
                        std::vector<Point> helpers, std::vector<Point> uts) {
  Topology topo;
  topo.cell_radius_ = cell_radius;
  topo.tx_range_ = tx_range;
  topo.helpers_ = std::move(helpers);
  topo.uts_ = std::move(uts);

  const int total = topo.node_count();
  const auto& pos = [&topo](int node) -> const Point& {
    const int k = topo.helper_count();
    return node < k ? topo.helpers_[node] : topo.uts_[node - k];
  };
  topo.adjacency_.assign(total, {});
  for (int i = 0; i < total; ++i) {
    for (int j = i + 1; j < total; ++j) {
      if (within_range(pos(i), pos(j), tx_range)) {
        topo.adjacency_[i].push_back(j);
        topo.adjacency_[j].push_back(i);
      }
    }
  }
  return topo;
}

std::vector<Point> helper_layout(int k, double cell_radius) {
  std::vector<Point> points;
  if (k <= 0) return points;
  if (k == 1) {
    points.push_back({0.0, 0.0});
    return points;
  }
  const auto ring = [&points](int count, double radius) {
    for (int i = 0; i < count; ++i) {
      const double angle = 2.0 * std::numbers::pi * i / count;
      points.push_back({radius * std::cos(angle), radius * std::sin(angle)});
    }
  };
  if (k <= 8) {
    ring(k, cell_radius / 2.0);
    return points;
  }

  // Concentric rings at annulus midpoints, helper counts proportional to
  // annulus area (largest remainder), at least one per ring.
  const int rings = static_cast<int>(std::ceil(std::sqrt(k / 3.0)));
  std::vector<int> counts(rings, 1);
  std::vector<double> shares(rings);
  double total_weight = 0.0;
  for (int i = 0; i < rings; ++i) total_weight += 2.0 * i + 1.0;
  int assigned = rings;
  for (int i = 0; i < rings; ++i) {
    shares[i] = (2.0 * i + 1.0) / total_weight * k;
    const int extra = std::max(0, static_cast<int>(std::floor(shares[i])) - 1);
    counts[i] += extra;
    assigned += extra;
  }
  while (assigned < k) {  // largest fractional remainder, outer rings first
    int best = rings - 1;
    double best_rem = -1.0;
    for (int i = rings - 1; i >= 0; --i) {
      const double rem = shares[i] - counts[i];
      if (rem > best_rem) {
        best_rem = rem;
        best = i;
      }
    }
    ++counts[best];
    ++assigned;
  }
  for (int i = 0; i < rings; ++i) {
    ring(counts[i], cell_radius * (2.0 * i + 1.0) / (2.0 * rings));
  }
  return points;
}

Topology generate_cell(int n_uts, int k_helpers, double cell_radius,
                       double tx_range, Rng& rng) {
  std::vector<Point> uts(n_uts);
  for (auto& p : uts) {
    const double r = cell_radius * std::sqrt(rng.uniform01());
    const double theta = 2.0 * std::numbers::pi * rng.uniform01();
    p = {r * std::cos(theta), r * std::sin(theta)};
  }
  return Topology::make(cell_radius, tx_range, helper_layout(k_helpers, cell_radius),
                        std::move(uts));
}

namespace {

std::vector<int> bfs_hops(const Topology& topo, const std::vector<int>& sources) {
  std::vector<int> dist(topo.node_count(), kUnreachable);
  std::deque<int> queue;
  for (int s : sources) {
    if (dist[s] == kUnreachable) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : topo.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<int> hop_distances(const Topology& topo,
                               const std::vector<int>& helper_ids) {
  const std::vector<int> dist = bfs_hops(topo, helper_ids);
  std::vector<int> per_ut(topo.ut_count());
  for (int i = 0; i < topo.ut_count(); ++i) per_ut[i] = dist[topo.ut_node(i)];
  return per_ut;
}

double coverage_fraction(const Topology& topo, int max_hops) {
  if (topo.ut_count() == 0) return 0.0;
  std::vector<int> helpers(topo.helper_count());
  for (int h = 0; h < topo.helper_count(); ++h) helpers[h] = h;
  if (helpers.empty()) return 0.0;
  const std::vector<int> hops = hop_distances(topo, helpers);
  int covered = 0;
  for (int h : hops) {
    if (h != kUnreachable && h <= max_hops) ++covered;
  }
  return static_cast<double>(covered) / topo.ut_count();
}

std::vector<int> bfs_parents(const Topology& topo, int root) {
  std::vector<int> parent(topo.node_count(), -1);
  std::vector<char> seen(topo.node_count(), 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : topo.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  return parent;
}

UnreachableError::UnreachableError(int ut_index)
    : std::runtime_error("terminal unreachable: ut " + std::to_string(ut_index)),
      terminal(ut_index) {}

MulticastTree tree_from_parents(const std::vector<int>& parents, int root,
                                const std::vector<int>& target_nodes) {
  MulticastTree tree;
  tree.root = root;
  std::unordered_set<int> in_tree{root};
  std::unordered_set<int> transmitters;
  for (int target : target_nodes) {
    int node = target;
    while (node != root && in_tree.count(node) == 0) {
      const int up = parents[node];
      if (up < 0) throw UnreachableError(node);
      tree.edges.emplace_back(up, node);
      transmitters.insert(up);
      in_tree.insert(node);
      node = up;
    }
  }
  tree.transmitters.assign(transmitters.begin(), transmitters.end());
  std::sort(tree.transmitters.begin(), tree.transmitters.end());
  return tree;
}

MulticastTree multicast_tree(const Topology& topo, int helper_id,
                             const std::vector<int>& target_uts) {
  const std::vector<int> parents = bfs_parents(topo, helper_id);
  std::vector<int> nodes;
  nodes.reserve(target_uts.size());
  for (int ut : target_uts) {
    const int node = topo.ut_node(ut);
    if (node != helper_id && parents[node] == -1) throw UnreachableError(ut);
    nodes.push_back(node);
  }
  return tree_from_parents(parents, helper_id, nodes);
}

long long baseline_unicast_cost(const Topology& topo, int helper_id,
                                const std::vector<std::pair<int, int>>& requests) {
  const std::vector<int> dist = bfs_hops(topo, {helper_id});
  long long total = 0;
  for (const auto& [ut, rank] : requests) {
    (void)rank;
    const int d = dist[topo.ut_node(ut)];
    if (d == kUnreachable) throw UnreachableError(ut);
    total += d;
  }
  return total;
}

std::vector<int> assign_helpers(const Topology& topo,
                                const std::vector<std::pair<int, int>>& requests,
                                const std::vector<HelperStore>& stores,
                                int max_hops) {
  const int k = topo.helper_count();
  std::vector<std::vector<int>> hops(k);
  for (int h = 0; h < k; ++h) hops[h] = bfs_hops(topo, {h});

  std::vector<int> assignment(requests.size(), kMiss);
  for (std::size_t i = 0; i < requests.size(); ++i) {
    const auto& [ut, rank] = requests[i];
    const int node = topo.ut_node(ut);
    int best = kMiss;
    int best_hops = 0;
    for (int h = 0; h < k; ++h) {
      if (!stores[h].has(rank)) continue;
      const int d = hops[h][node];
      if (d == kUnreachable) continue;
      if (max_hops >= 0 && d > max_hops) continue;
      if (best == kMiss || d < best_hops) {
        best = h;
        best_hops = d;
      }
    }
    assignment[i] = best;
  }
  return assignment;
}

void dump_topology_csv(std::ostream& os, const Topology& topo) {
  os << "node_id,kind,x_m,y_m\n";
  for (int h = 0; h < topo.helper_count(); ++h) {
    os << h << ",helper," << topo.helper_positions()[h].x << ','
       << topo.helper_positions()[h].y << '\n';
  }
  for (int i = 0; i < topo.ut_count(); ++i) {
    os << topo.ut_node(i) << ",ut," << topo.ut_positions()[i].x << ','
       << topo.ut_positions()[i].y << '\n';
  }
}

}  // namespace codedcast
