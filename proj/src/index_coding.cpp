#include "codedcast/index_coding.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace codedcast {

Coloring greedy_coloring(const ConflictGraph& cg) {
  const int n = cg.n;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&cg](int a, int b) {
    if (cg.degree[a] != cg.degree[b]) return cg.degree[a] > cg.degree[b];
    return a < b;
  });

  Coloring result;
  result.color.assign(n, -1);
  std::vector<char> taken;
  for (int v : order) {
    taken.assign(result.count + 1, 0);
    for (int u = 0; u < n; ++u) {
      if (result.color[u] >= 0 && cg.has_edge(v, u)) taken[result.color[u]] = 1;
    }
    int c = 0;
    while (taken[c]) ++c;
    result.color[v] = c;
    result.count = std::max(result.count, c + 1);
  }
  return result;
}

namespace {

// Depth-first search for a directed cycle of exactly `len` vertices through
// `start`, visiting only vertices > start that are neither used nor already
// on the path. Neighbor order is ascending, so the first cycle found is the
// lexicographically smallest.
bool find_cycle_dfs(const Digraph& g, const std::vector<bool>& used, int start,
                    int len, std::vector<int>& path) {
  const int u = path.back();
  if (static_cast<int>(path.size()) == len) return g.has_edge(u, start);
  for (int v : g.out[u]) {
    if (v <= start || used[v]) continue;
    if (std::find(path.begin(), path.end(), v) != path.end()) continue;
    path.push_back(v);
    if (find_cycle_dfs(g, used, start, len, path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> disjoint_cycles(const Digraph& g, int max_len,
                                              const std::vector<bool>& excluded) {
  if (max_len < 2) throw std::invalid_argument("disjoint_cycles: max_len must be >= 2");
  std::vector<bool> used =
      excluded.empty() ? std::vector<bool>(g.n, false) : excluded;
  if (static_cast<int>(used.size()) != g.n)
    throw std::invalid_argument("disjoint_cycles: excluded size mismatch");

  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  for (int len = 2; len <= max_len; ++len) {
    for (int start = 0; start < g.n; ++start) {
      if (used[start]) continue;
      path.clear();
      path.push_back(start);
      if (find_cycle_dfs(g, used, start, len, path)) {
        for (int v : path) used[v] = true;
        cycles.push_back(path);
      }
    }
  }
  return cycles;
}

namespace {

CodeGroup make_clique_group(const DependencyGraph& dep, std::vector<int> members) {
  CodeGroup group;
  group.kind = members.size() == 1 ? GroupKind::SINGLETON : GroupKind::CLIQUE;
  std::sort(members.begin(), members.end());
  std::vector<int> ranks;
  ranks.reserve(members.size());
  for (int v : members) ranks.push_back(dep.request[v]);
  std::sort(ranks.begin(), ranks.end());
  group.members = std::move(members);
  group.codeword_ranks.push_back(std::move(ranks));
  return group;
}

CodeGroup make_cycle_group(const DependencyGraph& dep, std::vector<int> cycle) {
  CodeGroup group;
  group.kind = GroupKind::CYCLE;
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    std::vector<int> pair{dep.request[cycle[i]], dep.request[cycle[i + 1]]};
    std::sort(pair.begin(), pair.end());
    group.codeword_ranks.push_back(std::move(pair));
  }
  group.members = std::move(cycle);
  return group;
}

void append_singletons(const DependencyGraph& dep, const std::vector<bool>& covered,
                       IndexCode& code) {
  for (int v = 0; v < dep.n; ++v) {
    if (!covered[v]) code.groups.push_back(make_clique_group(dep, {v}));
  }
}

}  // namespace

IndexCode build_code(const DependencyGraph& dep, Strategy strategy, int max_cycle_len) {
  IndexCode code;
  std::vector<bool> covered(dep.n, false);

  if (strategy == Strategy::COLORING || strategy == Strategy::COLORING_THEN_CYCLES) {
    const Coloring coloring = greedy_coloring(conflict_graph(dep));
    std::vector<std::vector<int>> classes(coloring.count);
    for (int v = 0; v < dep.n; ++v) classes[coloring.color[v]].push_back(v);
    for (auto& members : classes) {
      if (strategy == Strategy::COLORING_THEN_CYCLES && members.size() < 2) continue;
      for (int v : members) covered[v] = true;
      code.groups.push_back(make_clique_group(dep, std::move(members)));
    }
  }

  if (strategy == Strategy::CYCLES || strategy == Strategy::COLORING_THEN_CYCLES) {
    for (auto& cycle : disjoint_cycles(dep.graph, max_cycle_len, covered)) {
      for (int v : cycle) covered[v] = true;
      code.groups.push_back(make_cycle_group(dep, std::move(cycle)));
    }
  }

  append_singletons(dep, covered, code);

  code.total_length = 0;
  for (const auto& g : code.groups)
    code.total_length += static_cast<int>(g.codeword_ranks.size());
  return code;
}

int coding_gain(const IndexCode& code, int n) { return n - code.total_length; }

std::vector<std::uint8_t> payload_for_rank(int rank, std::size_t len) {
  std::vector<std::uint8_t> bytes(len);
  std::uint64_t state = derive_seed(0xC0DEDCA5ull, static_cast<std::uint64_t>(rank));
  std::size_t i = 0;
  while (i < len) {
    state = splitmix64(state);
    std::uint64_t word = state;
    for (int b = 0; b < 8 && i < len; ++b, ++i) {
      bytes[i] = static_cast<std::uint8_t>(word & 0xff);
      word >>= 8;
    }
  }
  return bytes;
}

namespace {

void xor_into(std::vector<std::uint8_t>& acc, const std::vector<std::uint8_t>& other) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= other[i];
}

}  // namespace

std::vector<Codeword> encode(const CodeGroup& group, std::size_t payload_len) {
  std::vector<Codeword> out;
  out.reserve(group.codeword_ranks.size());
  for (const auto& ranks : group.codeword_ranks) {
    Codeword cw;
    cw.rank_set = ranks;
    cw.payload.assign(payload_len, 0);
    for (int r : ranks) xor_into(cw.payload, payload_for_rank(r, payload_len));
    out.push_back(std::move(cw));
  }
  return out;
}

std::optional<std::vector<std::uint8_t>> decode(
    const std::unordered_set<int>& cached, const std::unordered_set<int>& decoded,
    const std::vector<Codeword>& received, int want, std::size_t payload_len) {
  if (cached.count(want) != 0 || decoded.count(want) != 0)
    return payload_for_rank(want, payload_len);

  // Payloads for contents the terminal already holds are regenerated from
  // the rank; peeled contents keep the bytes actually recovered.
  std::unordered_map<int, std::vector<std::uint8_t>> resolved;
  const auto known_payload =
      [&](int rank) -> std::optional<const std::vector<std::uint8_t>*> {
    const auto it = resolved.find(rank);
    if (it != resolved.end()) return &it->second;
    return std::nullopt;
  };
  const auto knows = [&](int rank) {
    return cached.count(rank) != 0 || decoded.count(rank) != 0 ||
           resolved.count(rank) != 0;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& cw : received) {
      int unknown = 0;
      int unknown_count = 0;
      for (int r : cw.rank_set) {
        if (!knows(r)) {
          unknown = r;
          if (++unknown_count > 1) break;
        }
      }
      if (unknown_count != 1) continue;
      std::vector<std::uint8_t> payload = cw.payload;
      for (int r : cw.rank_set) {
        if (r == unknown) continue;
        if (auto held = known_payload(r)) {
          xor_into(payload, **held);
        } else {
          xor_into(payload, payload_for_rank(r, payload_len));
        }
      }
      if (unknown == want) return payload;
      resolved.emplace(unknown, std::move(payload));
      progress = true;
    }
  }
  return std::nullopt;
}

int optimal_clique_cover(const DependencyGraph& dep) {
  if (dep.n > 10)
    throw std::invalid_argument("optimal_clique_cover: limited to n <= 10");
  if (dep.n == 0) return 0;
  const Ugraph core = bidirected_core(dep.graph);
  std::vector<unsigned> adj(dep.n, 0);
  for (int i = 0; i < dep.n; ++i) {
    for (int j = 0; j < dep.n; ++j) {
      if (i != j && core.has_edge(i, j)) adj[i] |= 1u << j;
    }
  }
  const auto is_clique = [&](unsigned set) {
    for (unsigned rest = set; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if ((set & ~(adj[v] | (1u << v))) != 0) return false;
    }
    return true;
  };

  const unsigned full = (1u << dep.n) - 1;
  std::vector<int> cover(full + 1, dep.n + 1);
  cover[0] = 0;
  for (unsigned set = 1; set <= full; ++set) {
    const unsigned low = 1u << std::countr_zero(set);
    const unsigned rest = set & ~low;
    // every clique in `set` that contains the lowest vertex
    for (unsigned sub = rest;; sub = (sub - 1) & rest) {
      const unsigned candidate = sub | low;
      if (is_clique(candidate)) {
        cover[set] = std::min(cover[set], 1 + cover[set & ~candidate]);
      }
      if (sub == 0) break;
    }
  }
  return cover[full];
}

DeliveryPlan plan_delivery(const std::vector<std::pair<int, int>>& requests,
                           const std::vector<CacheState>& caches,
                           Strategy strategy, int max_cycle_len,
                           SelfHitMode self_hit_mode) {
  DeliveryPlan plan;

  // rank -> requesting terminals, deterministic by ascending rank
  std::map<int, std::vector<int>> by_rank;
  for (const auto& [terminal, rank] : requests) {
    if (self_hit_mode == SelfHitMode::LOCAL && caches[terminal].contains(rank)) {
      plan.self_hits.push_back(terminal);
      continue;
    }
    by_rank[rank].push_back(terminal);
  }

  std::vector<std::pair<int, int>> unique;  // (terminal, rank)
  for (auto& [rank, terminals] : by_rank) {
    if (terminals.size() == 1) {
      unique.emplace_back(terminals.front(), rank);
      continue;
    }
    // same content wanted by several terminals: one plain multicast codeword
    CodeGroup group;
    group.kind = GroupKind::SINGLETON;
    std::sort(terminals.begin(), terminals.end());
    group.members = std::move(terminals);
    group.codeword_ranks.push_back({rank});
    plan.code.groups.push_back(std::move(group));
  }

  std::sort(unique.begin(), unique.end());
  std::vector<int> ranks;
  std::vector<std::unordered_set<int>> side;
  ranks.reserve(unique.size());
  side.reserve(unique.size());
  for (const auto& [terminal, rank] : unique) {
    ranks.push_back(rank);
    side.push_back(caches[terminal].contents());
  }

  const DependencyGraph dep = build_dependency_graph(ranks, std::move(side));
  IndexCode coded = build_code(dep, strategy, max_cycle_len);
  for (auto& group : coded.groups) {
    for (int& member : group.members) member = unique[member].first;
    plan.code.groups.push_back(std::move(group));
  }

  plan.code.total_length = 0;
  for (const auto& g : plan.code.groups)
    plan.code.total_length += static_cast<int>(g.codeword_ranks.size());
  return plan;
}

void dump_code(std::ostream& os, const IndexCode& code) {
  const auto join = [&os](const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) os << ';';
      os << xs[i];
    }
  };
  for (const auto& group : code.groups) {
    for (const auto& ranks : group.codeword_ranks) {
      os << to_string(group.kind) << ',';
      join(group.members);
      os << ',';
      join(ranks);
      os << '\n';
    }
  }
}

const char* to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::CLIQUE: return "clique";
    case GroupKind::CYCLE: return "cycle";
    case GroupKind::SINGLETON: return "singleton";
  }
  return "?";
}

const char* to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::COLORING: return "coloring";
    case Strategy::CYCLES: return "cycles";
    case Strategy::COLORING_THEN_CYCLES: return "coloring+cycles";
  }
  return "?";
}

}  // namespace codedcast
