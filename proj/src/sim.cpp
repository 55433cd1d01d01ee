#include "codedcast/sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace codedcast {

namespace {

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double ci95_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  return 1.96 * sd / std::sqrt(static_cast<double>(xs.size()));
}

std::vector<HelperStore> helper_stores(const SimConfig& cfg) {
  std::vector<HelperStore> stores(cfg.helpers);
  if (cfg.helper_top_k > 0) {
    for (auto& store : stores) {
      store.stores_all = false;
      for (int r = 1; r <= std::min(cfg.helper_top_k, cfg.catalog); ++r)
        store.ranks.insert(r);
    }
  }
  return stores;
}

}  // namespace

std::vector<CacheState> warmup_caches(const SimConfig& cfg, const Catalog& cat,
                                      Rng& rng) {
  std::vector<CacheState> caches;
  caches.reserve(cfg.n_uts);
  std::vector<int> draws(cfg.warmup_requests);
  for (int i = 0; i < cfg.n_uts; ++i) {
    for (auto& d : draws) d = cat.sample(rng);
    caches.push_back(CacheState::replay(cfg.policy, cfg.cache_capacity, draws));
  }
  return caches;
}

RoundResult run_delivery_round(const SimConfig& cfg, const Topology& topo,
                               std::vector<CacheState>& caches,
                               const std::vector<std::pair<int, int>>& active_requests) {
  RoundResult result;
  const std::vector<HelperStore> stores = helper_stores(cfg);
  const std::vector<int> assignment =
      assign_helpers(topo, active_requests, stores, cfg.max_hops);

  if (cfg.scheme == Scheme::UNICAST) {
    for (std::size_t i = 0; i < active_requests.size(); ++i) {
      const auto& [ut, rank] = active_requests[i];
      if (cfg.self_hit_mode == SelfHitMode::LOCAL && caches[ut].contains(rank)) {
        caches[ut].update(rank);
        result.satisfied.push_back(active_requests[i]);
        continue;
      }
      const int h = assignment[i];
      if (h == kMiss) {
        result.missed.push_back(active_requests[i]);
        continue;
      }
      result.transmissions += baseline_unicast_cost(topo, h, {active_requests[i]});
      caches[ut].update(rank);
      result.satisfied.push_back(active_requests[i]);
    }
    return result;
  }

  // group requests per helper, preserving input order
  std::vector<std::vector<std::pair<int, int>>> per_helper(cfg.helpers);
  for (std::size_t i = 0; i < active_requests.size(); ++i) {
    const int h = assignment[i];
    if (h == kMiss) {
      // a self-hit needs no helper; resolve it locally even when unassigned
      const auto& [ut, rank] = active_requests[i];
      if (cfg.self_hit_mode == SelfHitMode::LOCAL && caches[ut].contains(rank)) {
        caches[ut].update(rank);
        result.satisfied.push_back(active_requests[i]);
      } else {
        result.missed.push_back(active_requests[i]);
      }
      continue;
    }
    per_helper[h].push_back(active_requests[i]);
  }

  std::unordered_map<int, int> request_of;  // ut -> rank for this round
  for (const auto& [ut, rank] : active_requests) request_of[ut] = rank;

  for (int h = 0; h < cfg.helpers; ++h) {
    if (per_helper[h].empty()) continue;
    DeliveryPlan plan = plan_delivery(per_helper[h], caches, cfg.strategy,
                                      cfg.max_cycle_len, cfg.self_hit_mode);
    for (int ut : plan.self_hits) {
      caches[ut].update(request_of.at(ut));
      result.satisfied.emplace_back(ut, request_of.at(ut));
    }

    const std::vector<int> parents = bfs_parents(topo, h);
    std::vector<int> hops(topo.node_count(), 0);
    for (int node = 0; node < topo.node_count(); ++node) {
      int d = 0;
      for (int cur = node; cur != h && parents[cur] >= 0; cur = parents[cur]) ++d;
      hops[node] = d;
    }

    std::vector<CodeGroup> groups;
    for (auto& group : plan.code.groups) {
      // A k-cycle costs k-1 codewords through the whole tree; fall back to
      // plain unicast when that would exceed the members' summed hop costs.
      if (group.kind == GroupKind::CYCLE) {
        std::vector<int> nodes;
        for (int ut : group.members) nodes.push_back(topo.ut_node(ut));
        const MulticastTree tree = tree_from_parents(parents, h, nodes);
        const long long coded_cost =
            static_cast<long long>(group.codeword_ranks.size()) * tree.transmission_count();
        long long unicast_cost = 0;
        for (int node : nodes) unicast_cost += hops[node];
        if (coded_cost > unicast_cost) {
          for (int ut : group.members) {
            CodeGroup single;
            single.kind = GroupKind::SINGLETON;
            single.members = {ut};
            single.codeword_ranks.push_back({request_of.at(ut)});
            groups.push_back(std::move(single));
          }
          continue;
        }
      }
      groups.push_back(std::move(group));
    }

    for (const auto& group : groups) {
      std::vector<int> nodes;
      for (int ut : group.members) nodes.push_back(topo.ut_node(ut));
      const MulticastTree tree = tree_from_parents(parents, h, nodes);
      const std::vector<Codeword> codewords = encode(group, cfg.payload_len);
      result.transmissions +=
          static_cast<long long>(codewords.size()) * tree.transmission_count();

      GroupLog log;
      log.kind = group.kind;
      log.members = static_cast<int>(group.members.size());
      log.codewords = static_cast<int>(codewords.size());
      for (const auto& cw : codewords)
        log.rank_set_total += static_cast<int>(cw.rank_set.size());
      log.tree_transmitters = tree.transmission_count();
      result.groups.push_back(log);

      for (int ut : group.members) {
        const int want = request_of.at(ut);
        const auto payload =
            decode(caches[ut].contents(), {}, codewords, want, cfg.payload_len);
        if (!payload || *payload != payload_for_rank(want, cfg.payload_len)) {
          std::ostringstream oss;
          oss << "decode failure at ut " << ut << " want " << want << " group "
              << to_string(group.kind);
          throw std::runtime_error(oss.str());
        }
        caches[ut].update(want);
        result.satisfied.emplace_back(ut, want);
      }
    }
  }
  return result;
}

std::vector<MetricsRow> experiment_coverage(const SimConfig& base,
                                            const std::vector<int>& helper_counts,
                                            const std::vector<int>& hop_values,
                                            int seeds) {
  std::vector<MetricsRow> rows;
  for (std::size_t ki = 0; ki < helper_counts.size(); ++ki) {
    const int k = helper_counts[ki];
    // coverage per seed per hop threshold, one BFS per seed
    std::vector<std::vector<double>> cov(hop_values.size());
    for (int seed = 0; seed < seeds; ++seed) {
      Rng rng(derive_seed(base.seed, ki, static_cast<std::uint64_t>(seed)));
      const Topology topo =
          generate_cell(base.n_uts, k, base.cell_radius_m, base.tx_range_m, rng);
      std::vector<int> helpers(k);
      std::iota(helpers.begin(), helpers.end(), 0);
      const std::vector<int> hops = hop_distances(topo, helpers);
      for (std::size_t hi = 0; hi < hop_values.size(); ++hi) {
        int covered = 0;
        for (int d : hops) {
          if (d != kUnreachable && d <= hop_values[hi]) ++covered;
        }
        cov[hi].push_back(static_cast<double>(covered) / base.n_uts);
      }
    }
    for (std::size_t hi = 0; hi < hop_values.size(); ++hi) {
      MetricsRow row;
      row.experiment = "coverage";
      row.helpers = k;
      row.param = hop_values[hi];
      row.coverage = mean_of(cov[hi]);
      row.ci95 = ci95_of(cov[hi]);
      row.seeds_used = seeds;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

/// Poisson arrivals for one delivery round: how many requests and from whom.
/// A terminal already holding an active request keeps it (no re-request).
std::vector<std::pair<int, int>> draw_round_requests(const SimConfig& cfg,
                                                     const Catalog& cat, Rng& rng) {
  const double rate = cfg.request_rate > 0.0 ? cfg.request_rate : 1.0 / cfg.n_uts;
  const double lambda = rate * cfg.n_uts * cfg.round_slots;
  const int count = rng.poisson(lambda);
  std::vector<std::pair<int, int>> requests;
  std::unordered_set<int> busy;
  for (int i = 0; i < count; ++i) {
    const int ut = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.n_uts)));
    const int rank = cat.sample(rng);
    if (busy.insert(ut).second) requests.emplace_back(ut, rank);
  }
  return requests;
}

}  // namespace

std::vector<MetricsRow> experiment_contents_per_tx(const SimConfig& base,
                                                   const std::vector<double>& s_values,
                                                   int seeds) {
  std::vector<MetricsRow> rows;
  for (std::size_t si = 0; si < s_values.size(); ++si) {
    std::vector<double> per_seed;
    for (int seed = 0; seed < seeds; ++seed) {
      Rng rng(derive_seed(base.seed, si, static_cast<std::uint64_t>(seed)));
      const Catalog cat(base.catalog, s_values[si]);
      std::vector<CacheState> caches = warmup_caches(base, cat, rng);

      long long rank_total = 0;
      long long codewords = 0;
      for (int round = 0; round < base.measure_rounds; ++round) {
        const auto requests = draw_round_requests(base, cat, rng);
        const DeliveryPlan plan = plan_delivery(requests, caches, base.strategy,
                                                base.max_cycle_len, base.self_hit_mode);
        for (const auto& group : plan.code.groups) {
          const std::vector<Codeword> cws = encode(group, 0);
          codewords += static_cast<long long>(cws.size());
          for (const auto& cw : cws)
            rank_total += static_cast<long long>(cw.rank_set.size());
          for (int ut : group.members) {
            // structural decodability check per member (payloadless)
            int want = 0;
            for (const auto& [t, r] : requests) {
              if (t == ut) want = r;
            }
            if (!decode(caches[ut].contents(), {}, cws, want, 0)) {
              throw std::runtime_error("contents_per_tx: undecodable group");
            }
          }
        }
        for (const auto& [ut, rank] : requests) caches[ut].update(rank);
      }
      per_seed.push_back(codewords > 0
                             ? static_cast<double>(rank_total) / static_cast<double>(codewords)
                             : 1.0);
    }
    MetricsRow row;
    row.experiment = "gain";
    row.param = s_values[si];
    row.helpers = 1;
    row.contents_per_tx = mean_of(per_seed);
    row.ci95 = ci95_of(per_seed);
    row.seeds_used = seeds;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

struct SlotSimResult {
  double satisfied_per_slot_per_helper = 0.0;
  long long misses = 0;
};

SlotSimResult run_slotted(const SimConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const Catalog cat(cfg.catalog, cfg.zipf_s);
  const Topology topo = generate_cell(cfg.n_uts, cfg.helpers, cfg.cell_radius_m,
                                      cfg.tx_range_m, rng);
  const std::vector<HelperStore> stores = helper_stores(cfg);

  std::vector<std::vector<int>> parents(cfg.helpers);
  std::vector<std::vector<int>> hops(cfg.helpers);
  for (int h = 0; h < cfg.helpers; ++h) {
    parents[h] = bfs_parents(topo, h);
    hops[h].assign(topo.node_count(), kUnreachable);
    // depth via parent chain; root depth 0
    for (int node = 0; node < topo.node_count(); ++node) {
      int d = 0;
      int cur = node;
      while (cur != h && parents[h][cur] >= 0) {
        cur = parents[h][cur];
        ++d;
      }
      if (cur == h) hops[h][node] = d;
    }
  }

  std::vector<CacheState> caches = warmup_caches(cfg, cat, rng);
  std::vector<std::deque<std::pair<int, int>>> queue(cfg.helpers);
  std::vector<char> active(cfg.n_uts, 0);
  std::vector<long long> busy_until(cfg.helpers, 0);

  long long satisfied = 0;
  long long misses = 0;

  for (long long slot = 0; slot < cfg.measure_rounds; ++slot) {
    // arrivals
    for (int ut = 0; ut < cfg.n_uts; ++ut) {
      if (active[ut] || !rng.bernoulli(cfg.request_prob)) continue;
      const int rank = cat.sample(rng);
      if (cfg.self_hit_mode == SelfHitMode::LOCAL && caches[ut].contains(rank)) {
        caches[ut].update(rank);  // served locally, not a helper satisfaction
        continue;
      }
      const int node = topo.ut_node(ut);
      int best = kMiss;
      int best_hops = 0;
      for (int h = 0; h < cfg.helpers; ++h) {
        if (!stores[h].has(rank)) continue;
        const int d = hops[h][node];
        if (d == kUnreachable || (cfg.max_hops >= 0 && d > cfg.max_hops)) continue;
        if (best == kMiss || d < best_hops) {
          best = h;
          best_hops = d;
        }
      }
      if (best == kMiss) {
        ++misses;
        continue;
      }
      queue[best].emplace_back(ut, rank);
      active[ut] = 1;
    }

    // service
    for (int h = 0; h < cfg.helpers; ++h) {
      if (queue[h].empty() || busy_until[h] > slot) continue;

      if (cfg.scheme == Scheme::UNICAST) {
        const auto [ut, rank] = queue[h].front();
        queue[h].pop_front();
        active[ut] = 0;
        caches[ut].update(rank);
        ++satisfied;
        if (cfg.slot_unit == SlotUnit::TRANSMISSION)
          busy_until[h] = slot + hops[h][topo.ut_node(ut)];
        continue;
      }

      const std::size_t window =
          std::min<std::size_t>(queue[h].size(), static_cast<std::size_t>(cfg.coding_window));
      std::vector<std::pair<int, int>> batch(queue[h].begin(),
                                             queue[h].begin() + window);
      const DeliveryPlan plan = plan_delivery(batch, caches, cfg.strategy,
                                              cfg.max_cycle_len, SelfHitMode::CODED);
      // serve the group that satisfies the most requests
      const CodeGroup* chosen = nullptr;
      for (const auto& group : plan.code.groups) {
        if (!chosen || group.members.size() > chosen->members.size()) chosen = &group;
      }
      if (!chosen) continue;

      std::vector<int> nodes;
      for (int ut : chosen->members) nodes.push_back(topo.ut_node(ut));
      const MulticastTree tree = tree_from_parents(parents[h], h, nodes);
      const std::vector<Codeword> cws = encode(*chosen, 0);

      std::unordered_set<int> served;
      for (int ut : chosen->members) {
        int want = 0;
        for (const auto& [t, r] : batch) {
          if (t == ut) want = r;
        }
        if (!decode(caches[ut].contents(), {}, cws, want, 0)) {
          throw std::runtime_error("throughput: undecodable group");
        }
        caches[ut].update(want);
        active[ut] = 0;
        served.insert(ut);
        ++satisfied;
      }
      std::deque<std::pair<int, int>> rest;
      for (const auto& entry : queue[h]) {
        if (served.count(entry.first) == 0) rest.push_back(entry);
      }
      queue[h] = std::move(rest);
      if (cfg.slot_unit == SlotUnit::TRANSMISSION) {
        busy_until[h] =
            slot + static_cast<long long>(cws.size()) * tree.transmission_count();
      }
    }
  }

  SlotSimResult out;
  out.satisfied_per_slot_per_helper =
      static_cast<double>(satisfied) /
      (static_cast<double>(cfg.measure_rounds) * cfg.helpers);
  out.misses = misses;
  return out;
}

}  // namespace

std::vector<MetricsRow> experiment_helper_throughput(const SimConfig& proposed,
                                                     const SimConfig& baseline,
                                                     const std::vector<double>& q_values,
                                                     int seeds) {
  std::vector<MetricsRow> rows;
  const auto sweep = [&](const SimConfig& cfg, const std::string& name,
                         std::size_t scheme_tag) {
    for (std::size_t qi = 0; qi < q_values.size(); ++qi) {
      std::vector<double> per_seed;
      std::vector<double> miss_seed;
      for (int seed = 0; seed < seeds; ++seed) {
        SimConfig run = cfg;
        run.request_prob = q_values[qi];
        const auto result = run_slotted(
            run, derive_seed(cfg.seed, qi * 2 + scheme_tag, static_cast<std::uint64_t>(seed)));
        per_seed.push_back(result.satisfied_per_slot_per_helper);
        miss_seed.push_back(static_cast<double>(result.misses));
      }
      MetricsRow row;
      row.experiment = name;
      row.param = q_values[qi];
      row.helpers = cfg.helpers;
      row.requests_per_slot_per_helper = mean_of(per_seed);
      row.misses = static_cast<long long>(std::llround(mean_of(miss_seed)));
      row.ci95 = ci95_of(per_seed);
      row.seeds_used = seeds;
      rows.push_back(std::move(row));
    }
  };
  sweep(proposed, "throughput-proposed", 0);
  sweep(baseline, "throughput-baseline", 1);
  return rows;
}

SimConfig coverage_config() {
  SimConfig cfg;
  cfg.n_uts = 1000;
  cfg.helpers = 4;
  cfg.cell_radius_m = 400.0;
  cfg.tx_range_m = 100.0;
  return cfg;
}

SimConfig gain_config() {
  SimConfig cfg;
  cfg.n_uts = 200;
  cfg.catalog = 1000;
  cfg.cache_capacity = 75;
  cfg.policy = CachePolicy::LFU;
  cfg.helpers = 1;
  cfg.warmup_requests = 1000;
  cfg.measure_rounds = 300;
  cfg.round_slots = 16;
  cfg.strategy = Strategy::COLORING_THEN_CYCLES;
  cfg.max_cycle_len = 4;
  cfg.self_hit_mode = SelfHitMode::CODED;
  return cfg;
}

SimConfig throughput_proposed_config() {
  SimConfig cfg;
  cfg.n_uts = 1000;
  cfg.catalog = 1000;
  cfg.zipf_s = 2.0;
  cfg.cache_capacity = 5;
  cfg.policy = CachePolicy::LRU;
  cfg.helpers = 4;
  cfg.max_hops = 3;
  cfg.warmup_requests = 100;
  cfg.measure_rounds = 200;
  cfg.coding_window = 64;
  cfg.strategy = Strategy::COLORING_THEN_CYCLES;
  cfg.scheme = Scheme::CODED;
  return cfg;
}

SimConfig throughput_baseline_config() {
  SimConfig cfg = throughput_proposed_config();
  cfg.helpers = 27;
  cfg.max_hops = 1;
  cfg.scheme = Scheme::UNICAST;
  return cfg;
}

std::string demo_report() {
  // H serves N1..N6; N2 relays to N4, which reaches N5 and N6.
  const std::vector<Point> helper{{0.0, 0.0}};
  const std::vector<Point> uts{{-60.0, 80.0}, {100.0, 0.0}, {-60.0, -80.0},
                               {200.0, 0.0},  {260.0, 80.0}, {260.0, -80.0}};
  const Topology topo = Topology::make(400.0, 100.0, helper, uts);

  const auto name = [](int ut) { return "N" + std::to_string(ut + 1); };
  constexpr std::size_t kPayloadLen = 1024;

  std::vector<CacheState> caches(6, CacheState(CachePolicy::LRU, 2));
  const auto fill = [&caches](int ut, std::initializer_list<int> ranks) {
    for (int r : ranks) caches[ut].update(r);
  };
  fill(0, {1, 4});  // N1
  fill(1, {3, 4});  // N2
  fill(4, {1, 3});  // N5

  const std::vector<std::pair<int, int>> requests{{0, 3}, {1, 1}, {4, 4}};

  std::ostringstream os;
  os << "multihop coded multicast demo\n";
  os << "requests: N1 wants M3, N2 wants M1, N5 wants M4\n";
  os << "caches:   N1 {M1,M4}, N2 {M3,M4}, N5 {M1,M3}\n\n";

  std::vector<int> ranks;
  std::vector<std::unordered_set<int>> side;
  for (const auto& [ut, rank] : requests) {
    ranks.push_back(rank);
    side.push_back(caches[ut].contents());
  }
  const DependencyGraph dep = build_dependency_graph(ranks, std::move(side));
  const std::vector<int> vertex_ut{0, 1, 4};
  os << "dependency graph (" << dep.graph.edge_count() << " edges):\n";
  for (int i = 0; i < dep.n; ++i) {
    for (int j : dep.graph.out[i]) {
      os << "  " << name(vertex_ut[i]) << " -> " << name(vertex_ut[j]) << "\n";
    }
  }

  IndexCode code = build_code(dep, Strategy::COLORING);
  for (auto& group : code.groups) {
    for (int& member : group.members) member = vertex_ut[member];
  }
  os << "\nindex code:\n";
  dump_code(os, code);

  const CodeGroup& clique = code.groups.front();
  const std::vector<Codeword> codewords = encode(clique, kPayloadLen);
  os << "\ncodeword: ";
  for (std::size_t i = 0; i < codewords.front().rank_set.size(); ++i) {
    os << (i ? " xor " : "") << "M" << codewords.front().rank_set[i];
  }
  os << "\n\ndecode:\n";
  bool all_ok = true;
  for (const auto& [ut, want] : requests) {
    const auto payload = decode(caches[ut].contents(), {}, codewords, want, kPayloadLen);
    const bool ok = payload && *payload == payload_for_rank(want, kPayloadLen);
    all_ok = all_ok && ok;
    os << "  " << name(ut) << " decodes M" << want << " from the codeword xor its cache: "
       << (ok ? "verified bit-exact" : "FAILED") << "\n";
  }

  const MulticastTree tree = multicast_tree(topo, 0, {0, 1, 4});
  os << "\nmulticast tree (root H):\n";
  for (const auto& [parent, child] : tree.edges) {
    const auto label = [&name](int node) { return node == 0 ? std::string("H") : name(node - 1); };
    os << "  " << label(parent) << " -> " << label(child) << "\n";
  }
  os << "transmitters:";
  for (int t : tree.transmitters) os << ' ' << (t == 0 ? std::string("H") : name(t - 1));
  os << "\n\n";

  const long long coded = static_cast<long long>(codewords.size()) * tree.transmission_count();
  const long long uncoded = baseline_unicast_cost(topo, 0, requests);
  os << "coded: " << coded << " transmissions\n";
  os << "uncoded: " << uncoded << " transmissions\n";
  os << "saved: " << (uncoded - coded) << "\n";
  if (!all_ok) throw std::runtime_error("demo: decode verification failed");
  return os.str();
}

}  // namespace codedcast
