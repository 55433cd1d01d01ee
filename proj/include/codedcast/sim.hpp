#pragma once

#include <string>
#include <vector>

#include "codedcast/cache.hpp"
#include "codedcast/index_coding.hpp"
#include "codedcast/topology.hpp"
#include "codedcast/zipf.hpp"

namespace codedcast {

enum class RequestModel { POISSON, BERNOULLI };
enum class SlotUnit { GROUP, TRANSMISSION };
enum class Scheme { CODED, UNICAST };

struct SimConfig {
  int n_uts = 1000;
  int catalog = 1000;
  double zipf_s = 1.0;
  int cache_capacity = 5;
  CachePolicy policy = CachePolicy::LRU;
  int helpers = 4;
  double cell_radius_m = 400.0;
  double tx_range_m = 100.0;
  int max_hops = 3;
  int helper_top_k = 0;  // contents per helper; 0 = entire catalog
  RequestModel request_model = RequestModel::POISSON;
  double request_rate = 0.0;    // per-UT per-slot Poisson rate; 0 -> 1/n
  double request_prob = 0.1;    // per-UT per-slot Bernoulli probability
  int warmup_requests = 100;    // per terminal
  int measure_rounds = 300;
  int round_slots = 16;         // slots of arrivals folded into one delivery round
  int coding_window = 64;       // queued requests considered per helper per slot
  Strategy strategy = Strategy::COLORING_THEN_CYCLES;
  int max_cycle_len = 4;
  SelfHitMode self_hit_mode = SelfHitMode::LOCAL;
  SlotUnit slot_unit = SlotUnit::GROUP;
  Scheme scheme = Scheme::CODED;
  std::uint64_t seed = 42;
  std::size_t payload_len = 1024;
};

/// One aggregated experiment data point (means over seeds, 95% normal CI
/// half-width on the experiment's primary metric).
struct MetricsRow {
  std::string experiment;
  double param = 0.0;
  int helpers = 0;
  double contents_per_tx = 0.0;
  double requests_per_slot_per_helper = 0.0;
  double coverage = 0.0;
  double gain = 0.0;
  long long misses = 0;
  int seeds_used = 0;
  double ci95 = 0.0;
};

/// Per-terminal caches conditioned by warmup_requests Zipf draws each.
std::vector<CacheState> warmup_caches(const SimConfig& cfg, const Catalog& cat,
                                      Rng& rng);

struct GroupLog {
  GroupKind kind = GroupKind::SINGLETON;
  int members = 0;
  int codewords = 0;
  int rank_set_total = 0;  // sum of |rank_set| over the group's codewords
  int tree_transmitters = 0;
};

struct RoundResult {
  long long transmissions = 0;
  std::vector<std::pair<int, int>> satisfied;  // (ut, rank), decode-verified
  std::vector<std::pair<int, int>> missed;     // no storing helper in range
  std::vector<GroupLog> groups;
};

/// One delivery round of the full pipeline: helper assignment, per-helper
/// code planning, multicast trees, encode, decode verification at every
/// member, cache updates for satisfied requesters. Throws std::runtime_error
/// on any decode failure. Scheme::UNICAST skips coding and pays one
/// transmission per hop per request.
RoundResult run_delivery_round(const SimConfig& cfg, const Topology& topo,
                               std::vector<CacheState>& caches,
                               const std::vector<std::pair<int, int>>& active_requests);

/// Mean coverage per (helpers, max_hops) pair over `seeds` placements.
std::vector<MetricsRow> experiment_coverage(const SimConfig& base,
                                            const std::vector<int>& helper_counts,
                                            const std::vector<int>& hop_values,
                                            int seeds);

/// Mean distinct contents per codeword as a function of the Zipf exponent
/// (single helper serving the cell, Poisson arrivals batched per round).
std::vector<MetricsRow> experiment_contents_per_tx(const SimConfig& base,
                                                   const std::vector<double>& s_values,
                                                   int seeds);

/// Requests satisfied per slot per helper, proposed (coded, multihop)
/// versus baseline (27 helpers, 1 hop, uncoded), swept over the per-slot
/// request probability. Emits two rows per q.
std::vector<MetricsRow> experiment_helper_throughput(const SimConfig& proposed,
                                                     const SimConfig& baseline,
                                                     const std::vector<double>& q_values,
                                                     int seeds);

/// The worked six-terminal example: prints the dependency graph, the XOR
/// codeword, the multicast tree, decode traces, and the coded-vs-unicast
/// transmission comparison. Returns the report text.
std::string demo_report();

/// Default configurations for the standard experiments. The gain sweep runs
/// a single helper with LFU caches and routes every request through the
/// coded pipeline; the throughput pair compares 4 coded multihop helpers
/// against 27 single-hop unicast helpers.
SimConfig coverage_config();
SimConfig gain_config();
SimConfig throughput_proposed_config();
SimConfig throughput_baseline_config();

}  // namespace codedcast
