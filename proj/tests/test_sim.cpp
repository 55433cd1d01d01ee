#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "codedcast/sim.hpp"

using namespace codedcast;

namespace {

Topology example_topology() {
  const std::vector<Point> helper{{0.0, 0.0}};
  const std::vector<Point> uts{{-60.0, 80.0}, {100.0, 0.0}, {-60.0, -80.0},
                               {200.0, 0.0},  {260.0, 80.0}, {260.0, -80.0}};
  return Topology::make(400.0, 100.0, helper, uts);
}

SimConfig example_config() {
  SimConfig cfg;
  cfg.n_uts = 6;
  cfg.catalog = 4;
  cfg.cache_capacity = 2;
  cfg.helpers = 1;
  cfg.max_hops = 3;
  cfg.strategy = Strategy::COLORING;
  cfg.payload_len = 64;
  return cfg;
}

std::vector<CacheState> example_caches() {
  std::vector<CacheState> caches(6, CacheState(CachePolicy::LRU, 2));
  caches[0].update(1);
  caches[0].update(4);
  caches[1].update(3);
  caches[1].update(4);
  caches[4].update(1);
  caches[4].update(3);
  return caches;
}

}  // namespace

TEST_CASE("warmup_caches: single draw and full-catalog convergence") {
  SimConfig cfg;
  cfg.n_uts = 20;
  cfg.catalog = 5;
  cfg.cache_capacity = 1;
  cfg.warmup_requests = 1;
  const Catalog cat(cfg.catalog, 1.0);
  Rng rng(1);
  const auto caches = warmup_caches(cfg, cat, rng);
  for (const auto& c : caches) CHECK(c.slots().size() == 1);

  cfg.cache_capacity = 10;  // capacity >= catalog: nothing is ever evicted
  cfg.warmup_requests = 500;
  Rng rng2(2);
  const auto big = warmup_caches(cfg, cat, rng2);
  for (const auto& c : big) {
    CHECK(static_cast<int>(c.slots().size()) == cfg.catalog);
  }
}

TEST_CASE("run_delivery_round: worked example costs 3 coded vs 5 unicast") {
  const Topology topo = example_topology();
  const std::vector<std::pair<int, int>> requests{{0, 3}, {1, 1}, {4, 4}};

  SimConfig cfg = example_config();
  auto caches = example_caches();
  const RoundResult coded = run_delivery_round(cfg, topo, caches, requests);
  CHECK(coded.transmissions == 3);
  CHECK(coded.satisfied.size() == 3);
  CHECK(coded.missed.empty());
  REQUIRE(coded.groups.size() == 1);
  CHECK(coded.groups[0].kind == GroupKind::CLIQUE);
  CHECK(coded.groups[0].tree_transmitters == 3);

  cfg.scheme = Scheme::UNICAST;
  auto caches2 = example_caches();
  const RoundResult plain = run_delivery_round(cfg, topo, caches2, requests);
  CHECK(plain.transmissions == 5);
  CHECK(plain.satisfied.size() == 3);
}

TEST_CASE("run_delivery_round: zero requests, self-hits, misses") {
  const Topology topo = example_topology();
  SimConfig cfg = example_config();
  auto caches = example_caches();

  CHECK(run_delivery_round(cfg, topo, caches, {}).transmissions == 0);

  // N1 already caches content 4: satisfied without transmissions
  const RoundResult self = run_delivery_round(cfg, topo, caches, {{0, 4}});
  CHECK(self.transmissions == 0);
  CHECK(self.satisfied.size() == 1);

  // a request beyond the hop budget is a miss
  cfg.max_hops = 1;
  auto caches2 = example_caches();
  const RoundResult miss = run_delivery_round(cfg, topo, caches2, {{4, 2}});
  CHECK(miss.transmissions == 0);
  CHECK(miss.missed.size() == 1);
}

TEST_CASE("run_delivery_round: conservation and coded-never-worse") {
  Rng rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    SimConfig cfg;
    cfg.n_uts = 60;
    cfg.catalog = 40;
    cfg.cache_capacity = 4;
    cfg.helpers = 2;
    cfg.max_hops = 4;
    cfg.payload_len = 32;
    cfg.warmup_requests = 30;
    cfg.strategy = Strategy::COLORING_THEN_CYCLES;

    Rng seed_rng(derive_seed(1234, trial));
    const Topology topo = generate_cell(cfg.n_uts, cfg.helpers, 400.0, 100.0, seed_rng);
    const Catalog cat(cfg.catalog, 1.2);
    auto caches = warmup_caches(cfg, cat, seed_rng);

    std::vector<std::pair<int, int>> requests;
    for (int ut = 0; ut < cfg.n_uts; ut += 2) requests.emplace_back(ut, cat.sample(seed_rng));

    auto coded_caches = caches;
    const RoundResult coded = run_delivery_round(cfg, topo, coded_caches, requests);
    CHECK(coded.satisfied.size() + coded.missed.size() == requests.size());

    SimConfig unicast_cfg = cfg;
    unicast_cfg.scheme = Scheme::UNICAST;
    auto unicast_caches = caches;
    const RoundResult plain = run_delivery_round(unicast_cfg, topo, unicast_caches, requests);
    CHECK(coded.transmissions <= plain.transmissions);
    CHECK(coded.satisfied.size() == plain.satisfied.size());
  }
}

TEST_CASE("experiment_coverage: determinism and monotone hop budgets") {
  SimConfig cfg = coverage_config();
  cfg.n_uts = 300;
  const auto rows = experiment_coverage(cfg, {4}, {1, 2, 3}, 8);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].coverage <= rows[1].coverage);
  CHECK(rows[1].coverage <= rows[2].coverage);
  for (const auto& r : rows) CHECK(r.seeds_used == 8);

  const auto again = experiment_coverage(cfg, {4}, {1, 2, 3}, 8);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].coverage == again[i].coverage);
    CHECK(rows[i].ci95 == again[i].ci95);
  }
}

TEST_CASE("experiment_contents_per_tx: sane range and determinism") {
  SimConfig cfg = gain_config();
  cfg.measure_rounds = 60;
  cfg.warmup_requests = 400;
  const auto rows = experiment_contents_per_tx(cfg, {1.2}, 3);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].contents_per_tx >= 1.0);
  CHECK(rows[0].contents_per_tx < 4.0);

  const auto again = experiment_contents_per_tx(cfg, {1.2}, 3);
  CHECK(rows[0].contents_per_tx == again[0].contents_per_tx);
}

TEST_CASE("experiment_helper_throughput: proposed beats baseline at q=0.1") {
  SimConfig proposed = throughput_proposed_config();
  SimConfig baseline = throughput_baseline_config();
  proposed.measure_rounds = 60;
  baseline.measure_rounds = 60;
  const auto rows = experiment_helper_throughput(proposed, baseline, {0.1}, 4);
  REQUIRE(rows.size() == 2);
  const auto& prop = rows[0];
  const auto& base = rows[1];
  CHECK(prop.experiment == "throughput-proposed");
  CHECK(base.experiment == "throughput-baseline");
  CHECK(prop.requests_per_slot_per_helper > base.requests_per_slot_per_helper);
}

TEST_CASE("demo report narrates the worked example") {
  const std::string text = demo_report();
  CHECK(text.find("coded: 3 transmissions") != std::string::npos);
  CHECK(text.find("uncoded: 5 transmissions") != std::string::npos);
  CHECK(text.find("N1 decodes M3") != std::string::npos);
  CHECK(text.find("N2 decodes M1") != std::string::npos);
  CHECK(text.find("N5 decodes M4") != std::string::npos);
  CHECK(text.find("verified bit-exact") != std::string::npos);
  CHECK(text.find("FAILED") == std::string::npos);
}
