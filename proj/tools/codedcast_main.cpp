// codedcast command line: coverage / gain / throughput sweeps, closed-form
// bounds, and the worked six-terminal demo.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "codedcast/bounds.hpp"
#include "codedcast/report.hpp"
#include "codedcast/sim.hpp"
#include "codedcast/zipf.hpp"

namespace {

using namespace codedcast;

std::string describe(const SimConfig& c) {
  std::ostringstream os;
  os << "uts=" << c.n_uts << " catalog=" << c.catalog << " zipf-s=" << c.zipf_s
     << " cache=" << c.cache_capacity
     << " policy=" << (c.policy == CachePolicy::LRU ? "lru" : "lfu")
     << " helpers=" << c.helpers << " radius=" << c.cell_radius_m
     << " range=" << c.tx_range_m << " max-hops=" << c.max_hops
     << " strategy=" << to_string(c.strategy)
     << " max-cycle-len=" << c.max_cycle_len
     << " self-hits=" << (c.self_hit_mode == SelfHitMode::LOCAL ? "local" : "coded")
     << " seed=" << c.seed;
  return os.str();
}

void add_common_flags(CLI::App* cmd, SimConfig& cfg, int& seeds,
                      std::string& out_path, std::string& svg_path) {
  cmd->add_option("--uts", cfg.n_uts, "number of terminals")->check(CLI::PositiveNumber);
  cmd->add_option("--catalog", cfg.catalog, "content catalog size")->check(CLI::PositiveNumber);
  cmd->add_option("--cache", cfg.cache_capacity, "per-terminal cache slots")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--radius", cfg.cell_radius_m, "cell radius in meters")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--range", cfg.tx_range_m, "D2D transmission range in meters")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "base random seed");
  cmd->add_option("--seeds", seeds, "independent repetitions")->check(CLI::PositiveNumber);
  cmd->add_option("--out", out_path, "CSV output path");
  cmd->add_option("--svg", svg_path, "optional SVG plot path");
  const std::map<std::string, CachePolicy> policies{{"lru", CachePolicy::LRU},
                                                    {"lfu", CachePolicy::LFU}};
  cmd->add_option("--policy", cfg.policy, "cache replacement policy")
      ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case));
}

void finish(const std::string& out_path, const std::string& svg_path,
            const std::string& config, const std::vector<MetricsRow>& rows,
            PlotKind kind) {
  emit_csv(out_path, config, rows, kind);
  std::cout << csv_text(config, rows, kind);
  std::cout << "wrote " << out_path << "\n";
  if (!svg_path.empty()) {
    emit_svg(svg_path, rows, kind);
    std::cout << "wrote " << svg_path << "\n";
  }
}

int run_coverage(const SimConfig& cfg, const std::vector<int>& helper_counts,
                 int max_hops, int seeds, const std::string& out_path,
                 const std::string& svg_path, const std::string& dump_path) {
  std::vector<int> hop_values;
  for (int h = 0; h <= max_hops; ++h) hop_values.push_back(h);
  const auto rows = experiment_coverage(cfg, helper_counts, hop_values, seeds);

  std::ostringstream config;
  config << "experiment=coverage " << describe(cfg) << " seeds=" << seeds;
  finish(out_path, svg_path, config.str(), rows, PlotKind::COVERAGE);

  std::cout << "helpers max_hops covered not_covered\n";
  for (const auto& row : rows) {
    std::cout << row.helpers << ' ' << row.param << ' ' << format_number(row.coverage)
              << ' ' << format_number(1.0 - row.coverage) << "\n";
  }
  if (!dump_path.empty()) {
    Rng rng(cfg.seed);
    const Topology topo = generate_cell(cfg.n_uts, helper_counts.front(),
                                        cfg.cell_radius_m, cfg.tx_range_m, rng);
    std::ofstream out(dump_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + dump_path);
    dump_topology_csv(out, topo);
    std::cout << "wrote " << dump_path << "\n";
  }
  return 0;
}

int run_gain(SimConfig cfg, double s_min, double s_max, double s_step, int seeds,
             const std::string& out_path, const std::string& svg_path) {
  std::vector<double> s_values;
  for (double s = s_min; s <= s_max + 1e-9; s += s_step) s_values.push_back(s);
  const auto rows = experiment_contents_per_tx(cfg, s_values, seeds);

  std::ostringstream config;
  config << "experiment=gain " << describe(cfg) << " s-min=" << s_min
         << " s-max=" << s_max << " s-step=" << s_step << " seeds=" << seeds;
  finish(out_path, svg_path, config.str(), rows, PlotKind::GAIN);
  return 0;
}

int run_throughput(SimConfig proposed, SimConfig baseline, double q_min,
                   double q_max, double q_step, int seeds,
                   const std::string& out_path, const std::string& svg_path) {
  std::vector<double> q_values;
  for (double q = q_min; q <= q_max + 1e-9; q += q_step) q_values.push_back(q);
  const auto rows = experiment_helper_throughput(proposed, baseline, q_values, seeds);

  std::ostringstream config;
  config << "experiment=throughput proposed[" << describe(proposed) << "] baseline["
         << describe(baseline) << "] q-min=" << q_min << " q-max=" << q_max
         << " q-step=" << q_step << " seeds=" << seeds;
  finish(out_path, svg_path, config.str(), rows, PlotKind::THROUGHPUT);
  return 0;
}

int run_bounds(long long n, long long m, double s, double epsilon, long long v,
               long long d, long long k, double p) {
  const long long head = popular_head(epsilon, s);
  const double p_eps = edge_prob_floor(epsilon, s, m);
  std::cout << "h_eps(" << epsilon << ", " << s << ") = " << head << "\n";
  std::cout << "p_eps(" << epsilon << ", " << s << ", m=" << m
            << ") = " << format_number(p_eps) << "\n";

  const double p_used = p > 0.0 ? p : p_eps;
  const CycleFloor floor = disjoint_cycle_floor(n, p_used);
  std::cout << "d_star(n=" << n << ", p=" << format_number(p_used)
            << ") = " << floor.d_star;
  if (floor.checks_applicable) {
    std::cout << "  [n(n-1)p^2 = " << format_number(floor.expected_edges)
              << (floor.eq_holds ? " >= " : " < ") << floor.threshold
              << ", 24*d_star " << (floor.budget_ok ? "<=" : ">") << " n]";
  }
  std::cout << "\n";

  if (d > 1) {
    const EdgeThreshold f = erdos_edge_threshold(v, d);
    std::cout << "f(v=" << v << ", d=" << d << ") = " << f.value
              << (f.hypothesis_ok ? "" : "  [warning: v < 24d]") << "\n";
  }
  std::cout << "clique_count_floor(n=" << n << ", k=" << k << ", s=" << s
            << ", eps=" << epsilon
            << ") = " << format_number(clique_count_floor(n, k, s, epsilon)) << "\n";
  if (p_used > 0.0 && p_used < 1.0) {
    std::cout << "chromatic_estimate(n=" << n << ", p=" << format_number(p_used)
              << ") = " << format_number(chromatic_estimate(n, p_used)) << "\n";
  }
  std::cout << "gain_estimate(n=" << n << ", p=" << format_number(p_used)
            << ") = " << format_number(gain_estimate(n, p_used)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-cell coded multicast simulator"};
  app.require_subcommand(1);

  // coverage
  SimConfig cov_cfg = coverage_config();
  std::vector<int> helper_counts{4};
  int cov_hops = 5;
  int cov_seeds = 50;
  std::string cov_out = "coverage.csv", cov_svg, cov_dump;
  auto* cov = app.add_subcommand("coverage", "multihop coverage vs helper count");
  add_common_flags(cov, cov_cfg, cov_seeds, cov_out, cov_svg);
  cov->add_option("--helpers", helper_counts, "helper counts to sweep")
      ->check(CLI::PositiveNumber);
  cov->add_option("--max-hops", cov_hops, "largest hop budget")->check(CLI::NonNegativeNumber);
  cov->add_option("--dump-topology", cov_dump, "write one sample topology CSV");

  // gain (contents per transmission vs s)
  SimConfig gain_cfg = gain_config();
  double s_min = 0.1, s_max = 4.0, s_step = 0.1;
  int gain_seeds = 30;
  std::string gain_out = "gain.csv", gain_svg;
  auto* gain = app.add_subcommand("gain", "contents per coded transmission vs Zipf s");
  add_common_flags(gain, gain_cfg, gain_seeds, gain_out, gain_svg);
  gain->add_option("--s-min", s_min)->check(CLI::PositiveNumber);
  gain->add_option("--s-max", s_max)->check(CLI::PositiveNumber);
  gain->add_option("--s-step", s_step)->check(CLI::PositiveNumber);
  gain->add_option("--rounds", gain_cfg.measure_rounds, "measured delivery rounds")
      ->check(CLI::PositiveNumber);
  gain->add_option("--round-slots", gain_cfg.round_slots, "slots folded into one round")
      ->check(CLI::PositiveNumber);
  gain->add_option("--warmup", gain_cfg.warmup_requests, "warm-up requests per terminal")
      ->check(CLI::PositiveNumber);
  const std::map<std::string, SelfHitMode> self_modes{{"local", SelfHitMode::LOCAL},
                                                      {"coded", SelfHitMode::CODED}};
  gain->add_option("--self-hits", gain_cfg.self_hit_mode,
                   "serve own-cache requests locally or through the code")
      ->transform(CLI::CheckedTransformer(self_modes, CLI::ignore_case));
  const std::map<std::string, Strategy> strategies{
      {"coloring", Strategy::COLORING},
      {"cycles", Strategy::CYCLES},
      {"coloring+cycles", Strategy::COLORING_THEN_CYCLES}};
  gain->add_option("--strategy", gain_cfg.strategy, "code construction strategy")
      ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
  gain->add_option("--max-cycle-len", gain_cfg.max_cycle_len)->check(CLI::Range(2, 16));

  // throughput (proposed vs baseline)
  SimConfig thr_prop = throughput_proposed_config();
  SimConfig thr_base = throughput_baseline_config();
  double q_min = 0.05, q_max = 0.3, q_step = 0.05;
  int thr_seeds = 30;
  std::string thr_out = "throughput.csv", thr_svg;
  auto* thr = app.add_subcommand("throughput",
                                 "requests satisfied per slot per helper vs request probability");
  add_common_flags(thr, thr_prop, thr_seeds, thr_out, thr_svg);
  thr->add_option("--q-min", q_min)->check(CLI::Range(0.0, 1.0));
  thr->add_option("--q-max", q_max)->check(CLI::Range(0.0, 1.0));
  thr->add_option("--q-step", q_step)->check(CLI::PositiveNumber);
  thr->add_option("--slots", thr_prop.measure_rounds, "measured slots")
      ->check(CLI::PositiveNumber);
  thr->add_option("--helpers", thr_prop.helpers, "proposed-scheme helper count")
      ->check(CLI::PositiveNumber);
  thr->add_option("--max-hops", thr_prop.max_hops, "proposed-scheme hop budget")
      ->check(CLI::PositiveNumber);
  thr->add_option("--baseline-helpers", thr_base.helpers, "baseline helper count")
      ->check(CLI::PositiveNumber);
  thr->add_option("--window", thr_prop.coding_window, "coding window per helper")
      ->check(CLI::PositiveNumber);

  // bounds
  long long b_n = 1000, b_m = 100000, b_v = 1000, b_d = 3, b_k = 3;
  double b_s = 2.0, b_eps = 0.01, b_p = 0.0;
  auto* bnd = app.add_subcommand("bounds", "closed-form reference quantities");
  bnd->add_option("--n", b_n)->check(CLI::PositiveNumber);
  bnd->add_option("--m", b_m)->check(CLI::PositiveNumber);
  bnd->add_option("--s", b_s)->check(CLI::PositiveNumber);
  bnd->add_option("--epsilon", b_eps)->check(CLI::Range(0.0, 1.0));
  bnd->add_option("--v", b_v)->check(CLI::PositiveNumber);
  bnd->add_option("--d", b_d)->check(CLI::PositiveNumber);
  bnd->add_option("--k", b_k)->check(CLI::PositiveNumber);
  bnd->add_option("--p", b_p, "override the edge probability")->check(CLI::Range(0.0, 1.0));

  // demo
  auto* demo = app.add_subcommand("demo", "worked six-terminal example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (cov->parsed()) {
      return run_coverage(cov_cfg, helper_counts, cov_hops, cov_seeds, cov_out,
                          cov_svg, cov_dump);
    }
    if (gain->parsed()) {
      return run_gain(gain_cfg, s_min, s_max, s_step, gain_seeds, gain_out, gain_svg);
    }
    if (thr->parsed()) {
      thr_base.n_uts = thr_prop.n_uts;
      thr_base.catalog = thr_prop.catalog;
      thr_base.cache_capacity = thr_prop.cache_capacity;
      thr_base.policy = thr_prop.policy;
      thr_base.cell_radius_m = thr_prop.cell_radius_m;
      thr_base.tx_range_m = thr_prop.tx_range_m;
      thr_base.measure_rounds = thr_prop.measure_rounds;
      thr_base.seed = thr_prop.seed;
      return run_throughput(thr_prop, thr_base, q_min, q_max, q_step, thr_seeds,
                            thr_out, thr_svg);
    }
    if (bnd->parsed()) {
      return run_bounds(b_n, b_m, b_s, b_eps, b_v, b_d, b_k, b_p);
    }
    if (demo->parsed()) {
      std::cout << codedcast::demo_report();
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
