#include "codedcast/bounds.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "codedcast/zipf.hpp"

namespace codedcast {

double riemann_zeta(double s) {
  if (s <= 1.0) throw std::invalid_argument("riemann_zeta: s must be > 1");
  static std::map<double, double> memo;
  const auto it = memo.find(s);
  if (it != memo.end()) return it->second;
  constexpr long long kTerms = 10'000'000;
  const double tail = 1.0 / ((s - 1.0) * std::pow(static_cast<double>(kTerms), s - 1.0));
  const double value = harmonic(kTerms, s) + tail;
  memo.emplace(s, value);
  return value;
}

EdgeThreshold erdos_edge_threshold(long long v, long long d) {
  if (d <= 1) throw std::invalid_argument("erdos_edge_threshold: d must be > 1");
  EdgeThreshold result;
  result.value = (2 * d - 1) * v - 2 * d * d + d;
  result.hypothesis_ok = v >= 24 * d;
  return result;
}

CycleFloor disjoint_cycle_floor(long long n, double p) {
  CycleFloor result;
  result.d_star = static_cast<long long>(std::floor(n * p * p / 24.0 + 1e-9));
  result.expected_edges = static_cast<double>(n) * (n - 1) * p * p;
  result.checks_applicable = result.d_star > 1;
  if (result.checks_applicable) {
    const EdgeThreshold f = erdos_edge_threshold(n, result.d_star);
    result.threshold = f.value;
    result.eq_holds = result.expected_edges >= static_cast<double>(f.value);
    result.budget_ok = 24 * result.d_star <= n;
  }
  return result;
}

CycleFloor disjoint_cycle_floor(const BoundParams& params) {
  return disjoint_cycle_floor(params.n, edge_prob_floor(params.epsilon, params.s, params.m));
}

namespace {

double binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0.0;
  double value = 1.0;
  for (long long i = 1; i <= k; ++i) {
    value *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return value;
}

}  // namespace

double clique_count_floor(long long n, long long k, double s, double epsilon) {
  if (s <= 1.0) throw std::invalid_argument("clique_count_floor: s must be > 1");
  if (epsilon <= 0.0 || epsilon >= 1.0)
    throw std::invalid_argument("clique_count_floor: epsilon must be in (0,1)");
  if (k < 2) throw std::invalid_argument("clique_count_floor: k must be >= 2");
  if (k > n) return 0.0;
  // ceil with a relative nudge so exact-integer heads survive pow rounding
  const double raw = std::pow(epsilon, -1.0 / s);
  const double head = std::ceil(raw * (1.0 - 1e-12));
  const double factor = std::pow(head, -static_cast<double>(k) * s) / riemann_zeta(s);
  return binomial(n, k) * std::pow(factor, static_cast<double>(k - 1));
}

double chromatic_estimate(long long n, double p) {
  if (n < 2) throw std::invalid_argument("chromatic_estimate: n must be >= 2");
  if (p <= 0.0 || p >= 1.0)
    throw std::invalid_argument("chromatic_estimate: p must be in (0,1)");
  return -0.5 * std::log1p(-p) * static_cast<double>(n) / std::log(static_cast<double>(n));
}

double gain_estimate(long long n, double p) {
  if (n < 2) throw std::invalid_argument("gain_estimate: n must be >= 2");
  if (p <= 0.0 || p > 1.0)
    throw std::invalid_argument("gain_estimate: p must be in (0,1]");
  const double nn = static_cast<double>(n);
  return nn + 0.5 * (nn / std::log(nn)) * std::log(p * p);
}

double gain_estimate(const BoundParams& params) {
  return gain_estimate(params.n, edge_prob_floor(params.epsilon, params.s, params.m));
}

}  // namespace codedcast
