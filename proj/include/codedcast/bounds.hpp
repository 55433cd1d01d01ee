#pragma once

namespace codedcast {

/// Riemann zeta for s > 1: harmonic(1e7, s) plus the integral tail
/// correction 1/((s-1) * 1e7^(s-1)); accurate to ~1e-8 for s >= 1.5.
/// Memoized per s.
double riemann_zeta(double s);

struct BoundParams {
  long long n = 0;       // terminals served by one helper
  long long m = 0;       // catalog size
  double s = 2.0;        // Zipf exponent, > 1
  double epsilon = 0.01; // head tail mass, in (0,1)
};

/// Edge count threshold (2d-1)v - 2d^2 + d above which a v-vertex graph
/// contains d disjoint cycles or 2d-1 vertices of degree v-1. Requires
/// d > 1 (throws); hypothesis_ok reports v >= 24d rather than rejecting.
struct EdgeThreshold {
  long long value = 0;
  bool hypothesis_ok = true;
};
EdgeThreshold erdos_edge_threshold(long long v, long long d);

/// Guaranteed disjoint-cycle count d* = floor(n p^2 / 24) for a directed
/// random graph with edge probability p, together with the self-checks
/// n(n-1)p^2 >= threshold(n, d*) and 24 d* <= n (applicable when d* > 1).
struct CycleFloor {
  long long d_star = 0;
  double expected_edges = 0.0;  // n(n-1)p^2
  long long threshold = 0;      // erdos_edge_threshold(n, d*) when applicable
  bool eq_holds = true;
  bool budget_ok = true;
  bool checks_applicable = false;
};
CycleFloor disjoint_cycle_floor(long long n, double p);
CycleFloor disjoint_cycle_floor(const BoundParams& params);

/// Lower bound on the expected number of k-cliques in the dependency graph:
/// C(n,k) * (h^(-ks) / zeta(s))^(k-1) with head h = ceil(epsilon^(-1/s)).
/// A count, not a probability: it can exceed 1. Independent of the catalog
/// size by construction.
double clique_count_floor(long long n, long long k, double s, double epsilon);

/// Chromatic number of G(n,p) with the o(1) term dropped:
/// -(1/2) ln(1-p) n / ln n.
double chromatic_estimate(long long n, double p);

/// Asymptotic reference for the index-coding gain of a coloring heuristic:
/// n + (1/2) (n / ln n) ln(p^2). Constant factors taken as 1; compare
/// trends, not exact values.
double gain_estimate(long long n, double p);
double gain_estimate(const BoundParams& params);

}  // namespace codedcast
