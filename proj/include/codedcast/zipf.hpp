#pragma once

#include <vector>

#include "codedcast/rng.hpp"

namespace codedcast {

/// Generalized harmonic number H_{m,s} = sum_{j=1..m} j^{-s}, accumulated
/// from the smallest terms up (j descending) to bound rounding error.
/// Throws std::invalid_argument for m == 0 or s <= 0.
double harmonic(long long m, double s);

/// Smallest head size h such that a Zipf(s) request falls within the h most
/// popular contents with probability at least 1 - epsilon, for every catalog
/// size: ceil(epsilon^(1/(1-s))). Requires s > 1 and epsilon in (0,1).
long long popular_head(double epsilon, double s);

/// Lower bound on the dependency-edge probability induced by the popular
/// head: popular_head(epsilon,s)^(-s) / H_{m,s}.
double edge_prob_floor(double epsilon, double s, long long m);

/// Content universe with Zipf(s) request popularity over ranks 1..m.
/// Immutable after construction; sampling uses a caller-owned Rng.
class Catalog {
 public:
  Catalog(int m, double s);

  int size() const { return m_; }
  double exponent() const { return s_; }
  double harmonic_norm() const { return h_norm_; }

  /// Request probability of `rank`; throws std::out_of_range outside 1..m.
  double pmf(int rank) const;

  /// Inverse-CDF sample over the precomputed cumulative table.
  int sample(Rng& rng) const;

 private:
  int m_;
  double s_;
  double h_norm_;
  std::vector<double> cdf_;
};

}  // namespace codedcast
