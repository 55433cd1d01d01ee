#include "codedcast/zipf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace codedcast {

double harmonic(long long m, double s) {
  if (m < 1) throw std::invalid_argument("harmonic: m must be >= 1");
  if (s <= 0.0) throw std::invalid_argument("harmonic: s must be > 0");
  double sum = 0.0;
  for (long long j = m; j >= 1; --j) {
    sum += std::pow(static_cast<double>(j), -s);
  }
  return sum;
}

long long popular_head(double epsilon, double s) {
  if (epsilon <= 0.0 || epsilon >= 1.0)
    throw std::invalid_argument("popular_head: epsilon must be in (0,1)");
  if (s <= 1.0)
    throw std::invalid_argument("popular_head: s must be > 1");
  const double h = std::pow(epsilon, 1.0 / (1.0 - s));
  if (!std::isfinite(h) || h >= 9.0e18)
    throw std::domain_error("popular_head: head size not representable");
  // ceil with a relative nudge so exact-integer heads survive pow rounding
  return static_cast<long long>(std::ceil(h * (1.0 - 1e-12)));
}

double edge_prob_floor(double epsilon, double s, long long m) {
  const long long h = popular_head(epsilon, s);
  return std::pow(static_cast<double>(h), -s) / harmonic(m, s);
}

Catalog::Catalog(int m, double s) : m_(m), s_(s) {
  if (m < 1) throw std::invalid_argument("Catalog: m must be >= 1");
  if (s <= 0.0) throw std::invalid_argument("Catalog: s must be > 0");
  h_norm_ = harmonic(m, s);
  cdf_.resize(m);
  double acc = 0.0;
  for (int j = 1; j <= m; ++j) {
    acc += std::pow(static_cast<double>(j), -s) / h_norm_;
    cdf_[j - 1] = acc;
  }
  cdf_[m - 1] = 1.0;  // close the table against rounding
}

double Catalog::pmf(int rank) const {
  if (rank < 1 || rank > m_) throw std::out_of_range("Catalog::pmf: rank out of range");
  return std::pow(static_cast<double>(rank), -s_) / h_norm_;
}

int Catalog::sample(Rng& rng) const {
  const double u = rng.uniform01();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto idx = static_cast<int>(it - cdf_.begin());
  return std::min(idx, m_ - 1) + 1;
}

}  // namespace codedcast
