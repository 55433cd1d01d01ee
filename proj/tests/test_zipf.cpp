#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "codedcast/zipf.hpp"

using namespace codedcast;

TEST_CASE("harmonic: closed forms") {
  CHECK(harmonic(1, 2.0) == doctest::Approx(1.0));
  CHECK(harmonic(3, 1.0) == doctest::Approx(11.0 / 6.0).epsilon(1e-12));
  // tail beyond 1e6 is below 1e-6 for s=2
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  CHECK(std::abs(harmonic(1'000'000, 2.0) - zeta2) < 1e-6);
}

TEST_CASE("harmonic: rejects bad arguments") {
  CHECK_THROWS_AS(harmonic(0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(harmonic(10, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(harmonic(10, -1.0), std::invalid_argument);
}

TEST_CASE("pmf: degenerate and three-content catalogs") {
  const Catalog one(1, 2.0);
  CHECK(one.pmf(1) == doctest::Approx(1.0));

  const Catalog three(3, 1.0);
  CHECK(three.pmf(1) == doctest::Approx(6.0 / 11.0).epsilon(1e-12));
  CHECK(three.pmf(2) == doctest::Approx(3.0 / 11.0).epsilon(1e-12));
  CHECK_THROWS_AS(three.pmf(0), std::out_of_range);
  CHECK_THROWS_AS(three.pmf(4), std::out_of_range);
}

TEST_CASE("pmf: sums to one and strictly decreases") {
  for (const auto& [m, s] : {std::pair{100, 0.5}, {1000, 1.0}, {5000, 2.5}}) {
    const Catalog cat(m, s);
    double total = 0.0;
    for (int r = 1; r <= m; ++r) total += cat.pmf(r);
    CHECK(std::abs(total - 1.0) < 1e-9);
    for (int r = 2; r <= m; ++r) CHECK(cat.pmf(r) < cat.pmf(r - 1));
  }
}

TEST_CASE("sample: single content and determinism") {
  const Catalog one(1, 2.0);
  Rng rng(7);
  CHECK(one.sample(rng) == 1);

  const Catalog cat(50, 1.5);
  Rng a(123), b(123);
  for (int i = 0; i < 1000; ++i) CHECK(cat.sample(a) == cat.sample(b));
}

TEST_CASE("sample: empirical frequency matches pmf") {
  const Catalog cat(100, 2.0);
  Rng rng(99);
  const int draws = 1'000'000;
  int top = 0;
  for (int i = 0; i < draws; ++i) {
    if (cat.sample(rng) == 1) ++top;
  }
  const double freq = static_cast<double>(top) / draws;
  CHECK(std::abs(freq - cat.pmf(1)) < 0.01);
}

TEST_CASE("popular_head: anchors and rejection") {
  CHECK(popular_head(0.01, 2.0) == 100);
  CHECK(popular_head(0.25, 3.0) == 2);
  CHECK_THROWS_AS(popular_head(0.01, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(popular_head(0.01, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(popular_head(0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(popular_head(1.0, 2.0), std::invalid_argument);
}

TEST_CASE("popular_head: head mass covers 1 - epsilon for every catalog") {
  for (double eps : {0.5, 0.1, 0.01}) {
    for (double s : {1.5, 2.0, 3.0}) {
      const long long head = popular_head(eps, s);
      for (int m : {1000, 100000}) {
        const Catalog cat(m, s);
        double mass = 0.0;
        for (int r = 1; r <= std::min<long long>(head, m); ++r) mass += cat.pmf(r);
        CHECK(mass >= 1.0 - eps);
      }
    }
  }
}

TEST_CASE("edge_prob_floor: formula anchors") {
  // large catalog: normalizer approaches zeta(2)
  const double p = edge_prob_floor(0.01, 2.0, 1'000'000);
  CHECK(p == doctest::Approx(6.0793e-5).epsilon(1e-3));

  CHECK(edge_prob_floor(0.999999, 2.0, 1) == doctest::Approx(1.0).epsilon(1e-3));

  const double expected = std::pow(2.0, -3.0) / harmonic(10'000, 3.0);
  CHECK(edge_prob_floor(0.25, 3.0, 10'000) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("edge_prob_floor: nonincreasing in m, m-independent in the limit") {
  const double p3 = edge_prob_floor(0.01, 2.0, 1000);
  const double p5 = edge_prob_floor(0.01, 2.0, 100'000);
  const double p6 = edge_prob_floor(0.01, 2.0, 1'000'000);
  CHECK(p3 >= p5);
  CHECK(p5 >= p6);
  CHECK(std::abs(p5 - p6) < 1e-6);
}
