#include <doctest.h>

#include <stdexcept>

#include "codedcast/report.hpp"

using namespace codedcast;

namespace {

MetricsRow coverage_row(int helpers, double hops, double coverage) {
  MetricsRow row;
  row.experiment = "coverage";
  row.helpers = helpers;
  row.param = hops;
  row.coverage = coverage;
  row.ci95 = 0.01;
  row.seeds_used = 50;
  return row;
}

}  // namespace

TEST_CASE("csv: declared coverage schema and config header") {
  const std::vector<MetricsRow> rows{coverage_row(4, 2, 0.8), coverage_row(4, 3, 0.99)};
  const std::string text = csv_text("experiment=coverage seed=42", rows, PlotKind::COVERAGE);
  CHECK(text.find("# config: experiment=coverage seed=42\n") == 0);
  CHECK(text.find("helpers,max_hops,coverage_mean,coverage_ci95,seeds\n") != std::string::npos);
  CHECK(text.find("4,2,0.8,0.01,50\n") != std::string::npos);
  CHECK(text.find("4,3,0.99,0.01,50\n") != std::string::npos);
}

TEST_CASE("csv: empty rows produce a header-only file") {
  const std::string text = csv_text("cfg", {}, PlotKind::GAIN);
  CHECK(text == "# config: cfg\ns,contents_per_tx_mean,contents_per_tx_ci95,seeds\n");
}

TEST_CASE("csv: deterministic ordering by experiment then parameter") {
  std::vector<MetricsRow> rows;
  MetricsRow a;
  a.experiment = "throughput-proposed";
  a.param = 0.2;
  a.requests_per_slot_per_helper = 2.0;
  MetricsRow b = a;
  b.param = 0.1;
  b.requests_per_slot_per_helper = 1.0;
  MetricsRow c = a;
  c.experiment = "throughput-baseline";
  c.param = 0.2;
  c.requests_per_slot_per_helper = 0.5;
  rows = {a, b, c};
  const std::string text = csv_text("cfg", rows, PlotKind::THROUGHPUT);
  const auto baseline_pos = text.find("throughput-baseline");
  const auto q1_pos = text.find("0.1,throughput-proposed");
  const auto q2_pos = text.find("0.2,throughput-proposed");
  REQUIRE(baseline_pos != std::string::npos);
  REQUIRE(q1_pos != std::string::npos);
  REQUIRE(q2_pos != std::string::npos);
  CHECK(baseline_pos < q1_pos);
  CHECK(q1_pos < q2_pos);

  CHECK(csv_text("cfg", rows, PlotKind::THROUGHPUT) == text);  // byte-identical
}

TEST_CASE("svg: renders axes, series, and markers") {
  const std::vector<MetricsRow> rows{coverage_row(4, 1, 0.25), coverage_row(4, 2, 0.8),
                                     coverage_row(4, 3, 0.99)};
  const std::string svg = svg_text(rows, PlotKind::COVERAGE);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("max hops") != std::string::npos);
  CHECK(svg.find("not covered") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("svg: single point is still a valid plot") {
  const std::string svg = svg_text({coverage_row(1, 2, 0.5)}, PlotKind::COVERAGE);
  CHECK(svg.find("<circle") != std::string::npos);
}

TEST_CASE("svg: empty rows rejected") {
  CHECK_THROWS_AS(svg_text({}, PlotKind::GAIN), std::invalid_argument);
}
