#include "codedcast/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace codedcast {

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

namespace {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y)
};

double row_metric(const MetricsRow& row, PlotKind kind) {
  switch (kind) {
    case PlotKind::COVERAGE: return 1.0 - row.coverage;  // fraction not covered
    case PlotKind::GAIN: return row.contents_per_tx;
    case PlotKind::THROUGHPUT: return row.requests_per_slot_per_helper;
  }
  return 0.0;
}

std::vector<Series> collect_series(const std::vector<MetricsRow>& rows, PlotKind kind) {
  std::vector<Series> series;
  const auto find = [&series](const std::string& label) -> Series& {
    for (auto& s : series) {
      if (s.label == label) return s;
    }
    series.push_back({label, {}});
    return series.back();
  };
  for (const auto& row : rows) {
    std::string label = row.experiment;
    if (kind == PlotKind::COVERAGE) label += " k=" + std::to_string(row.helpers);
    find(label).points.emplace_back(row.param, row_metric(row, kind));
  }
  for (auto& s : series) std::sort(s.points.begin(), s.points.end());
  return series;
}

}  // namespace

std::string csv_text(const std::string& resolved_config,
                     const std::vector<MetricsRow>& rows, PlotKind kind) {
  std::ostringstream os;
  os << "# config: " << resolved_config << "\n";
  std::vector<MetricsRow> sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const MetricsRow& a, const MetricsRow& b) {
                     if (a.experiment != b.experiment) return a.experiment < b.experiment;
                     if (a.helpers != b.helpers) return a.helpers < b.helpers;
                     return a.param < b.param;
                   });
  switch (kind) {
    case PlotKind::COVERAGE:
      os << "helpers,max_hops,coverage_mean,coverage_ci95,seeds\n";
      for (const auto& r : sorted) {
        os << r.helpers << ',' << format_number(r.param) << ','
           << format_number(r.coverage) << ',' << format_number(r.ci95) << ','
           << r.seeds_used << "\n";
      }
      break;
    case PlotKind::GAIN:
      os << "s,contents_per_tx_mean,contents_per_tx_ci95,seeds\n";
      for (const auto& r : sorted) {
        os << format_number(r.param) << ',' << format_number(r.contents_per_tx)
           << ',' << format_number(r.ci95) << ',' << r.seeds_used << "\n";
      }
      break;
    case PlotKind::THROUGHPUT:
      os << "q,scheme,helpers,satisfied_per_slot_per_helper_mean,ci95,misses_mean,seeds\n";
      for (const auto& r : sorted) {
        os << format_number(r.param) << ',' << r.experiment << ',' << r.helpers
           << ',' << format_number(r.requests_per_slot_per_helper) << ','
           << format_number(r.ci95) << ',' << r.misses << ',' << r.seeds_used
           << "\n";
      }
      break;
  }
  return os.str();
}

std::string svg_text(const std::vector<MetricsRow>& rows, PlotKind kind) {
  if (rows.empty()) throw std::invalid_argument("svg_text: no rows to plot");

  const char* x_label = "";
  const char* y_label = "";
  switch (kind) {
    case PlotKind::COVERAGE:
      x_label = "max hops";
      y_label = "fraction of UTs not covered";
      break;
    case PlotKind::GAIN:
      x_label = "Zipf exponent s";
      y_label = "contents per transmission";
      break;
    case PlotKind::THROUGHPUT:
      x_label = "request probability";
      y_label = "requests satisfied per slot per helper";
      break;
  }

  const std::vector<Series> series = collect_series(rows, kind);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  constexpr double W = 640, H = 420, L = 70, R = 20, T = 20, B = 50;
  const auto sx = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  const auto sy = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#8c564b", "#e377c2"};

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
     << H << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << (W - L - R)
     << "\" height=\"" << (H - T - B)
     << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 5.0;
    const double fy = ymin + (ymax - ymin) * i / 5.0;
    os << "<text x=\"" << sx(fx) << "\" y=\"" << (H - B + 18)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << format_number(fx)
       << "</text>\n";
    os << "<text x=\"" << (L - 8) << "\" y=\"" << (sy(fy) + 4)
       << "\" font-size=\"11\" text-anchor=\"end\">" << format_number(fy)
       << "</text>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << sy(fy) << "\" x2=\"" << (W - R)
       << "\" y2=\"" << sy(fy) << "\" stroke=\"#ddd\" stroke-width=\"0.5\"/>\n";
  }
  os << "<text x=\"" << (L + (W - L - R) / 2) << "\" y=\"" << (H - 12)
     << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label << "</text>\n";
  os << "<text x=\"16\" y=\"" << (T + (H - T - B) / 2)
     << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << (T + (H - T - B) / 2) << ")\">" << y_label << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const char* color = kColors[si % 6];
    os << "<polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[si].points) os << sx(x) << ',' << sy(y) << ' ';
    os << "\"/>\n";
    for (const auto& [x, y] : series[si].points) {
      os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"2.5\" fill=\""
         << color << "\"/>\n";
    }
    os << "<text x=\"" << (L + 10) << "\" y=\"" << (T + 16 + 16 * si)
       << "\" font-size=\"12\" fill=\"" << color << "\">" << series[si].label
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void emit_csv(const std::string& path, const std::string& resolved_config,
              const std::vector<MetricsRow>& rows, PlotKind kind) {
  write_file(path, csv_text(resolved_config, rows, kind));
}

void emit_svg(const std::string& path, const std::vector<MetricsRow>& rows,
              PlotKind kind) {
  write_file(path, svg_text(rows, kind));
}

}  // namespace codedcast
