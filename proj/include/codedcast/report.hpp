#pragma once

#include <string>
#include <vector>

#include "codedcast/sim.hpp"

namespace codedcast {

enum class PlotKind { COVERAGE, GAIN, THROUGHPUT };

/// CSV text: `# config: ...` header, column row, data rows ordered by the
/// swept parameter (and experiment id). Numbers use 6 significant digits;
/// output is a pure function of the inputs.
std::string csv_text(const std::string& resolved_config,
                     const std::vector<MetricsRow>& rows, PlotKind kind);

/// Standalone SVG line/scatter plot of the rows (no external assets).
/// Throws std::invalid_argument on empty rows.
std::string svg_text(const std::vector<MetricsRow>& rows, PlotKind kind);

void emit_csv(const std::string& path, const std::string& resolved_config,
              const std::vector<MetricsRow>& rows, PlotKind kind);
void emit_svg(const std::string& path, const std::vector<MetricsRow>& rows,
              PlotKind kind);

/// 6-significant-digit number formatting shared by CSV and stdout tables.
std::string format_number(double v);

}  // namespace codedcast
