#pragma once

#include <string>
#include <vector>

namespace qwtrap {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartOptions {
  int width = 760;
  int height = 520;
  std::string title;
  std::string x_label;
  std::string y_label;
};

// Standalone SVG 1.1 document: polylines with point markers, axis ticks and
// a legend. Output bytes are a pure function of the input. Single-point
// series render as a marker without a polyline. Throws std::invalid_argument
// when `series` is empty or a series has mismatched x/y lengths.
std::string render_chart(const std::vector<Series>& series,
                         const ChartOptions& options);

// Chart with a second panel drawn as an inset (upper-right of the plot area).
std::string render_chart_with_inset(const std::vector<Series>& main_series,
                                    const ChartOptions& main_options,
                                    const std::vector<Series>& inset_series,
                                    const std::string& inset_y_label);

}  // namespace qwtrap
