#include "core/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace qwtrap {

namespace {

const char* kPalette[] = {"#1b6ca8", "#c0392b", "#27ae60", "#8e44ad",
                          "#e67e22", "#16a085", "#2c3e50", "#d35400"};
constexpr int kPaletteSize = 8;

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[48];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range data_range(const std::vector<Series>& series, bool use_x) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& s : series) {
    const auto& v = use_x ? s.x : s.y;
    for (double value : v) {
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    }
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) return {0.0, 1.0};
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  return {lo, hi};
}

double nice_step(double span, int target_ticks) {
  const double raw = span / std::max(target_ticks - 1, 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step;
  if (norm < 1.5) {
    step = 1.0;
  } else if (norm < 3.5) {
    step = 2.0;
  } else if (norm < 7.5) {
    step = 5.0;
  } else {
    step = 10.0;
  }
  return step * mag;
}

std::vector<double> ticks_for(const Range& r, int target = 5) {
  const double step = nice_step(r.hi - r.lo, target);
  std::vector<double> ticks;
  double t = std::ceil(r.lo / step - 1e-9) * step;
  while (t <= r.hi + 1e-9 * step) {
    if (std::abs(t) < step * 1e-9) t = 0.0;
    ticks.push_back(t);
    t += step;
  }
  return ticks;
}

struct Frame {
  double x0, y0, w, h;  // plot rectangle in document coordinates
  Range xr, yr;

  double px(double x) const { return x0 + (x - xr.lo) / (xr.hi - xr.lo) * w; }
  double py(double y) const { return y0 + h - (y - yr.lo) / (yr.hi - yr.lo) * h; }
};

// Emits one framed panel (axes, ticks, series, optional legend) into `out`.
void emit_panel(std::string& out, const std::vector<Series>& series,
                const Frame& frame, const std::string& x_label,
                const std::string& y_label, bool legend, double font) {
  const std::string axis_color = "#333333";
  out += "<rect x=\"" + fmt(frame.x0) + "\" y=\"" + fmt(frame.y0) + "\" width=\"" +
         fmt(frame.w) + "\" height=\"" + fmt(frame.h) +
         "\" fill=\"#ffffff\" stroke=\"" + axis_color + "\" stroke-width=\"1\"/>\n";

  for (double t : ticks_for(frame.xr)) {
    const double x = frame.px(t);
    out += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(frame.y0 + frame.h) +
           "\" x2=\"" + fmt(x) + "\" y2=\"" + fmt(frame.y0 + frame.h + 5) +
           "\" stroke=\"" + axis_color + "\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(frame.y0 + frame.h + 6 + font) +
           "\" font-size=\"" + fmt(font) +
           "\" text-anchor=\"middle\" fill=\"" + axis_color + "\">" +
           fmt(t, "%g") + "</text>\n";
  }
  for (double t : ticks_for(frame.yr)) {
    const double y = frame.py(t);
    out += "<line x1=\"" + fmt(frame.x0 - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
           fmt(frame.x0) + "\" y2=\"" + fmt(y) + "\" stroke=\"" + axis_color +
           "\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + fmt(frame.x0 - 8) + "\" y=\"" + fmt(y + font * 0.35) +
           "\" font-size=\"" + fmt(font) + "\" text-anchor=\"end\" fill=\"" +
           axis_color + "\">" + fmt(t, "%g") + "</text>\n";
  }
  if (!x_label.empty()) {
    out += "<text x=\"" + fmt(frame.x0 + frame.w / 2) + "\" y=\"" +
           fmt(frame.y0 + frame.h + 14 + 2 * font) + "\" font-size=\"" +
           fmt(font * 1.1) + "\" text-anchor=\"middle\" fill=\"" + axis_color +
           "\">" + escape_xml(x_label) + "</text>\n";
  }
  if (!y_label.empty()) {
    const double lx = frame.x0 - 34 - font;
    const double ly = frame.y0 + frame.h / 2;
    out += "<text x=\"" + fmt(lx) + "\" y=\"" + fmt(ly) + "\" font-size=\"" +
           fmt(font * 1.1) + "\" text-anchor=\"middle\" transform=\"rotate(-90 " +
           fmt(lx) + " " + fmt(ly) + ")\" fill=\"" + axis_color + "\">" +
           escape_xml(y_label) + "</text>\n";
  }

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % kPaletteSize];
    if (s.x.size() >= 2) {
      out += "<polyline fill=\"none\" stroke=\"";
      out += color;
      out += "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (i) out += ' ';
        out += fmt(frame.px(s.x[i])) + "," + fmt(frame.py(s.y[i]));
      }
      out += "\"/>\n";
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      out += "<circle cx=\"" + fmt(frame.px(s.x[i])) + "\" cy=\"" +
             fmt(frame.py(s.y[i])) + "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
    }
  }

  if (legend && !series.empty()) {
    const double lh = font + 6;
    const double lx = frame.x0 + frame.w - 8;
    double ly = frame.y0 + frame.h - 8 - lh * static_cast<double>(series.size());
    for (std::size_t si = 0; si < series.size(); ++si) {
      const char* color = kPalette[si % kPaletteSize];
      ly += lh;
      out += "<line x1=\"" + fmt(lx - 150) + "\" y1=\"" + fmt(ly - font * 0.35) +
             "\" x2=\"" + fmt(lx - 130) + "\" y2=\"" + fmt(ly - font * 0.35) +
             "\" stroke=\"";
      out += color;
      out += "\" stroke-width=\"2\"/>\n";
      out += "<text x=\"" + fmt(lx - 124) + "\" y=\"" + fmt(ly) +
             "\" font-size=\"" + fmt(font) + "\" fill=\"#333333\">" +
             escape_xml(series[si].label) + "</text>\n";
    }
  }
}

void check_series(const std::vector<Series>& series) {
  if (series.empty()) {
    throw std::invalid_argument("chart needs at least one series");
  }
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) {
      throw std::invalid_argument("series '" + s.label +
                                  "' has mismatched x/y lengths");
    }
    if (s.x.empty()) {
      throw std::invalid_argument("series '" + s.label + "' is empty");
    }
  }
}

std::string document_open(int width, int height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) +
         "\" font-family=\"Helvetica, Arial, sans-serif\">\n"
         "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

}  // namespace

std::string render_chart(const std::vector<Series>& series,
                         const ChartOptions& options) {
  check_series(series);
  std::string out = document_open(options.width, options.height);
  if (!options.title.empty()) {
    out += "<text x=\"" + fmt(options.width / 2.0) +
           "\" y=\"20\" font-size=\"15\" text-anchor=\"middle\" "
           "fill=\"#111111\">" +
           escape_xml(options.title) + "</text>\n";
  }
  Frame frame;
  frame.x0 = 64;
  frame.y0 = options.title.empty() ? 18 : 34;
  frame.w = options.width - frame.x0 - 18;
  frame.h = options.height - frame.y0 - 52;
  frame.xr = data_range(series, true);
  frame.yr = data_range(series, false);
  emit_panel(out, series, frame, options.x_label, options.y_label, true, 11);
  out += "</svg>\n";
  return out;
}

std::string render_chart_with_inset(const std::vector<Series>& main_series,
                                    const ChartOptions& main_options,
                                    const std::vector<Series>& inset_series,
                                    const std::string& inset_y_label) {
  check_series(main_series);
  check_series(inset_series);
  std::string out = document_open(main_options.width, main_options.height);
  if (!main_options.title.empty()) {
    out += "<text x=\"" + fmt(main_options.width / 2.0) +
           "\" y=\"20\" font-size=\"15\" text-anchor=\"middle\" "
           "fill=\"#111111\">" +
           escape_xml(main_options.title) + "</text>\n";
  }
  Frame frame;
  frame.x0 = 64;
  frame.y0 = main_options.title.empty() ? 18 : 34;
  frame.w = main_options.width - frame.x0 - 18;
  frame.h = main_options.height - frame.y0 - 52;
  frame.xr = data_range(main_series, true);
  frame.yr = data_range(main_series, false);
  emit_panel(out, main_series, frame, main_options.x_label,
             main_options.y_label, true, 11);

  Frame inset;
  inset.w = frame.w * 0.42;
  inset.h = frame.h * 0.38;
  inset.x0 = frame.x0 + frame.w - inset.w - 16;
  inset.y0 = frame.y0 + 16;
  inset.xr = data_range(inset_series, true);
  inset.yr = data_range(inset_series, false);
  emit_panel(out, inset_series, inset, "", inset_y_label, false, 9);

  out += "</svg>\n";
  return out;
}

}  // namespace qwtrap
