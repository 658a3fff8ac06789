#include "gbkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gbkit::svg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label_for(const StaircaseDiagram::Corner& c, const VariableContext& vars) {
  std::string out;
  auto power = [&](std::size_t index, std::uint32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += vars.name(index);
    if (e > 1) out += "^" + std::to_string(e);
  };
  power(0, c.first);
  power(1, c.second);
  return out.empty() ? "1" : out;
}

}  // namespace

std::string staircase(const StaircaseDiagram& d, const VariableContext& vars, int cell_size) {
  if (vars.size() != 2) throw std::invalid_argument("staircase supports 2 variables");
  if (cell_size <= 0) throw std::invalid_argument("cell size must be positive");
  const int margin = 40;
  const int cols = static_cast<int>(d.width) + 1;
  const int rows = static_cast<int>(d.height) + 1;
  const int w = 2 * margin + cols * cell_size;
  const int h = 2 * margin + rows * cell_size;
  auto cell_x = [&](int u) { return margin + u * cell_size; };
  auto cell_y = [&](int v) { return margin + (rows - 1 - v) * cell_size; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h << "\" width=\"" << w
     << "\" height=\"" << h << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" style=\"fill:#ffffff\"/>\n";
  for (int v = 0; v < rows; ++v) {
    for (int u = 0; u < cols; ++u) {
      const bool inside = d.contains(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
      os << "<rect x=\"" << cell_x(u) << "\" y=\"" << cell_y(v) << "\" width=\"" << cell_size << "\" height=\""
         << cell_size << "\" style=\"fill:" << (inside ? "#9ecae1" : "#ffffff")
         << ";stroke:#bbbbbb;stroke-width:1\"/>\n";
    }
  }
  // Boundary of the ideal as a staircase polyline.
  if (!d.minimal_generators.empty()) {
    os << "<polyline style=\"fill:none;stroke:#08519c;stroke-width:3\" points=\"";
    const auto& gens = d.minimal_generators;
    const int top = margin;
    const int right = margin + cols * cell_size;
    os << cell_x(static_cast<int>(gens.front().first)) << ',' << top;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int x = cell_x(static_cast<int>(gens[i].first));
      const int y = cell_y(static_cast<int>(gens[i].second)) + cell_size;
      os << ' ' << x << ',' << y;
      const int next_x = (i + 1 < gens.size()) ? cell_x(static_cast<int>(gens[i + 1].first)) : right;
      os << ' ' << next_x << ',' << y;
    }
    os << "\"/>\n";
  }
  for (const auto& c : d.minimal_generators) {
    const int x = cell_x(static_cast<int>(c.first));
    const int y = cell_y(static_cast<int>(c.second)) + cell_size;
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" style=\"fill:#d62728\"/>\n";
    os << "<text x=\"" << x + 4 << "\" y=\"" << y - 6
       << "\" style=\"font-family:sans-serif;font-size:12px;fill:#d62728\">" << label_for(c, vars) << "</text>\n";
  }
  const int axis_y = margin + rows * cell_size;
  for (int u = 0; u < cols; ++u) {
    os << "<text x=\"" << cell_x(u) + cell_size / 2 << "\" y=\"" << axis_y + 16
       << "\" style=\"font-family:sans-serif;font-size:11px;text-anchor:middle\">" << u << "</text>\n";
  }
  for (int v = 0; v < rows; ++v) {
    os << "<text x=\"" << margin - 8 << "\" y=\"" << cell_y(v) + cell_size / 2 + 4
       << "\" style=\"font-family:sans-serif;font-size:11px;text-anchor:end\">" << v << "</text>\n";
  }
  os << "<text x=\"" << w / 2 << "\" y=\"" << h - 6
     << "\" style=\"font-family:sans-serif;font-size:14px;text-anchor:middle\">exponent of " << vars.name(0)
     << "</text>\n";
  os << "<text x=\"14\" y=\"" << h / 2 << "\" transform=\"rotate(-90 14 " << h / 2
     << ")\" style=\"font-family:sans-serif;font-size:14px;text-anchor:middle\">exponent of " << vars.name(1)
     << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string oscillator(std::span<const oscillator::Sample> samples, PlotSize size) {
  if (samples.size() < 2) throw std::invalid_argument("need at least two samples");
  if (size.width <= 0 || size.height <= 0) throw std::invalid_argument("plot size must be positive");
  const double margin_left = 60, margin_right = 20, margin_top = 20, margin_bottom = 50;
  const double plot_w = std::max(1.0, size.width - margin_left - margin_right);
  const double plot_h = std::max(1.0, size.height - margin_top - margin_bottom);

  const double t0 = samples.front().t;
  const double t1 = samples.back().t;
  double y_max = 0.0;
  for (const auto& s : samples) y_max = std::max({y_max, std::abs(s.y), s.env_hi});
  if (y_max == 0.0) y_max = 1.0;
  y_max *= 1.05;

  auto px = [&](double t) { return margin_left + (t - t0) / (t1 - t0) * plot_w; };
  auto py = [&](double y) { return margin_top + (y_max - y) / (2 * y_max) * plot_h; };
  auto polyline = [&](auto value, const std::string& style) {
    std::ostringstream os;
    os << "<polyline style=\"" << style << "\" points=\"";
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (i) os << ' ';
      os << num(px(samples[i].t)) << ',' << num(py(value(samples[i])));
    }
    os << "\"/>\n";
    return os.str();
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << size.width << ' ' << size.height
     << "\" width=\"" << size.width << "\" height=\"" << size.height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << size.width << "\" height=\"" << size.height
     << "\" style=\"fill:#ffffff\"/>\n";
  // Axes: time axis through y = 0, vertical axis at t0.
  os << "<line x1=\"" << num(px(t0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(t1)) << "\" y2=\""
     << num(py(0)) << "\" style=\"stroke:#000000;stroke-width:1\"/>\n";
  os << "<line x1=\"" << num(px(t0)) << "\" y1=\"" << num(margin_top) << "\" x2=\"" << num(px(t0))
     << "\" y2=\"" << num(margin_top + plot_h) << "\" style=\"stroke:#000000;stroke-width:1\"/>\n";
  const std::string font = "font-family:sans-serif;font-size:12px";
  os << "<text x=\"" << num(px(t1)) << "\" y=\"" << num(margin_top + plot_h + 18) << "\" style=\"" << font
     << ";text-anchor:end\">" << num(t1) << "</text>\n";
  os << "<text x=\"" << num(px(t0)) << "\" y=\"" << num(margin_top + plot_h + 18) << "\" style=\"" << font
     << ";text-anchor:middle\">" << num(t0) << "</text>\n";
  os << "<text x=\"" << num(margin_left - 6) << "\" y=\"" << num(py(y_max) + 12) << "\" style=\"" << font
     << ";text-anchor:end\">" << num(y_max) << "</text>\n";
  os << "<text x=\"" << num(margin_left - 6) << "\" y=\"" << num(py(-y_max)) << "\" style=\"" << font
     << ";text-anchor:end\">" << num(-y_max) << "</text>\n";
  os << "<text x=\"" << num(margin_left + plot_w / 2) << "\" y=\"" << size.height - 8 << "\" style=\"" << font
     << ";text-anchor:middle\">t (s)</text>\n";
  os << "<text x=\"14\" y=\"" << num(margin_top + plot_h / 2) << "\" transform=\"rotate(-90 14 "
     << num(margin_top + plot_h / 2) << ")\" style=\"" << font << ";text-anchor:middle\">y (m)</text>\n";

  os << polyline([](const auto& s) { return s.env_hi; },
                 "fill:none;stroke:#ff7f0e;stroke-width:1.5;stroke-dasharray:6 4");
  os << polyline([](const auto& s) { return s.env_lo; },
                 "fill:none;stroke:#ff7f0e;stroke-width:1.5;stroke-dasharray:6 4");
  os << polyline([](const auto& s) { return s.y; }, "fill:none;stroke:#1f77b4;stroke-width:2");
  os << "</svg>\n";
  return os.str();
}

}  // namespace gbkit::svg
