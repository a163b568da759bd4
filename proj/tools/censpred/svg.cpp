#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace censpred::cli {

namespace {

constexpr double kSize = 600.0;
constexpr double kMargin = 60.0;

struct Axes {
  double x0, x1, y0, y1;
  double px(double x) const {
    return kMargin + (x - x0) / (x1 - x0) * (kSize - 2 * kMargin);
  }
  double py(double y) const {
    return kSize - kMargin - (y - y0) / (y1 - y0) * (kSize - 2 * kMargin);
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void open_svg(std::ostringstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" "
         "height=\"600\" viewBox=\"0 0 600 600\">\n"
      << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
}

void draw_axes(std::ostringstream& out, const Axes& ax,
               const std::string& x_label, const std::string& y_label) {
  out << "<line x1=\"" << num(ax.px(ax.x0)) << "\" y1=\"" << num(ax.py(ax.y0))
      << "\" x2=\"" << num(ax.px(ax.x1)) << "\" y2=\"" << num(ax.py(ax.y0))
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(ax.px(ax.x0)) << "\" y1=\"" << num(ax.py(ax.y0))
      << "\" x2=\"" << num(ax.px(ax.x0)) << "\" y2=\"" << num(ax.py(ax.y1))
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double x = ax.x0 + (ax.x1 - ax.x0) * i / 5.0;
    const double y = ax.y0 + (ax.y1 - ax.y0) * i / 5.0;
    out << "<line x1=\"" << num(ax.px(x)) << "\" y1=\"" << num(ax.py(ax.y0))
        << "\" x2=\"" << num(ax.px(x)) << "\" y2=\""
        << num(ax.py(ax.y0) + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(ax.px(x)) << "\" y=\""
        << num(ax.py(ax.y0) + 20)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << num(x)
        << "</text>\n";
    out << "<line x1=\"" << num(ax.px(ax.x0)) << "\" y1=\"" << num(ax.py(y))
        << "\" x2=\"" << num(ax.px(ax.x0) - 5) << "\" y2=\"" << num(ax.py(y))
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(ax.px(ax.x0) - 8) << "\" y=\""
        << num(ax.py(y) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << num(y)
        << "</text>\n";
  }
  out << "<text x=\"" << num(kSize / 2) << "\" y=\"" << num(kSize - 15)
      << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label
      << "</text>\n";
  out << "<text x=\"15\" y=\"" << num(kSize / 2)
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "15 "
      << num(kSize / 2) << ")\">" << y_label << "</text>\n";
}

}  // namespace

std::string svg_half_space(const HalfSpaceRegion& region) {
  if (region.dim() != 2)
    throw std::invalid_argument("svg_half_space: 2D regions only");
  if (region.frame != Frame::spacings)
    throw std::invalid_argument(
        "svg_half_space: spacing-coordinate regions only");
  const double x_max = region.bound / region.coefficients[0];
  const double y_max = region.bound / region.coefficients[1];
  Axes ax{0.0, 1.15 * x_max, 0.0, 1.15 * y_max};
  std::ostringstream out;
  open_svg(out);
  out << "<polygon points=\"" << num(ax.px(0)) << ',' << num(ax.py(0)) << ' '
      << num(ax.px(x_max)) << ',' << num(ax.py(0)) << ' ' << num(ax.px(0))
      << ',' << num(ax.py(y_max))
      << "\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\" "
         "stroke-width=\"1.5\"/>\n";
  draw_axes(out, ax, "z1", "z2");
  out << "</svg>\n";
  return out.str();
}

std::string svg_band(const BandRegion& region,
                     const std::vector<double>& mean_curve,
                     const std::string& x_label, const std::string& y_label) {
  if (region.grid.size() < 2)
    throw std::invalid_argument("svg_band: need at least two grid nodes");
  double y_max = 0.0, y_min = region.slices.front().lo;
  for (const Interval& s : region.slices) {
    y_max = std::max(y_max, s.hi);
    y_min = std::min(y_min, s.lo);
  }
  for (double v : mean_curve) y_max = std::max(y_max, v);
  const double span_x = region.a.hi - region.a.lo;
  Axes ax{region.a.lo - 0.05 * span_x, region.a.hi + 0.05 * span_x,
          std::min(0.0, y_min), 1.1 * y_max};
  if (ax.x1 == ax.x0) ax.x1 = ax.x0 + 1.0;

  std::ostringstream out;
  open_svg(out);
  out << "<polygon points=\"";
  for (std::size_t k = 0; k < region.grid.size(); ++k)
    out << num(ax.px(region.grid[k])) << ',' << num(ax.py(region.slices[k].hi))
        << ' ';
  for (std::size_t k = region.grid.size(); k-- > 0;)
    out << num(ax.px(region.grid[k])) << ',' << num(ax.py(region.slices[k].lo))
        << (k == 0 ? "" : " ");
  out << "\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\" "
         "stroke-width=\"1.5\"/>\n";
  if (mean_curve.size() == region.grid.size()) {
    out << "<polyline points=\"";
    for (std::size_t k = 0; k < region.grid.size(); ++k)
      out << num(ax.px(region.grid[k])) << ',' << num(ax.py(mean_curve[k]))
          << (k + 1 == region.grid.size() ? "" : " ");
    out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6 4\"/>\n";
  }
  draw_axes(out, ax, x_label, y_label);
  out << "</svg>\n";
  return out.str();
}

}  // namespace censpred::cli
