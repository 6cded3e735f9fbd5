#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace gcolor::svg {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 80;
constexpr double kRight = 170;
constexpr double kTop = 40;
constexpr double kBottom = 60;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  if (v != 0.0 && (std::abs(v) >= 1e5 || std::abs(v) < 1e-2)) {
    std::snprintf(buf, sizeof buf, "%.0e", v);
  } else {
    std::snprintf(buf, sizeof buf, "%g", v);
  }
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

void header(std::ostringstream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(title) << "</text>\n";
}

struct Axis {
  double lo;
  double hi;
  bool log;

  double map(double v, double pixel_lo, double pixel_hi) const {
    const double a = log ? std::log10(lo) : lo;
    const double b = log ? std::log10(hi) : hi;
    const double t = ((log ? std::log10(v) : v) - a) / (b - a);
    return pixel_lo + t * (pixel_hi - pixel_lo);
  }
};

}  // namespace

std::string render(const LinePlot& plot) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& s : plot.series) {
    for (const auto& p : s.points) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      for (const auto& v : {p.y, p.lo, p.hi}) {
        if (!v || (plot.log_y && *v <= 0.0)) continue;
        ymin = std::min(ymin, *v);
        ymax = std::max(ymax, *v);
      }
    }
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1;
  if (xmax == xmin) xmin -= 1, xmax += 1;
  if (!std::isfinite(ymin)) ymin = plot.log_y ? 1 : 0, ymax = plot.log_y ? 10 : 1;
  if (plot.log_y) {
    ymin = std::pow(10.0, std::floor(std::log10(ymin)));
    ymax = std::pow(10.0, std::ceil(std::log10(ymax)));
    if (ymax == ymin) ymax *= 10;
  } else {
    if (ymax == ymin) ymax = ymin + 1;
    const double pad = 0.05 * (ymax - ymin);
    ymin = std::max(0.0, ymin - pad);
    ymax += pad;
  }
  const Axis xa{xmin, xmax, false};
  const Axis ya{ymin, ymax, plot.log_y};
  const double px0 = kLeft;
  const double px1 = kWidth - kRight;
  const double py0 = kHeight - kBottom;
  const double py1 = kTop;

  std::ostringstream out;
  header(out, plot.title);
  out << "<rect x=\"" << num(px0) << "\" y=\"" << num(py1) << "\" width=\"" << num(px1 - px0)
      << "\" height=\"" << num(py0 - py1) << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 5.0;
    const double x = xa.map(xv, px0, px1);
    out << "<line x1=\"" << num(x) << "\" y1=\"" << num(py0) << "\" x2=\"" << num(x)
        << "\" y2=\"" << num(py0 + 5) << "\" stroke=\"black\"/>"
        << "<text x=\"" << num(x) << "\" y=\"" << num(py0 + 18)
        << "\" text-anchor=\"middle\">" << tick_label(xv) << "</text>\n";
  }
  std::vector<double> yticks;
  if (plot.log_y) {
    for (double v = ymin; v <= ymax * 1.0001; v *= 10) yticks.push_back(v);
  } else {
    for (int i = 0; i <= 5; ++i) yticks.push_back(ymin + (ymax - ymin) * i / 5.0);
  }
  for (double yv : yticks) {
    const double y = ya.map(yv, py0, py1);
    out << "<line x1=\"" << num(px0 - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(px1)
        << "\" y2=\"" << num(y) << "\" stroke=\"#ddd\"/>"
        << "<text x=\"" << num(px0 - 8) << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\">" << tick_label(yv) << "</text>\n";
  }
  out << "<text x=\"" << num((px0 + px1) / 2) << "\" y=\"" << num(kHeight - 18)
      << "\" text-anchor=\"middle\">" << escape(plot.x_label) << "</text>\n"
      << "<text transform=\"translate(18," << num((py0 + py1) / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(plot.y_label) << "</text>\n";

  bool any_capped = false;
  for (std::size_t si = 0; si < plot.series.size(); ++si) {
    const auto& s = plot.series[si];
    const char* color = kPalette[si % std::size(kPalette)];
    std::string path;
    for (const auto& p : s.points) {
      const double x = xa.map(p.x, px0, px1);
      if (p.lo && p.hi && (!plot.log_y || (*p.lo > 0 && *p.hi > 0))) {
        out << "<line x1=\"" << num(x) << "\" y1=\"" << num(ya.map(*p.lo, py0, py1))
            << "\" x2=\"" << num(x) << "\" y2=\"" << num(ya.map(*p.hi, py0, py1))
            << "\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
      }
      if (!p.y || (plot.log_y && *p.y <= 0)) {
        any_capped = true;
        out << "<path d=\"M" << num(x - 5) << ',' << num(py1 + 8) << " L" << num(x + 5) << ','
            << num(py1 + 8) << " L" << num(x) << ',' << num(py1) << " Z\" fill=\"" << color
            << "\"/>\n";
        continue;
      }
      const double y = ya.map(*p.y, py0, py1);
      path += (path.empty() ? "M" : " L") + num(x) + "," + num(y);
      out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"" << color
          << "\"/>\n";
    }
    if (!path.empty()) {
      out << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\"/>\n";
    }
    const double ly = kTop + 14 + 18 * static_cast<double>(si);
    out << "<line x1=\"" << num(px1 + 12) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(px1 + 32)
        << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>"
        << "<text x=\"" << num(px1 + 38) << "\" y=\"" << num(ly + 4) << "\">" << escape(s.label)
        << "</text>\n";
  }
  if (any_capped) {
    out << "<text x=\"" << num(px1) << "\" y=\"" << num(kHeight - 4)
        << "\" text-anchor=\"end\" font-size=\"10\">triangles at the top edge: unbounded</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render(const StackedPlot& plot) {
  double ymax = 0.0;
  for (const auto& b : plot.bars) {
    double total = 0.0;
    for (double v : b.values) total += std::max(0.0, v);
    ymax = std::max(ymax, total);
  }
  if (ymax <= 0.0) ymax = 1.0;
  ymax *= 1.05;
  const double px0 = kLeft;
  const double px1 = kWidth - kRight;
  const double py0 = kHeight - kBottom;
  const double py1 = kTop;
  const Axis ya{0.0, ymax, false};

  std::ostringstream out;
  header(out, plot.title);
  out << "<rect x=\"" << num(px0) << "\" y=\"" << num(py1) << "\" width=\"" << num(px1 - px0)
      << "\" height=\"" << num(py0 - py1) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double yv = ymax * i / 5.0;
    const double y = ya.map(yv, py0, py1);
    out << "<line x1=\"" << num(px0 - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(px1)
        << "\" y2=\"" << num(y) << "\" stroke=\"#ddd\"/>"
        << "<text x=\"" << num(px0 - 8) << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\">" << tick_label(yv) << "</text>\n";
  }
  out << "<text transform=\"translate(18," << num((py0 + py1) / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(plot.y_label) << "</text>\n";

  const double slot = (px1 - px0) / static_cast<double>(std::max<std::size_t>(1, plot.bars.size()));
  for (std::size_t bi = 0; bi < plot.bars.size(); ++bi) {
    const auto& bar = plot.bars[bi];
    const double x = px0 + slot * (static_cast<double>(bi) + 0.2);
    double base = 0.0;
    for (std::size_t ci = 0; ci < bar.values.size(); ++ci) {
      const double v = std::max(0.0, bar.values[ci]);
      const double ytop = ya.map(base + v, py0, py1);
      const double ybot = ya.map(base, py0, py1);
      out << "<rect x=\"" << num(x) << "\" y=\"" << num(ytop) << "\" width=\"" << num(slot * 0.6)
          << "\" height=\"" << num(ybot - ytop) << "\" fill=\""
          << kPalette[ci % std::size(kPalette)] << "\"/>\n";
      base += v;
    }
    out << "<text x=\"" << num(x + slot * 0.3) << "\" y=\"" << num(py0 + 18)
        << "\" text-anchor=\"middle\">" << escape(bar.label) << "</text>\n";
  }
  for (std::size_t ci = 0; ci < plot.categories.size(); ++ci) {
    const double ly = kTop + 14 + 18 * static_cast<double>(plot.categories.size() - 1 - ci);
    out << "<rect x=\"" << num(px1 + 12) << "\" y=\"" << num(ly - 6) << "\" width=\"12\" "
        << "height=\"12\" fill=\"" << kPalette[ci % std::size(kPalette)] << "\"/>"
        << "<text x=\"" << num(px1 + 30) << "\" y=\"" << num(ly + 4) << "\">"
        << escape(plot.categories[ci]) << "</text>\n";
  }
  if (!plot.note.empty()) {
    out << "<text x=\"" << num(px0) << "\" y=\"" << num(kHeight - 8)
        << "\" font-size=\"10\">" << escape(plot.note) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace gcolor::svg
