#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gcolor::svg {

struct Point {
  double x = 0.0;
  std::optional<double> y;  ///< nullopt renders as a capped marker at the top edge
  std::optional<double> lo;
  std::optional<double> hi;
};

struct Series {
  std::string label;
  std::vector<Point> points;
};

struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  std::vector<Series> series;
};

struct StackedBar {
  std::string label;
  std::vector<double> values;  ///< one per category, bottom to top
};

struct StackedPlot {
  std::string title;
  std::string y_label;
  std::vector<std::string> categories;
  std::vector<StackedBar> bars;
  std::string note;
};

std::string render(const LinePlot& plot);
std::string render(const StackedPlot& plot);

}  // namespace gcolor::svg
