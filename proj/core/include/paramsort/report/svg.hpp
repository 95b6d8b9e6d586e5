#ifndef PARAMSORT_REPORT_SVG_HPP
#define PARAMSORT_REPORT_SVG_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "paramsort/polyfit.hpp"

namespace paramsort::report {

struct FittedCurve {
  std::string label;
  PolyModel model;
};

/// Scatter of observations with zero or more fitted curves over the data's x range.
struct FitFigure {
  std::string title;
  std::vector<DataPoint> points;
  std::vector<FittedCurve> curves;
  std::string x_label = "p";
  std::string y_label = "mean c";
};

inline constexpr int kCurveSamples = 200;

/// Static SVG (no scripting): axes with ticks and labels, one <circle> per
/// observation and one 200-vertex <polyline> per curve. Throws
/// std::invalid_argument when there are no points.
std::string render_fit_svg(const FitFigure& figure);

void write_fit_svg(std::ostream& out, const FitFigure& figure);

}  // namespace paramsort::report

#endif  // PARAMSORT_REPORT_SVG_HPP
