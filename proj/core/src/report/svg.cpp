#include "paramsort/report/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace paramsort::report {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 24.0;
constexpr double kTop = 48.0;
constexpr double kBottom = 64.0;
constexpr int kTicks = 5;

constexpr std::array<const char*, 4> kCurveColors{"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};

std::string escape(const std::string& text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

std::string tick_label(double value) {
  char buffer[32];
  if (std::abs(value) >= 1000.0 || value == std::floor(value)) {
    std::snprintf(buffer, sizeof buffer, "%.0f", value);
  } else {
    std::snprintf(buffer, sizeof buffer, "%.2f", value);
  }
  return buffer;
}

struct Range {
  double lo;
  double hi;
  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (hi == lo) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double margin = 0.05 * (hi - lo);
    lo -= margin;
    hi += margin;
  }
};

}  // namespace

std::string render_fit_svg(const FitFigure& figure) {
  if (figure.points.empty()) throw std::invalid_argument("figure needs at least one point");

  Range xr{figure.points.front().x, figure.points.front().x};
  Range yr{figure.points.front().y, figure.points.front().y};
  for (const auto& pt : figure.points) {
    xr.include(pt.x);
    yr.include(pt.y);
  }
  const double x_first = xr.lo;
  const double x_last = xr.hi;

  std::vector<std::vector<DataPoint>> samples;
  for (const auto& curve : figure.curves) {
    std::vector<DataPoint> line;
    line.reserve(kCurveSamples);
    for (int i = 0; i < kCurveSamples; ++i) {
      const double x = x_first + (x_last - x_first) * i / (kCurveSamples - 1);
      const double y = predict(curve.model, x);
      line.push_back({x, y});
      yr.include(y);
    }
    samples.push_back(std::move(line));
  }
  xr.pad();
  yr.pad();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto sy = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"white\"/>\n";
  os << "  <text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"15\">"
     << escape(figure.title) << "</text>\n";

  // Axes.
  os << "  <g stroke=\"black\" stroke-width=\"1\">\n";
  os << "    <line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
     << "\" y2=\"" << kTop + plot_h << "\"/>\n";
  os << "    <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
     << kTop + plot_h << "\"/>\n";
  os << "  </g>\n";

  os << "  <g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double yv = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    os << "    <line x1=\"" << num(sx(xv)) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\""
       << num(sx(xv)) << "\" y2=\"" << num(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n";
    os << "    <text x=\"" << num(sx(xv)) << "\" y=\"" << num(kTop + plot_h + 18)
       << "\" text-anchor=\"middle\">" << tick_label(xv) << "</text>\n";
    os << "    <line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(sy(yv)) << "\" x2=\""
       << num(kLeft) << "\" y2=\"" << num(sy(yv)) << "\" stroke=\"black\"/>\n";
    os << "    <text x=\"" << num(kLeft - 8) << "\" y=\"" << num(sy(yv) + 4)
       << "\" text-anchor=\"end\">" << tick_label(yv) << "</text>\n";
  }
  os << "  </g>\n";

  os << "  <text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 16)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
     << escape(figure.x_label) << "</text>\n";
  os << "  <text x=\"18\" y=\"" << num(kTop + plot_h / 2)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        "transform=\"rotate(-90 18 "
     << num(kTop + plot_h / 2) << ")\">" << escape(figure.y_label) << "</text>\n";

  for (std::size_t c = 0; c < samples.size(); ++c) {
    const char* color = kCurveColors[c % kCurveColors.size()];
    os << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < samples[c].size(); ++i) {
      if (i > 0) os << ' ';
      os << num(sx(samples[c][i].x)) << ',' << num(sy(samples[c][i].y));
    }
    os << "\"><title>" << escape(figure.curves[c].label) << "</title></polyline>\n";
    os << "  <text x=\"" << num(kLeft + plot_w - 8) << "\" y=\"" << num(kTop + 14 + 16.0 * c)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color
       << "\">" << escape(figure.curves[c].label) << "</text>\n";
  }

  os << "  <g fill=\"black\">\n";
  for (const auto& pt : figure.points) {
    os << "    <circle cx=\"" << num(sx(pt.x)) << "\" cy=\"" << num(sy(pt.y)) << "\" r=\"3\"/>\n";
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

void write_fit_svg(std::ostream& out, const FitFigure& figure) { out << render_fit_svg(figure); }

}  // namespace paramsort::report
