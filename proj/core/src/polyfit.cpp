#include "paramsort/polyfit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "paramsort/special_functions.hpp"

namespace paramsort {

namespace {

// Pivots below this fraction of the largest one count as zero.
constexpr double kRankThreshold = 1e-10;
// ss_residual at or below this fraction of ss_total is treated as zero.
constexpr double kExactFitRelative = 1e-20;

void check_inputs(std::span<const DataPoint> points, int degree) {
  if (degree < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
  for (const auto& pt : points) {
    if (!std::isfinite(pt.x) || !std::isfinite(pt.y)) {
      throw std::invalid_argument("data points must be finite");
    }
  }
}

// Orthogonalized view of the design: z = (x - center) / scale and a
// column-pivoted QR of [z^0 .. z^d].
struct ScaledDesign {
  double center = 0.0;
  double scale = 1.0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;

  ScaledDesign(std::span<const DataPoint> points, int degree) {
    const auto m = static_cast<Eigen::Index>(points.size());
    const auto cols = static_cast<Eigen::Index>(degree) + 1;
    if (m < cols) {
      throw InsufficientDataError("need at least " + std::to_string(cols) + " points for degree " +
                                  std::to_string(degree) + ", got " + std::to_string(m));
    }

    double sum = 0.0;
    for (const auto& pt : points) sum += pt.x;
    center = sum / static_cast<double>(m);
    double spread = 0.0;
    for (const auto& pt : points) spread = std::max(spread, std::abs(pt.x - center));
    if (spread == 0.0) {
      if (degree > 0) throw RankDeficientError("all x values are identical");
      spread = 1.0;
    }
    scale = spread;

    Eigen::MatrixXd z(m, cols);
    for (Eigen::Index i = 0; i < m; ++i) {
      const double zi = (points[static_cast<std::size_t>(i)].x - center) / scale;
      double power = 1.0;
      for (Eigen::Index j = 0; j < cols; ++j) {
        z(i, j) = power;
        power *= zi;
      }
    }
    qr.setThreshold(kRankThreshold);
    qr.compute(z);
    if (qr.rank() < cols) {
      throw RankDeficientError("design matrix is rank deficient (rank " +
                               std::to_string(qr.rank()) + " < " + std::to_string(cols) +
                               " coefficients); too few distinct x values");
    }
  }

  Eigen::Index cols() const { return qr.cols(); }

  // Maps scaled-basis coefficients g to raw-basis coefficients b = T g, where
  // T(i, k) = C(k, i) (-center)^(k - i) / scale^k.
  Eigen::MatrixXd to_raw_basis() const {
    const Eigen::Index n = cols();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      double binom = 1.0;  // C(k, 0)
      const double inv_scale_k = std::pow(scale, -static_cast<double>(k));
      for (Eigen::Index i = 0; i <= k; ++i) {
        t(i, k) = binom * std::pow(-center, static_cast<double>(k - i)) * inv_scale_k;
        binom = binom * static_cast<double>(k - i) / static_cast<double>(i + 1);
      }
    }
    return t;
  }

  // (Z'Z)^-1 = P R^-1 R^-T P' for Z P = Q R.
  Eigen::MatrixXd scaled_inverse_gram() const {
    const Eigen::Index n = cols();
    const Eigen::MatrixXd r = qr.matrixR().topLeftCorner(n, n).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd r_inv =
        r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(n, n));
    const Eigen::MatrixXd permuted = r_inv * r_inv.transpose();
    const auto& perm = qr.colsPermutation();
    return perm * permuted * perm.transpose();
  }

  // (X'X)^-1 for the raw power basis.
  Eigen::MatrixXd raw_inverse_gram() const {
    const Eigen::MatrixXd t = to_raw_basis();
    return t * scaled_inverse_gram() * t.transpose();
  }
};

double sample_sd(const std::vector<double>& values) {
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double acc = 0.0;
  for (const double v : values) acc += (v - mean) * (v - mean);
  return std::sqrt(acc / (n - 1.0));
}

std::string term_name(std::string_view predictor, int power) {
  if (power == 0) return "(Constant)";
  std::string name(predictor);
  if (power > 1) name += " ** " + std::to_string(power);
  return name;
}

}  // namespace

PolyModel solve_least_squares(std::span<const DataPoint> points, int degree) {
  check_inputs(points, degree);
  const ScaledDesign design(points, degree);

  Eigen::VectorXd y(static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) y(static_cast<Eigen::Index>(i)) = points[i].y;
  const Eigen::VectorXd scaled = design.qr.solve(y);
  const Eigen::VectorXd raw = design.to_raw_basis() * scaled;

  PolyModel model;
  model.degree = degree;
  model.coefficients.assign(raw.data(), raw.data() + raw.size());
  return model;
}

PolyModel fit(std::span<const DataPoint> points, int degree) {
  check_inputs(points, degree);
  const std::size_t needed = static_cast<std::size_t>(degree) + 2;
  if (points.size() < needed) {
    throw InsufficientDataError("degree " + std::to_string(degree) + " needs at least " +
                                std::to_string(needed) + " points for a residual degree of "
                                "freedom, got " + std::to_string(points.size()));
  }
  return solve_least_squares(points, degree);
}

double predict(const PolyModel& model, double x) noexcept {
  double acc = 0.0;
  for (auto it = model.coefficients.rbegin(); it != model.coefficients.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

const CoefficientRow& coefficient_for_power(const RegressionReport& report, int power) {
  const int d = report.model.degree;
  if (power < 0 || power > d) throw std::out_of_range("no coefficient for that power");
  // Layout: powers 1..d first, intercept last.
  return power == 0 ? report.coefficients.back()
                    : report.coefficients[static_cast<std::size_t>(power - 1)];
}

RegressionReport diagnostics(std::span<const DataPoint> points, const PolyModel& model,
                             std::string_view predictor) {
  const int d = model.degree;
  check_inputs(points, d);
  if (model.coefficients.size() != static_cast<std::size_t>(d) + 1) {
    throw std::invalid_argument("model has the wrong number of coefficients");
  }
  const std::size_t m = points.size();
  if (m < static_cast<std::size_t>(d) + 2) {
    throw InsufficientDataError("diagnostics need at least degree + 2 points");
  }
  const ScaledDesign design(points, d);
  const Eigen::MatrixXd inverse_gram = design.raw_inverse_gram();

  std::vector<double> ys(m);
  for (std::size_t i = 0; i < m; ++i) ys[i] = points[i].y;
  const double y_mean = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(m);

  RegressionReport report;
  report.model = model;
  report.m = m;

  AnovaTable& anova = report.anova;
  for (const auto& pt : points) {
    const double fitted = predict(model, pt.x);
    anova.ss_residual += (pt.y - fitted) * (pt.y - fitted);
    anova.ss_regression += (fitted - y_mean) * (fitted - y_mean);
    anova.ss_total += (pt.y - y_mean) * (pt.y - y_mean);
  }
  anova.df_regression = d;
  anova.df_residual = static_cast<int>(m) - d - 1;
  anova.df_total = static_cast<int>(m) - 1;
  anova.ms_residual = anova.ss_residual / anova.df_residual;
  anova.ms_regression = d > 0 ? anova.ss_regression / d : 0.0;

  report.exact_fit = anova.ss_residual <= kExactFitRelative * anova.ss_total;
  if (!report.exact_fit && d > 0) {
    anova.f = anova.ms_regression / anova.ms_residual;
    anova.sig = f_sig(*anova.f, anova.df_regression, anova.df_residual);
  }

  ModelSummaryStats& summary = report.summary;
  if (anova.ss_total > 0.0) {
    summary.r_squared = std::clamp(1.0 - anova.ss_residual / anova.ss_total, 0.0, 1.0);
  } else {
    summary.r_squared = 1.0;
  }
  summary.r = std::sqrt(summary.r_squared);
  summary.adjusted_r_squared =
      1.0 - (1.0 - summary.r_squared) * static_cast<double>(anova.df_total) / anova.df_residual;
  summary.std_error_of_estimate = std::sqrt(anova.ms_residual);

  const double sd_y = sample_sd(ys);
  std::vector<double> column(m);
  auto make_row = [&](int power) {
    CoefficientRow row;
    row.term_name = term_name(predictor, power);
    row.b = model.coefficients[static_cast<std::size_t>(power)];
    row.std_error = std::sqrt(anova.ms_residual * std::max(0.0, inverse_gram(power, power)));
    if (power > 0 && sd_y > 0.0) {
      for (std::size_t i = 0; i < m; ++i) column[i] = std::pow(points[i].x, power);
      row.beta = row.b * sample_sd(column) / sd_y;
    }
    if (!report.exact_fit && row.std_error > 0.0) {
      row.t = row.b / row.std_error;
      row.sig = student_t_two_sided_sig(*row.t, anova.df_residual);
    }
    return row;
  };
  for (int power = 1; power <= d; ++power) report.coefficients.push_back(make_row(power));
  report.coefficients.push_back(make_row(0));
  return report;
}

RegressionReport fit_report(std::span<const DataPoint> points, int degree,
                            std::string_view predictor) {
  return diagnostics(points, fit(points, degree), predictor);
}

}  // namespace paramsort
