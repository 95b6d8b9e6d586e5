// Ordinary least squares polynomial regression in one predictor, with the
// usual regression printout: model summary, ANOVA table and coefficient table.
//
// Fitting never forms the raw normal equations. The predictor is centered and
// scaled to z = (x - c) / s, the Vandermonde matrix in z is factorized with a
// column-pivoted Householder QR, and the solution is mapped back to the raw
// power basis b_0 + b_1 x + ... + b_d x^d by binomial expansion.

#ifndef PARAMSORT_POLYFIT_HPP
#define PARAMSORT_POLYFIT_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace paramsort {

struct DataPoint {
  double x = 0.0;
  double y = 0.0;
};

/// coefficients[j] multiplies x^j; coefficients.size() == degree + 1.
struct PolyModel {
  int degree = 0;
  std::vector<double> coefficients;

  friend bool operator==(const PolyModel&, const PolyModel&) = default;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fewer than degree + 2 points: no residual degree of freedom.
class InsufficientDataError : public FitError {
 public:
  using FitError::FitError;
};

/// The design matrix does not have full column rank (for example, fewer
/// distinct x values than coefficients).
class RankDeficientError : public FitError {
 public:
  using FitError::FitError;
};

/// OLS fit. Requires m >= degree + 2 (InsufficientDataError), degree >= 0
/// (std::invalid_argument), finite data (std::invalid_argument) and a full
/// rank design (RankDeficientError).
PolyModel fit(std::span<const DataPoint> points, int degree);

/// The solver behind fit() without the residual-df requirement: m >= degree + 1
/// is enough, so degree m - 1 interpolates m distinct points.
PolyModel solve_least_squares(std::span<const DataPoint> points, int degree);

/// Horner evaluation.
double predict(const PolyModel& model, double x) noexcept;

struct ModelSummaryStats {
  double r = 0.0;
  double r_squared = 0.0;
  double adjusted_r_squared = 0.0;
  double std_error_of_estimate = 0.0;

  friend bool operator==(const ModelSummaryStats&, const ModelSummaryStats&) = default;
};

struct AnovaTable {
  double ss_regression = 0.0;
  double ss_residual = 0.0;
  double ss_total = 0.0;
  int df_regression = 0;
  int df_residual = 0;
  int df_total = 0;
  double ms_regression = 0.0;
  double ms_residual = 0.0;
  std::optional<double> f;    ///< empty for an exact fit or a degree-0 model
  std::optional<double> sig;

  friend bool operator==(const AnovaTable&, const AnovaTable&) = default;
};

struct CoefficientRow {
  std::string term_name;
  double b = 0.0;
  double std_error = 0.0;
  std::optional<double> beta;  ///< standardized; absent for the intercept
  std::optional<double> t;     ///< absent for an exact fit
  std::optional<double> sig;

  friend bool operator==(const CoefficientRow&, const CoefficientRow&) = default;
};

struct RegressionReport {
  PolyModel model;
  ModelSummaryStats summary;
  AnovaTable anova;
  /// Power terms in ascending order, then "(Constant)" last.
  std::vector<CoefficientRow> coefficients;
  std::size_t m = 0;
  /// Residual sum of squares is zero (to rounding); t, F and their sig values
  /// are undefined and left empty.
  bool exact_fit = false;

  friend bool operator==(const RegressionReport&, const RegressionReport&) = default;
};

/// Row for the coefficient of x^power (power 0 is the intercept).
const CoefficientRow& coefficient_for_power(const RegressionReport& report, int power);

/// Regression diagnostics for `model` on `points`.
///
/// ss_total = sum (y - ybar)^2, r^2 = 1 - ss_residual / ss_total,
/// adjusted r^2 = 1 - (1 - r^2)(m - 1)/(m - d - 1),
/// std error of estimate = sqrt(ms_residual), F = ms_regression / ms_residual.
/// Coefficient standard errors are sqrt(ms_residual * [(X'X)^-1]_jj), with the
/// inverse obtained from the same scaled QR factorization used for fitting.
/// Standardized beta_j = b_j * s(x^j) / s(y) using sample standard deviations.
/// Term names are built from `predictor`: "p", "p ** 2", ...
RegressionReport diagnostics(std::span<const DataPoint> points, const PolyModel& model,
                             std::string_view predictor = "p");

/// fit() followed by diagnostics().
RegressionReport fit_report(std::span<const DataPoint> points, int degree,
                            std::string_view predictor = "p");

}  // namespace paramsort

#endif  // PARAMSORT_POLYFIT_HPP
