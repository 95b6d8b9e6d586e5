// Empirical-O degree selection over nested polynomial models.
//
// Degrees are scanned upward from d_min. Degree d is accepted when its own
// highest-order coefficient is significant (two-sided sig < alpha) and the new
// coefficient of the degree d+1 extension is not. If no degree below d_max
// satisfies both conditions the scan stops at d_max and the verdict is flagged
// cap-limited.

#ifndef PARAMSORT_MODEL_SELECT_HPP
#define PARAMSORT_MODEL_SELECT_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paramsort/polyfit.hpp"

namespace paramsort {

struct SelectionPolicy {
  double alpha = 0.05;
  int d_min = 1;
  int d_max = 4;
};

enum class VerdictFlag {
  none,
  cap_limited,  ///< scan reached d_max without a stopping pair
  degenerate,   ///< constant response; degree 0 reported without testing
  exact_fit,    ///< a tested degree already interpolates the data
};

std::string_view to_string(VerdictFlag flag) noexcept;
VerdictFlag parse_verdict_flag(std::string_view text);

struct TraceStep {
  int degree = 0;
  std::optional<double> t;    ///< t of this degree's highest-order term
  std::optional<double> sig;
  bool significant = false;
  std::string decision;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct EmpiricalOVerdict {
  int selected_degree = 0;
  std::string label;  ///< "O_emp(p^d)", or "O_emp(1)" for degree 0
  VerdictFlag flag = VerdictFlag::none;
  double alpha = 0.05;
  std::map<int, RegressionReport> per_degree_reports;
  std::vector<TraceStep> decision_trace;

  friend bool operator==(const EmpiricalOVerdict&, const EmpiricalOVerdict&) = default;
};

std::string empirical_o_label(int degree);

/// Throws std::invalid_argument for an invalid policy (alpha outside (0,1),
/// d_min < 1, d_min > d_max) or too few points (m < d_max + 2). Fit failures
/// (RankDeficientError) propagate.
EmpiricalOVerdict select_degree(std::span<const DataPoint> points,
                                const SelectionPolicy& policy = {});

std::string render_verdict(const EmpiricalOVerdict& verdict);

}  // namespace paramsort

#endif  // PARAMSORT_MODEL_SELECT_HPP
