// JSON documents for regression reports, verdicts and theory predictions.
// All statistics are written at full precision; undefined values are null.

#ifndef PARAMSORT_REPORT_JSON_HPP
#define PARAMSORT_REPORT_JSON_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "paramsort/model_select.hpp"
#include "paramsort/polyfit.hpp"
#include "paramsort/report/metadata.hpp"
#include "paramsort/theory.hpp"

namespace paramsort::report {

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Keys: model, summary, anova, coefficients, exact_fit, m, metadata.
std::string regression_report_to_json(const RegressionReport& report, const RunMetadata& meta);

struct ParsedRegressionReport {
  RegressionReport report;
  RunMetadata metadata;
};

ParsedRegressionReport regression_report_from_json(std::string_view text);

/// Keys: selected_degree, label, flag, alpha, trace, per_degree, metadata.
std::string verdict_to_json(const EmpiricalOVerdict& verdict, const RunMetadata& meta);

struct ParsedVerdict {
  EmpiricalOVerdict verdict;
  RunMetadata metadata;
};

ParsedVerdict verdict_from_json(std::string_view text);

std::string theory_to_json(const TheoryPrediction& prediction, const RunMetadata& meta);

}  // namespace paramsort::report

#endif  // PARAMSORT_REPORT_JSON_HPP
