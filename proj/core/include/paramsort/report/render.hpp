// Plain-text regression tables in the familiar statistics-package layout:
// three decimals, no leading zero for |v| < 1 (".991"), E notation for
// magnitudes of 1e8 and above ("6.548E8"), and significance values below
// .0005 shown as ".000". Rounding happens here only; stored values keep full
// precision.

#ifndef PARAMSORT_REPORT_RENDER_HPP
#define PARAMSORT_REPORT_RENDER_HPP

#include <string>

#include "paramsort/polyfit.hpp"
#include "paramsort/theory.hpp"

namespace paramsort::report {

std::string format_display(double value);
std::string format_sig(double value);

std::string render_model_summary(const RegressionReport& report);
std::string render_anova(const RegressionReport& report);
std::string render_coefficients(const RegressionReport& report);
/// All three tables, separated by blank lines.
std::string render_report(const RegressionReport& report);

std::string render_theory(const TheoryPrediction& prediction);

}  // namespace paramsort::report

#endif  // PARAMSORT_REPORT_RENDER_HPP
