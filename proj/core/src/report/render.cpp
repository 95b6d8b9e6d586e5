#include "paramsort/report/render.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <vector>

namespace paramsort::report {

namespace {

std::string strip_leading_zero(std::string text) {
  if (text.starts_with("0.")) return text.substr(1);
  if (text.starts_with("-0.")) return "-" + text.substr(2);
  return text;
}

std::string fixed3(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3f", value);
  std::string text = buffer;
  if (text == "-0.000") text = "0.000";
  return text;
}

std::string or_dash(const std::optional<double>& value, std::string (*fmt)(double)) {
  return value ? fmt(*value) : std::string("-");
}

// Left-aligned first column, right-aligned remaining columns.
std::string table(const std::string& title, const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream os;
  os << title << "\n";
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        os << std::left << std::setw(static_cast<int>(widths[c])) << row[c];
      } else {
        os << "  " << std::right << std::setw(static_cast<int>(widths[c])) << row[c];
      }
    }
    os << "\n";
  };
  emit(header);
  std::size_t total = 0;
  for (const auto w : widths) total += w + 2;
  os << std::string(total - 2, '-') << "\n";
  for (const auto& row : rows) emit(row);
  return os.str();
}

}  // namespace

std::string format_display(double value) {
  if (!std::isfinite(value)) return "-";
  if (std::abs(value) >= 1e8) {
    const int exponent = static_cast<int>(std::floor(std::log10(std::abs(value))));
    double mantissa = value / std::pow(10.0, exponent);
    int e = exponent;
    // Rounding the mantissa can carry into the next decade (9.9996E8 -> 1.000E9).
    if (std::abs(std::round(mantissa * 1000.0) / 1000.0) >= 10.0) {
      mantissa /= 10.0;
      ++e;
    }
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.3fE%d", mantissa, e);
    return buffer;
  }
  return strip_leading_zero(fixed3(value));
}

std::string format_sig(double value) {
  if (value < 0.0005) return ".000";
  return strip_leading_zero(fixed3(value));
}

std::string render_model_summary(const RegressionReport& report) {
  const auto& s = report.summary;
  return table("Model Summary", {"R", "R Square", "Adjusted R Square", "Std. Error of the Estimate"},
               {{format_display(s.r), format_display(s.r_squared),
                 format_display(s.adjusted_r_squared), format_display(s.std_error_of_estimate)}});
}

std::string render_anova(const RegressionReport& report) {
  const auto& a = report.anova;
  std::string text =
      table("ANOVA", {"", "Sum of Squares", "df", "Mean Square", "F", "Sig."},
            {{"Regression", format_display(a.ss_regression), std::to_string(a.df_regression),
              format_display(a.ms_regression), or_dash(a.f, format_display),
              or_dash(a.sig, format_sig)},
             {"Residual", format_display(a.ss_residual), std::to_string(a.df_residual),
              format_display(a.ms_residual), "", ""},
             {"Total", format_display(a.ss_total), std::to_string(a.df_total), "", "", ""}});
  if (report.exact_fit) text += "(exact fit: residual sum of squares is zero; F undefined)\n";
  return text;
}

std::string render_coefficients(const RegressionReport& report) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : report.coefficients) {
    rows.push_back({row.term_name, format_display(row.b), format_display(row.std_error),
                    row.beta ? format_display(*row.beta) : std::string(),
                    or_dash(row.t, format_display), or_dash(row.sig, format_sig)});
  }
  std::string text = table("Coefficients", {"", "B", "Std. Error", "Beta", "t", "Sig."}, rows);
  if (report.exact_fit) text += "(exact fit: t and Sig. undefined)\n";
  return text;
}

std::string render_report(const RegressionReport& report) {
  return render_model_summary(report) + "\n" + render_anova(report) + "\n" +
         render_coefficients(report);
}

std::string render_theory(const TheoryPrediction& prediction) {
  std::ostringstream os;
  os << std::setprecision(15);
  os << "model:                    " << describe(prediction.model) << "\n";
  os << "n:                        " << prediction.n << "\n";
  os << "tie probability:          " << prediction.tie_probability << "\n";
  os << "interchange probability:  " << prediction.interchange_probability << "\n";
  os << "expected interchanges:    " << prediction.expected_interchanges << "\n";
  os << "(n(n-1)/2 pairs times the per-pair probability; this is the exact expected\n"
        " inversion count of the input, not the exchange-sort swap count)\n";
  return os.str();
}

}  // namespace paramsort::report
