// TrialSummary CSV.
//
//   # tool: paramsort 1.0.0
//   # generator: mt19937_64
//   # master_seed: 42
//   # config: n=1000 trials=100 ...
//   # timestamp: 2026-01-01T00:00:00Z        (optional)
//   p,n,trials,mean_c,sd_c,cv_c
//   0.1,1000,100,30557.86,1583.14...,0.0518...
//
// Reals are written in shortest round-trip form; cv_c is empty when undefined.

#ifndef PARAMSORT_REPORT_CSV_HPP
#define PARAMSORT_REPORT_CSV_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "paramsort/montecarlo.hpp"
#include "paramsort/polyfit.hpp"
#include "paramsort/report/metadata.hpp"

namespace paramsort::report {

inline constexpr std::string_view kSummaryHeader = "p,n,trials,mean_c,sd_c,cv_c";

class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

void write_metadata_comments(std::ostream& out, const RunMetadata& meta);

void write_summary_csv(std::ostream& out, std::span<const TrialSummary> rows,
                       const RunMetadata& meta);

struct SummaryCsv {
  RunMetadata metadata;
  std::vector<TrialSummary> rows;
};

/// Throws CsvError naming the line for a missing header, wrong field count or
/// an unparsable number.
SummaryCsv read_summary_csv(std::istream& in);

std::vector<DataPoint> to_points(std::span<const TrialSummary> rows);

/// Simulated means next to the published reference rows and the closed-form
/// expected inversion count, one line per p. Rows are matched by p; simulated
/// rows without a reference counterpart leave the reference columns empty.
void write_comparison_csv(std::ostream& out, std::span<const TrialSummary> simulated,
                          std::span<const TrialSummary> reference, const RunMetadata& meta);

}  // namespace paramsort::report

#endif  // PARAMSORT_REPORT_CSV_HPP
