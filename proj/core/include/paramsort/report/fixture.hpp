// Published reference measurements for exchange selection sort on geometric
// input: n = 1000, 100 trials per p, p = .1 .. .9. Each row is kept as the
// exact decimal text that was published so nothing is lost to reformatting.

#ifndef PARAMSORT_REPORT_FIXTURE_HPP
#define PARAMSORT_REPORT_FIXTURE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paramsort/montecarlo.hpp"
#include "paramsort/polyfit.hpp"

namespace paramsort::report {

struct ReferenceRow {
  std::string_view p;
  std::string_view mean_c;
  std::string_view sd_c;
  std::string_view cv_c;
};

inline constexpr std::size_t kReferenceN = 1000;
inline constexpr std::size_t kReferenceTrials = 100;

std::span<const ReferenceRow> reference_table() noexcept;

/// "p,mean_c,sd_c,cv_c\n" followed by one line per row, verbatim.
std::string reference_table_text();

/// 64-bit FNV-1a of reference_table_text().
std::uint64_t reference_table_checksum();

/// (p, mean_c) pairs.
std::vector<DataPoint> reference_points();

/// Rows as TrialSummary values (n = 1000, trials = 100).
std::vector<TrialSummary> reference_summaries();

}  // namespace paramsort::report

#endif  // PARAMSORT_REPORT_FIXTURE_HPP
