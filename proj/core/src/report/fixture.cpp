#include "paramsort/report/fixture.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace paramsort::report {

namespace {

constexpr std::array<ReferenceRow, 9> kRows{{
    {".1", "30590.93", "1785.8720", ".05838"},
    {".2", "17548.08", "1294.4680", ".0737669"},
    {".3", "12175.57", "1035.9940", ".0850879"},
    {".4", "9110.45", "784.3701", ".0860956"},
    {".5", "6832.90", "750.3445", ".1098135"},
    {".6", "5336.36", "602.0993", ".1128296"},
    {".7", "4192.42", "588.1761", ".1402951"},
    {".8", "3116.07", "417.2080", ".1338892"},
    {".9", "2164.99", "353.7879", ".1634132"},
}};

double parse(std::string_view text) {
  // from_chars does not accept a bare leading '.', so prepend a zero.
  std::string buffer = text.starts_with('.') ? "0" + std::string(text) : std::string(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{} || ptr != buffer.data() + buffer.size()) {
    throw std::logic_error("bad reference value: " + buffer);
  }
  return value;
}

}  // namespace

std::span<const ReferenceRow> reference_table() noexcept { return kRows; }

std::string reference_table_text() {
  std::string out = "p,mean_c,sd_c,cv_c\n";
  for (const auto& row : kRows) {
    out.append(row.p).append(",").append(row.mean_c).append(",");
    out.append(row.sd_c).append(",").append(row.cv_c).append("\n");
  }
  return out;
}

std::uint64_t reference_table_checksum() {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : reference_table_text()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::vector<DataPoint> reference_points() {
  std::vector<DataPoint> out;
  out.reserve(kRows.size());
  for (const auto& row : kRows) out.push_back({parse(row.p), parse(row.mean_c)});
  return out;
}

std::vector<TrialSummary> reference_summaries() {
  std::vector<TrialSummary> out;
  out.reserve(kRows.size());
  for (const auto& row : kRows) {
    TrialSummary s;
    s.p = parse(row.p);
    s.n = kReferenceN;
    s.trials = kReferenceTrials;
    s.mean_c = parse(row.mean_c);
    s.sd_c = parse(row.sd_c);
    s.cv_c = parse(row.cv_c);
    out.push_back(s);
  }
  return out;
}

}  // namespace paramsort::report
