#include "paramsort/report/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "paramsort/theory.hpp"

namespace paramsort::report {

namespace {

std::string trim(std::string_view text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = text.find_last_not_of(" \t\r");
  return std::string(text.substr(begin, end - begin + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_real(const std::string& text, std::size_t line, const char* column) {
  std::string buffer = text.starts_with('.') ? "0" + text : text;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (buffer.empty() || ec != std::errc{} || ptr != buffer.data() + buffer.size() ||
      !std::isfinite(value)) {
    throw CsvError(line, std::string("invalid number in column ") + column + ": '" + text + "'");
  }
  return value;
}

std::size_t parse_count(const std::string& text, std::size_t line, const char* column) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw CsvError(line, std::string("invalid integer in column ") + column + ": '" + text + "'");
  }
  return value;
}

void apply_comment(RunMetadata& meta, const std::string& body, std::size_t line) {
  const auto colon = body.find(':');
  if (colon == std::string::npos) return;
  const std::string key = trim(std::string_view(body).substr(0, colon));
  const std::string value = trim(std::string_view(body).substr(colon + 1));
  if (key == "tool") {
    meta.tool_version = value;
  } else if (key == "generator") {
    meta.generator = value;
  } else if (key == "master_seed") {
    meta.master_seed = static_cast<std::uint64_t>(parse_count(value, line, "master_seed"));
  } else if (key == "config") {
    meta.config = value;
  } else if (key == "timestamp") {
    meta.timestamp = value;
  }
}

}  // namespace

CsvError::CsvError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) throw std::runtime_error("failed to format number");
  return std::string(buffer, ptr);
}

void write_metadata_comments(std::ostream& out, const RunMetadata& meta) {
  out << "# tool: " << meta.tool_version << "\n";
  out << "# generator: " << meta.generator << "\n";
  if (meta.master_seed) out << "# master_seed: " << *meta.master_seed << "\n";
  out << "# config: " << meta.config << "\n";
  if (meta.timestamp) out << "# timestamp: " << *meta.timestamp << "\n";
}

void write_summary_csv(std::ostream& out, std::span<const TrialSummary> rows,
                       const RunMetadata& meta) {
  write_metadata_comments(out, meta);
  out << kSummaryHeader << "\n";
  for (const auto& row : rows) {
    out << format_double(row.p) << ',' << row.n << ',' << row.trials << ','
        << format_double(row.mean_c) << ',' << format_double(row.sd_c) << ',';
    if (row.cv_c) out << format_double(*row.cv_c);
    out << "\n";
  }
}

SummaryCsv read_summary_csv(std::istream& in) {
  SummaryCsv result;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with('#')) {
      apply_comment(result.metadata, line.substr(1), line_no);
      continue;
    }
    if (trim(line).empty()) continue;
    if (!have_header) {
      if (trim(line) != kSummaryHeader) {
        throw CsvError(line_no, "missing header '" + std::string(kSummaryHeader) + "'");
      }
      have_header = true;
      continue;
    }
    const auto fields = split(line);
    if (fields.size() != 6) {
      throw CsvError(line_no, "expected 6 fields, found " + std::to_string(fields.size()));
    }
    TrialSummary row;
    row.p = parse_real(fields[0], line_no, "p");
    row.n = parse_count(fields[1], line_no, "n");
    row.trials = parse_count(fields[2], line_no, "trials");
    row.mean_c = parse_real(fields[3], line_no, "mean_c");
    row.sd_c = parse_real(fields[4], line_no, "sd_c");
    if (!fields[5].empty()) row.cv_c = parse_real(fields[5], line_no, "cv_c");
    result.rows.push_back(row);
  }
  if (!have_header) {
    throw CsvError(line_no + 1, "missing header '" + std::string(kSummaryHeader) + "'");
  }
  return result;
}

std::vector<DataPoint> to_points(std::span<const TrialSummary> rows) {
  std::vector<DataPoint> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back({row.p, row.mean_c});
  return out;
}

void write_comparison_csv(std::ostream& out, std::span<const TrialSummary> simulated,
                          std::span<const TrialSummary> reference, const RunMetadata& meta) {
  write_metadata_comments(out, meta);
  out << "# reference_*: published exchange-sort measurements (n=1000, 100 trials)\n";
  out << "# z_vs_reference: (simulated mean - reference mean) / (reference sd / sqrt(trials))\n";
  out << "# closed_form_expected_inversions: n(n-1)/2 * (1-p)/(2-p), the exact expected\n";
  out << "#   inversion count of the input. It is NOT the expected number of exchange-sort\n";
  out << "#   interchanges; the ratio column shows how far apart the two quantities are.\n";
  out << "p,n,simulated_mean_c,simulated_sd_c,reference_mean_c,reference_sd_c,z_vs_reference,"
         "closed_form_expected_inversions,closed_form_over_simulated\n";
  for (const auto& sim : simulated) {
    const TrialSummary* ref = nullptr;
    for (const auto& candidate : reference) {
      if (std::abs(candidate.p - sim.p) < 1e-12) ref = &candidate;
    }
    const double expected = expected_interchanges(Geometric{GeometricParam(sim.p)}, sim.n);
    out << format_double(sim.p) << ',' << sim.n << ',' << format_double(sim.mean_c) << ','
        << format_double(sim.sd_c) << ',';
    if (ref) {
      const double se = ref->sd_c / std::sqrt(static_cast<double>(ref->trials));
      out << format_double(ref->mean_c) << ',' << format_double(ref->sd_c) << ','
          << format_double((sim.mean_c - ref->mean_c) / se);
    } else {
      out << ",,";
    }
    out << ',' << format_double(expected) << ',';
    if (sim.mean_c > 0.0) out << format_double(expected / sim.mean_c);
    out << "\n";
  }
}

}  // namespace paramsort::report
