#ifndef PARAMSORT_REPORT_METADATA_HPP
#define PARAMSORT_REPORT_METADATA_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace paramsort::report {

/// Provenance stamped into every emitted CSV/JSON artifact.
struct RunMetadata {
  std::string tool_version;
  std::string generator;                  ///< RandomSource algorithm id, or "none"
  std::optional<std::uint64_t> master_seed;
  std::string config;                     ///< human-readable echo of the run settings
  std::optional<std::string> timestamp;   ///< ISO-8601 UTC; omitted for reproducible output

  friend bool operator==(const RunMetadata&, const RunMetadata&) = default;
};

/// "paramsort <version>".
std::string tool_version();

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

RunMetadata make_metadata(std::string generator, std::optional<std::uint64_t> master_seed,
                          std::string config, bool with_timestamp);

}  // namespace paramsort::report

#endif  // PARAMSORT_REPORT_METADATA_HPP
