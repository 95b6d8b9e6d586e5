#include "paramsort/report/metadata.hpp"

#include <chrono>
#include <ctime>

#ifndef PARAMSORT_VERSION
#define PARAMSORT_VERSION "0.0.0"
#endif

namespace paramsort::report {

std::string tool_version() { return std::string("paramsort ") + PARAMSORT_VERSION; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

RunMetadata make_metadata(std::string generator, std::optional<std::uint64_t> master_seed,
                          std::string config, bool with_timestamp) {
  RunMetadata meta;
  meta.tool_version = tool_version();
  meta.generator = std::move(generator);
  meta.master_seed = master_seed;
  meta.config = std::move(config);
  if (with_timestamp) meta.timestamp = utc_timestamp();
  return meta;
}

}  // namespace paramsort::report
