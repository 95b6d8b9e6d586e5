#include "paramsort/distributions.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace paramsort {

GeometricParam::GeometricParam(double p) : p_(p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must be in (0,1]");
  }
}

std::string describe(const InputModel& model) {
  if (const auto* geo = std::get_if<Geometric>(&model)) {
    std::ostringstream os;
    os << "geometric(p=" << geo->param.p() << ")";
    return os.str();
  }
  return "continuous-uniform[0,1)";
}

std::string_view to_string(SamplerMethod method) noexcept {
  switch (method) {
    case SamplerMethod::loop:
      return "loop";
    case SamplerMethod::inverse:
      return "inverse";
  }
  return "unknown";
}

SamplerMethod parse_sampler_method(std::string_view text) {
  if (text == "loop") return SamplerMethod::loop;
  if (text == "inverse") return SamplerMethod::inverse;
  throw std::invalid_argument("unknown sampler method: " + std::string(text));
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) noexcept {
  std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RandomSource RandomSource::substream(std::uint64_t master_seed, std::uint64_t index) {
  return RandomSource(mix_seed(master_seed, index));
}

double RandomSource::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double geometric_pmf(GeometricParam param, std::uint64_t r) noexcept {
  const double p = param.p();
  return p * std::pow(1.0 - p, static_cast<double>(r));
}

double sample_uniform(RandomSource& src) { return src.uniform(); }

std::uint64_t sample_geometric_loop(RandomSource& src, GeometricParam param) {
  const double p = param.p();
  std::uint64_t failures = 0;
  while (!(src.uniform() < p)) {
    ++failures;
  }
  return failures;
}

std::uint64_t geometric_from_uniform(double u, GeometricParam param) noexcept {
  const double p = param.p();
  if (p >= 1.0) return 0;
  const double value = std::floor(std::log1p(-u) / std::log1p(-p));
  // 2^64 as a double; anything at or beyond it saturates.
  constexpr double kLimit = 18446744073709551616.0;
  if (!(value < kLimit)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(value);
}

std::uint64_t sample_geometric_inverse(RandomSource& src, GeometricParam param) {
  return geometric_from_uniform(src.uniform(), param);
}

std::uint64_t sample_geometric(RandomSource& src, GeometricParam param,
                               SamplerMethod method) {
  return method == SamplerMethod::loop ? sample_geometric_loop(src, param)
                                       : sample_geometric_inverse(src, param);
}

std::vector<std::uint64_t> sample_geometric_array(RandomSource& src, GeometricParam param,
                                                  std::size_t n, SamplerMethod method) {
  if (n == 0) throw std::invalid_argument("array length n must be at least 1");
  std::vector<std::uint64_t> out(n);
  for (auto& value : out) value = sample_geometric(src, param, method);
  return out;
}

ItemSequence sample_array(RandomSource& src, const InputModel& model, std::size_t n,
                          SamplerMethod method) {
  if (n == 0) throw std::invalid_argument("array length n must be at least 1");
  if (const auto* geo = std::get_if<Geometric>(&model)) {
    return sample_geometric_array(src, geo->param, n, method);
  }
  std::vector<double> out(n);
  for (auto& value : out) value = src.uniform();
  return out;
}

}  // namespace paramsort
