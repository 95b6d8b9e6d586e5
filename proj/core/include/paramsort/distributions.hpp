// Input models and seedable random-variate generation.
//
// Every stochastic component draws from a RandomSource. A source is a
// single-stream object; concurrent workers each take their own substream
// derived with mix_seed(), so results never depend on scheduling.

#ifndef PARAMSORT_DISTRIBUTIONS_HPP
#define PARAMSORT_DISTRIBUTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace paramsort {

/// Success probability of a geometric distribution, validated to (0, 1].
class GeometricParam {
 public:
  /// Throws std::invalid_argument("p must be in (0,1]") otherwise. NaN is
  /// rejected as well.
  explicit GeometricParam(double p);

  double p() const noexcept { return p_; }

  friend bool operator==(const GeometricParam&, const GeometricParam&) = default;

 private:
  double p_;
};

/// Number of failures before the first success; support r = 0, 1, 2, ...
struct Geometric {
  GeometricParam param;
  friend bool operator==(const Geometric&, const Geometric&) = default;
};

/// Uniform on [0, 1).
struct ContinuousUniform {
  friend bool operator==(const ContinuousUniform&, const ContinuousUniform&) = default;
};

using InputModel = std::variant<Geometric, ContinuousUniform>;

std::string describe(const InputModel& model);

/// Geometric variates are integers, continuous ones reals.
using ItemSequence = std::variant<std::vector<std::uint64_t>, std::vector<double>>;

enum class SamplerMethod {
  loop,     ///< draw uniforms until one falls below p (reference method)
  inverse,  ///< floor(log(1-u) / log(1-p)), one uniform per variate
};

std::string_view to_string(SamplerMethod method) noexcept;
/// Accepts "loop" or "inverse"; throws std::invalid_argument otherwise.
SamplerMethod parse_sampler_method(std::string_view text);

/// Derives an independent 64-bit seed from (base, index):
///
///   mix(base, index) = splitmix64(base + (index + 1) * 0x9E3779B97F4A7C15)
///
/// where splitmix64 is the standard 64-bit finalizer
/// (xor-shift 30/27/31 with multipliers 0xBF58476D1CE4E5B9, 0x94D049BB133111EB).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) noexcept;

/// Deterministic uniform source backed by std::mt19937_64 (19937-bit state).
///
/// Uniform deviates use the top 53 bits of each 64-bit output, giving values
/// k * 2^-53 for k in [0, 2^53), so every draw lies in [0, 1). The mapping is
/// spelled out here rather than using std::uniform_real_distribution so the
/// stream is identical across standard library implementations.
class RandomSource {
 public:
  static constexpr std::string_view kAlgorithmId = "mt19937_64";

  explicit RandomSource(std::uint64_t seed);

  /// Source for worker/cell/trial `index` under `master_seed`.
  static RandomSource substream(std::uint64_t master_seed, std::uint64_t index);

  std::string_view algorithm_id() const noexcept { return kAlgorithmId; }
  std::uint64_t seed() const noexcept { return seed_; }

  double uniform();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// p (1-p)^r.
double geometric_pmf(GeometricParam param, std::uint64_t r) noexcept;

double sample_uniform(RandomSource& src);

/// Counts failures until the first uniform below p.
std::uint64_t sample_geometric_loop(RandomSource& src, GeometricParam param);

/// Inverse-CDF map from a single uniform u in [0,1). Returns 0 for p == 1 and
/// saturates at UINT64_MAX for extremely small p.
std::uint64_t geometric_from_uniform(double u, GeometricParam param) noexcept;

std::uint64_t sample_geometric_inverse(RandomSource& src, GeometricParam param);

std::uint64_t sample_geometric(RandomSource& src, GeometricParam param,
                               SamplerMethod method);

/// n iid geometric draws in draw order. Throws std::invalid_argument for n == 0.
std::vector<std::uint64_t> sample_geometric_array(RandomSource& src, GeometricParam param,
                                                  std::size_t n,
                                                  SamplerMethod method = SamplerMethod::inverse);

/// n iid draws from `model` in draw order. Throws std::invalid_argument for n == 0.
ItemSequence sample_array(RandomSource& src, const InputModel& model, std::size_t n,
                          SamplerMethod method = SamplerMethod::inverse);

}  // namespace paramsort

#endif  // PARAMSORT_DISTRIBUTIONS_HPP
