// Repeated sample -> sort -> count trials aggregated per (n, p) cell.
//
// Seeding is hierarchical and fixed:
//
//   cell_seed  = mix_seed(master_seed, p_index)
//   trial_seed = mix_seed(cell_seed, trial_index)
//
// Each trial owns a fresh RandomSource(trial_seed), and per-trial counts are
// reduced in trial-index order, so summaries are bit-identical for any number
// of worker threads.

#ifndef PARAMSORT_MONTECARLO_HPP
#define PARAMSORT_MONTECARLO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "paramsort/distributions.hpp"

namespace paramsort {

enum class CounterMode {
  exchange_interchanges,
  textbook_interchanges,
  inversions,
};

std::string_view to_string(CounterMode mode) noexcept;
/// Accepts "exchange", "textbook", "inversions" (and the long enum spellings).
CounterMode parse_counter_mode(std::string_view text);

struct ExperimentConfig {
  std::size_t n = 1000;
  std::size_t trials = 100;
  std::vector<double> p_values;
  CounterMode counter_mode = CounterMode::exchange_interchanges;
  std::uint64_t master_seed = 0;
  SamplerMethod sampler_method = SamplerMethod::inverse;
  /// Worker threads; 0 means std::thread::hardware_concurrency(). Never
  /// affects results.
  unsigned jobs = 1;
};

/// Throws std::invalid_argument when n or trials is zero, or p_values is
/// empty, not strictly increasing, or contains a value outside (0, 1].
void validate(const ExperimentConfig& config);

/// n = 1000, 100 trials, p = 0.1 .. 0.9, exchange-sort interchanges.
ExperimentConfig reference_experiment(std::uint64_t master_seed);

struct TrialSummary {
  double p = 0.0;
  std::size_t n = 0;
  std::size_t trials = 0;
  double mean_c = 0.0;
  double sd_c = 0.0;              ///< population convention (divide by trials)
  std::optional<double> cv_c;     ///< sd_c / mean_c; empty when mean_c == 0

  friend bool operator==(const TrialSummary&, const TrialSummary&) = default;
};

/// Single-pass mean and variance using shifted data: the first value K is
/// subtracted from every observation before accumulating sum(x - K) and
/// sum((x - K)^2). Keeping the sums near zero avoids the cancellation of the
/// raw sum(x^2)/T - mean^2 form; for integer counts the sums stay exact while
/// sum((x - K)^2) < 2^53.
class RunningMoments {
 public:
  void add(double value) noexcept {
    if (count_ == 0) shift_ = value;
    const double d = value - shift_;
    ++count_;
    sum_ += d;
    sum_sq_ += d * d;
  }

  std::size_t count() const noexcept { return count_; }
  double mean() const noexcept {
    return count_ == 0 ? 0.0 : shift_ + sum_ / static_cast<double>(count_);
  }
  double population_variance() const noexcept;
  double population_sd() const noexcept;

 private:
  std::size_t count_ = 0;
  double shift_ = 0.0;
  double sum_ = 0.0;
  double sum_sq_ = 0.0;
};

/// Summarizes per-trial counts (in trial order) for one cell.
TrialSummary summarize(double p, std::size_t n, std::span<const std::uint64_t> counts);

std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t p_index) noexcept;
std::uint64_t trial_seed(std::uint64_t cell_seed, std::size_t trial_index) noexcept;

/// One count for one trial: draws n geometric(p) variates and applies the
/// configured counter.
std::uint64_t run_trial(const ExperimentConfig& config, GeometricParam param,
                        std::uint64_t trial_seed);

/// Runs config.trials trials of the cell for `p`. `p` must be one of
/// config.p_values (std::invalid_argument otherwise).
TrialSummary run_cell(const ExperimentConfig& config, double p, std::uint64_t cell_seed);

/// One summary per p in grid order, each seeded with cell_seed(master, index).
std::vector<TrialSummary> run_experiment(const ExperimentConfig& config);

}  // namespace paramsort

#endif  // PARAMSORT_MONTECARLO_HPP
