#include "paramsort/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "paramsort/algorithms.hpp"

namespace paramsort {

std::string_view to_string(CounterMode mode) noexcept {
  switch (mode) {
    case CounterMode::exchange_interchanges:
      return "exchange";
    case CounterMode::textbook_interchanges:
      return "textbook";
    case CounterMode::inversions:
      return "inversions";
  }
  return "unknown";
}

CounterMode parse_counter_mode(std::string_view text) {
  if (text == "exchange" || text == "exchange_interchanges") {
    return CounterMode::exchange_interchanges;
  }
  if (text == "textbook" || text == "textbook_interchanges") {
    return CounterMode::textbook_interchanges;
  }
  if (text == "inversions") return CounterMode::inversions;
  throw std::invalid_argument("unknown counter mode: " + std::string(text));
}

void validate(const ExperimentConfig& config) {
  if (config.n == 0) throw std::invalid_argument("n must be at least 1");
  if (config.trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (config.p_values.empty()) throw std::invalid_argument("p grid is empty");
  for (std::size_t i = 0; i < config.p_values.size(); ++i) {
    const double p = config.p_values[i];
    if (!(p > 0.0 && p <= 1.0)) {
      throw std::invalid_argument("p must be in (0,1], got " + std::to_string(p));
    }
    if (i > 0 && !(config.p_values[i - 1] < p)) {
      throw std::invalid_argument("p grid must be strictly increasing");
    }
  }
}

ExperimentConfig reference_experiment(std::uint64_t master_seed) {
  ExperimentConfig config;
  config.n = 1000;
  config.trials = 100;
  config.p_values = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  config.counter_mode = CounterMode::exchange_interchanges;
  config.master_seed = master_seed;
  return config;
}

double RunningMoments::population_variance() const noexcept {
  if (count_ == 0) return 0.0;
  const double t = static_cast<double>(count_);
  return std::max(0.0, (sum_sq_ - sum_ * sum_ / t) / t);
}

double RunningMoments::population_sd() const noexcept {
  return std::sqrt(population_variance());
}

TrialSummary summarize(double p, std::size_t n, std::span<const std::uint64_t> counts) {
  RunningMoments moments;
  for (const auto c : counts) moments.add(static_cast<double>(c));
  TrialSummary out;
  out.p = p;
  out.n = n;
  out.trials = counts.size();
  out.mean_c = moments.mean();
  out.sd_c = moments.population_sd();
  if (out.mean_c > 0.0) out.cv_c = out.sd_c / out.mean_c;
  return out;
}

std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t p_index) noexcept {
  return mix_seed(master_seed, p_index);
}

std::uint64_t trial_seed(std::uint64_t cell_seed, std::size_t trial_index) noexcept {
  return mix_seed(cell_seed, trial_index);
}

std::uint64_t run_trial(const ExperimentConfig& config, GeometricParam param,
                        std::uint64_t seed) {
  RandomSource src(seed);
  auto items = sample_geometric_array(src, param, config.n, config.sampler_method);
  switch (config.counter_mode) {
    case CounterMode::exchange_interchanges:
      return exchange_selection_sort_in_place(std::span(items)).interchanges;
    case CounterMode::textbook_interchanges:
      return textbook_selection_sort_in_place(std::span(items)).interchanges;
    case CounterMode::inversions:
      return count_inversions(std::span<const std::uint64_t>(items));
  }
  return 0;
}

namespace {

unsigned resolve_jobs(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

// Calls body(i) for i in [0, count) on up to `jobs` threads. Work is claimed
// through an atomic cursor; the first exception is rethrown on the caller.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  jobs = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), count));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        cursor.store(count, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::jthread> threads;
  threads.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  threads.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

TrialSummary run_cell(const ExperimentConfig& config, double p, std::uint64_t seed) {
  validate(config);
  if (std::find(config.p_values.begin(), config.p_values.end(), p) == config.p_values.end()) {
    throw std::invalid_argument("p is not part of the configured grid");
  }
  const GeometricParam param(p);
  std::vector<std::uint64_t> counts(config.trials);
  parallel_for(config.trials, config.jobs, [&](std::size_t t) {
    counts[t] = run_trial(config, param, trial_seed(seed, t));
  });
  return summarize(p, config.n, counts);
}

std::vector<TrialSummary> run_experiment(const ExperimentConfig& config) {
  validate(config);
  const std::size_t cells = config.p_values.size();
  const std::size_t trials = config.trials;

  std::vector<std::uint64_t> seeds(cells);
  std::vector<GeometricParam> params;
  params.reserve(cells);
  for (std::size_t k = 0; k < cells; ++k) {
    seeds[k] = cell_seed(config.master_seed, k);
    params.emplace_back(config.p_values[k]);
  }

  // Flatten (cell, trial) so all workers stay busy across cell boundaries.
  std::vector<std::uint64_t> counts(cells * trials);
  parallel_for(cells * trials, config.jobs, [&](std::size_t task) {
    const std::size_t k = task / trials;
    const std::size_t t = task % trials;
    counts[task] = run_trial(config, params[k], trial_seed(seeds[k], t));
  });

  std::vector<TrialSummary> out;
  out.reserve(cells);
  for (std::size_t k = 0; k < cells; ++k) {
    out.push_back(summarize(config.p_values[k], config.n,
                            std::span(counts).subspan(k * trials, trials)));
  }
  return out;
}

}  // namespace paramsort
