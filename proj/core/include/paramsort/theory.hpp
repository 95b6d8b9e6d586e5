// Closed-form interchange probabilities for iid inputs.
//
// For an iid pair (a, b): 2 P[a > b] = 1 - P[a = b]. The tie probability is
// zero for continuous inputs and sum_r f(r)^2 for discrete ones, which for the
// geometric pmf p(1-p)^r sums to p / (2 - p). Multiplying the per-pair
// probability by the n(n-1)/2 pairs gives the expected inversion count.

#ifndef PARAMSORT_THEORY_HPP
#define PARAMSORT_THEORY_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "paramsort/distributions.hpp"

namespace paramsort {

struct TheoryPrediction {
  std::uint64_t n = 0;
  InputModel model = ContinuousUniform{};
  double tie_probability = 0.0;
  double interchange_probability = 0.0;
  double expected_interchanges = 0.0;
};

/// Raised when a pmf series does not meet its tolerance within the term budget.
class SeriesConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double tie_probability(const InputModel& model);

/// Partial sum of sum_{r>=0} pmf(r)^2, stopped once the geometric-tail bound on
/// the remainder, t_r * q / (1 - q) with q = t_r / t_{r-1}, drops below `tol`.
/// Throws std::invalid_argument for tol <= 0 and SeriesConvergenceError after
/// one million terms.
double tie_probability_series(const std::function<double(std::uint64_t)>& pmf, double tol);

double interchange_probability(const InputModel& model);

/// n(n-1)/2 * interchange_probability(model). Exact expectation of the
/// inversion count of n iid draws. Throws std::invalid_argument for n == 0.
double expected_interchanges(const InputModel& model, std::uint64_t n);

TheoryPrediction predict(const InputModel& model, std::uint64_t n);

}  // namespace paramsort

#endif  // PARAMSORT_THEORY_HPP
