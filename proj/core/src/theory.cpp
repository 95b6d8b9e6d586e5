#include "paramsort/theory.hpp"

#include <cmath>

namespace paramsort {

namespace {
constexpr std::uint64_t kMaxSeriesTerms = 1'000'000;
}

double tie_probability(const InputModel& model) {
  if (const auto* geo = std::get_if<Geometric>(&model)) {
    const double p = geo->param.p();
    return p / (2.0 - p);
  }
  return 0.0;
}

double tie_probability_series(const std::function<double(std::uint64_t)>& pmf, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("series tolerance must be positive");

  double sum = 0.0;
  double compensation = 0.0;
  double previous = 0.0;
  for (std::uint64_t r = 0; r < kMaxSeriesTerms; ++r) {
    const double f = pmf(r);
    const double term = f * f;

    // Neumaier summation.
    const double t = sum + term;
    compensation += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;

    if (r > 0 && previous > 0.0) {
      const double ratio = term / previous;
      if (ratio < 1.0) {
        const double tail = term * ratio / (1.0 - ratio);
        if (tail < tol) return sum + compensation;
      }
    } else if (r > 0 && previous == 0.0 && term == 0.0) {
      // Two consecutive empty cells: treat the support as exhausted.
      return sum + compensation;
    }
    previous = term;
  }
  throw SeriesConvergenceError("tie probability series did not converge within 1e6 terms");
}

double interchange_probability(const InputModel& model) {
  if (const auto* geo = std::get_if<Geometric>(&model)) {
    const double p = geo->param.p();
    return (1.0 - p) / (2.0 - p);
  }
  return 0.5;
}

double expected_interchanges(const InputModel& model, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  if (const auto* geo = std::get_if<Geometric>(&model)) {
    // Same value as pairs * interchange_probability(), with one rounding fewer.
    const double p = geo->param.p();
    return pairs * (1.0 - p) / (2.0 - p);
  }
  return pairs * 0.5;
}

TheoryPrediction predict(const InputModel& model, std::uint64_t n) {
  TheoryPrediction out;
  out.n = n;
  out.model = model;
  out.tie_probability = tie_probability(model);
  out.interchange_probability = interchange_probability(model);
  out.expected_interchanges = expected_interchanges(model, n);
  return out;
}

}  // namespace paramsort
