#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "paramsort/algorithms.hpp"
#include "paramsort/distributions.hpp"
#include "paramsort/montecarlo.hpp"
#include "paramsort/theory.hpp"

namespace paramsort {
namespace {

const std::vector<double> kGrid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

TEST(TieProbability, ClosedFormMatchesSeries) {
  for (const double p : kGrid) {
    const GeometricParam param(p);
    const double closed = tie_probability(Geometric{param});
    const double series =
        tie_probability_series([&](std::uint64_t r) { return geometric_pmf(param, r); }, 1e-15);
    EXPECT_NEAR(closed, series, 1e-12) << "p=" << p;
    EXPECT_NEAR(closed, p / (2.0 - p), 1e-15);
  }
}

TEST(TieProbability, MatchesIndependentSeries) {
  for (const double p : {0.05, 0.3, 0.75, 1.0}) {
    EXPECT_NEAR(tie_probability(Geometric{GeometricParam(p)}), oracle::geometric_tie_series(p, 4000),
                1e-12);
  }
}

TEST(TieProbability, DegenerateAndContinuous) {
  EXPECT_DOUBLE_EQ(tie_probability(Geometric{GeometricParam(1.0)}), 1.0);
  EXPECT_DOUBLE_EQ(
      tie_probability_series([](std::uint64_t r) { return r == 0 ? 1.0 : 0.0; }, 1e-12), 1.0);
  EXPECT_DOUBLE_EQ(tie_probability(ContinuousUniform{}), 0.0);
}

TEST(TieProbability, SeriesRejectsBadTolerance) {
  auto pmf = [](std::uint64_t r) { return 0.5 * std::pow(0.5, static_cast<double>(r)); };
  EXPECT_THROW(tie_probability_series(pmf, 0.0), std::invalid_argument);
  EXPECT_THROW(tie_probability_series(pmf, -1.0), std::invalid_argument);
}

TEST(TieProbability, SeriesReportsNonConvergence) {
  // Terms decay like 1/r: the tail bound never closes.
  auto slow = [](std::uint64_t r) { return 1.0 / std::sqrt(static_cast<double>(r) + 1.0); };
  EXPECT_THROW(tie_probability_series(slow, 1e-300), SeriesConvergenceError);
}

TEST(InterchangeProbability, Values) {
  EXPECT_DOUBLE_EQ(interchange_probability(ContinuousUniform{}), 0.5);
  EXPECT_DOUBLE_EQ(interchange_probability(Geometric{GeometricParam(1.0)}), 0.0);
  EXPECT_NEAR(interchange_probability(Geometric{GeometricParam(0.5)}), 1.0 / 3.0, 1e-15);
  for (const double p : kGrid) {
    EXPECT_NEAR(interchange_probability(Geometric{GeometricParam(p)}),
                oracle::geometric_pair_greater(p, 2000), 1e-10)
        << "p=" << p;
  }
}

TEST(InterchangeProbability, DecreasesInP) {
  double previous = 0.5;
  for (int k = 1; k <= 100; ++k) {
    const double q = interchange_probability(Geometric{GeometricParam(k / 100.0)});
    EXPECT_LT(q, previous) << "p=" << k / 100.0;
    EXPECT_GE(q, 0.0);
    previous = q;
  }
}

TEST(ExpectedInterchanges, ReferenceValues) {
  EXPECT_EQ(expected_interchanges(ContinuousUniform{}, 1000), 249750.0);
  EXPECT_EQ(expected_interchanges(Geometric{GeometricParam(0.5)}, 1000), 166500.0);
  EXPECT_EQ(expected_interchanges(ContinuousUniform{}, 1), 0.0);
  EXPECT_THROW(expected_interchanges(ContinuousUniform{}, 0), std::invalid_argument);
}

TEST(Predict, BundlesFields) {
  const auto pred = predict(Geometric{GeometricParam(0.5)}, 1000);
  EXPECT_EQ(pred.n, 1000u);
  EXPECT_NEAR(pred.tie_probability, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(pred.interchange_probability, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(pred.expected_interchanges, 166500.0);
}

// The closed form is the mean inversion count; check it against simulation.
class InversionBridge : public ::testing::TestWithParam<std::tuple<std::size_t, double>> {};

TEST_P(InversionBridge, SimulatedMeanWithinThreeStandardErrors) {
  const auto [n, p] = GetParam();
  const GeometricParam param(p);
  constexpr int kTrials = 20'000;
  RunningMoments moments;
  for (int t = 0; t < kTrials; ++t) {
    RandomSource src(mix_seed(0xB41D6E, static_cast<std::uint64_t>(t)));
    const auto items = sample_geometric_array(src, param, n);
    moments.add(static_cast<double>(count_inversions(std::span<const std::uint64_t>(items))));
  }
  const double se = moments.population_sd() / std::sqrt(static_cast<double>(kTrials));
  const double expected = expected_interchanges(Geometric{param}, n);
  EXPECT_NEAR(moments.mean(), expected, 3.0 * se) << "n=" << n << " p=" << p;
}

INSTANTIATE_TEST_SUITE_P(SmallCells, InversionBridge,
                         ::testing::Combine(::testing::Values(std::size_t{2}, std::size_t{8}),
                                            ::testing::Values(0.3, 0.6)));

}  // namespace
}  // namespace paramsort
