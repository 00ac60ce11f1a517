// Copyright 2026 The mzq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mzq/renyi.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "mzq/interferometer.hpp"
#include "mzq/sampling.hpp"

using namespace mzq;

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// Reference values computed with 40-digit mpmath.
constexpr double kH1AtInvSqrt2 = 0.41649553069968745;
constexpr double kLn4Over3 = 0.28768207245178093;

}  // namespace

TEST(Renyi, UniformIsLn2ForAnyIndex) {
  for (double q : {0.1, 0.5, 1.0, 1.0 + 1e-9, 1.3, 2.0, 7.0, kMinEntropy}) {
    EXPECT_NEAR(renyi_entropy(ProbPair(0.5, 0.5), q), kLn2, 1e-15) << q;
  }
}

TEST(Renyi, SharpDistributionIsZero) {
  for (double q : {0.1, 0.5, 1.0, 2.0, 7.0, kMinEntropy}) {
    EXPECT_EQ(renyi_entropy(ProbPair(1.0, 0.0), q), 0.0) << q;
    EXPECT_EQ(renyi_entropy(ProbPair(0.0, 1.0), q), 0.0) << q;
  }
}

TEST(Renyi, ReferenceValues) {
  const auto p = ProbPair::from_projection(kInvSqrt2);
  EXPECT_NEAR(renyi_entropy(p, 2.0), kLn4Over3, 1e-15);
  EXPECT_NEAR(renyi_entropy(p, 1.0), kH1AtInvSqrt2, 1e-15);
  EXPECT_NEAR(renyi_entropy(p, kMinEntropy), -std::log(p.max()), 1e-15);
  // 2 H_1 is the q = 1 contour label 0.833 of the P-V plane.
  EXPECT_NEAR(2 * renyi_entropy(p, 1.0), 0.833, 5e-4);
}

TEST(Renyi, RejectsNonPositiveIndex) {
  EXPECT_THROW(renyi_entropy(ProbPair(0.5, 0.5), 0.0), std::invalid_argument);
  EXPECT_THROW(renyi_entropy(ProbPair(0.5, 0.5), -1.0), std::invalid_argument);
  EXPECT_THROW(renyi_entropy(ProbPair(0.5, 0.5), NAN), std::invalid_argument);
}

TEST(Renyi, ObservableEntropy) {
  EXPECT_EQ(entropy_of_observable(predictability_op(), QubitState(0, 0, 1), 2.0), 0.0);
  for (double q : {0.3, 1.0, 2.0}) {
    const QubitState axis_state(0, 0, 0.4);
    EXPECT_NEAR(entropy_of_observable(visibility_op(axis_state.theta()), axis_state, q), kLn2, 1e-15);
  }
  EXPECT_NEAR(entropy_of_observable(predictability_op(), QubitState(kInvSqrt2, 0, kInvSqrt2), 2.0), kLn4Over3,
              1e-15);
}

TEST(Renyi, EntropySumExamples) {
  for (double q : {0.25, 1.0, 2.0}) {
    EXPECT_NEAR(entropy_sum(0, 0, q), 2 * kLn2, 1e-15);
    EXPECT_NEAR(entropy_sum(1, 0, q), kLn2, 1e-15);
    EXPECT_NEAR(entropy_sum(0, 1, q), kLn2, 1e-15);
  }
  EXPECT_NEAR(entropy_sum(kInvSqrt2, kInvSqrt2, 2.0), 0.57536414490356186, 1e-15);
  EXPECT_THROW(entropy_sum(1.2, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(entropy_sum(0.5, -0.1, 1.0), std::invalid_argument);
}

TEST(Renyi, EntropySumIsSymmetric) {
  Rng rng(83);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> index(0.05, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double p = unit(rng);
    const double v = unit(rng);
    const double q = index(rng);
    EXPECT_EQ(entropy_sum(p, v, q), entropy_sum(v, p, q));
  }
}

TEST(Renyi, GenericFormMatchesPowerSumAwayFromOne) {
  // Near q = 1 the implementation rewrites sum p^q - 1; check it against the
  // plain formula where the latter is still well conditioned.
  Rng rng(89);
  std::uniform_real_distribution<double> prob(0.01, 0.99);
  for (double q : {0.55, 0.8, 0.99, 1.01, 1.3, 1.49}) {
    for (int i = 0; i < 100; ++i) {
      const double p = prob(rng);
      const double plain = std::log(std::pow(p, q) + std::pow(1 - p, q)) / (1 - q);
      EXPECT_NEAR(renyi_entropy(ProbPair(p, 1 - p), q), plain, 1e-12 / std::abs(1 - q));
    }
  }
}

TEST(Renyi, ZeroProbabilityContributesNothing) {
  for (double q : {0.01, 0.5, 3.0}) {
    EXPECT_EQ(renyi_entropy(ProbPair(0.0, 1.0), q), 0.0);
  }
  EXPECT_EQ(renyi_entropy(ProbPair(0.0, 1.0), 1.0), 0.0);
}

TEST(RenyiProperties, MonotoneRangeContinuity) {
  Rng rng(97);
  std::uniform_real_distribution<double> prob(1e-3, 0.499);
  std::uniform_real_distribution<double> index(0.05, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const double p = prob(rng);
    const ProbPair pair = i % 2 ? ProbPair(p, 1 - p) : ProbPair(1 - p, p);
    double q1 = index(rng);
    double q2 = index(rng);
    if (q1 > q2) std::swap(q1, q2);
    if (q2 - q1 > 1e-3) {
      EXPECT_LT(renyi_entropy(pair, q2), renyi_entropy(pair, q1));
    }
    EXPECT_GT(renyi_entropy(pair, q1), renyi_entropy(pair, kMinEntropy));
    for (double q : {q1, q2, 1.0}) {
      const double h = renyi_entropy(pair, q);
      EXPECT_GE(h, 0.0);
      EXPECT_LE(h, kLn2);
    }
    const double h1 = renyi_entropy(pair, 1.0);
    EXPECT_LT(std::abs(renyi_entropy(pair, 1.0 + 1e-6) - h1), 1e-5);
    EXPECT_LT(std::abs(renyi_entropy(pair, 1.0 - 1e-6) - h1), 1e-5);
  }
}

TEST(RenyiProperties, SmoothAcrossShannonWindow) {
  const ProbPair pair(0.3, 0.7);
  const double h1 = renyi_entropy(pair, 1.0);
  // dH/dq at q = 1 is finite, so the jump at the window edge is O(width).
  for (double dq : {2e-7, 1e-7, 5e-8, -5e-8, -1e-7, -2e-7}) {
    EXPECT_NEAR(renyi_entropy(pair, 1.0 + dq), h1, 1e-7);
  }
}
