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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mzq/tolerances.hpp"

namespace mzq {

namespace {

void check_index(double q) {
  if (!(q > 0.0)) {
    throw std::invalid_argument("Renyi index must be positive (q = " + std::to_string(q) + ")");
  }
}

double shannon(const std::array<double, 2>& p) {
  double h = 0.0;
  for (double pi : p) {
    if (pi > 0.0) {
      h -= pi * std::log(pi);
    }
  }
  return h;
}

double unclamped_renyi(const std::array<double, 2>& p, double q) {
  if (std::isinf(q)) {
    return -std::log(std::max(p[0], p[1]));
  }
  if (std::abs(q - 1.0) < kShannonSwitchWidth) {
    return shannon(p);
  }
  if (std::abs(q - 1.0) < 0.5) {
    // sum p^q - 1 = sum p (p^(q-1) - 1); expm1/log1p keep the O(q-1)
    // numerator accurate as q approaches the Shannon window.
    double excess = 0.0;
    for (double pi : p) {
      if (pi > 0.0) {
        excess += pi * std::expm1((q - 1.0) * std::log(pi));
      }
    }
    return std::log1p(excess) / (1.0 - q);
  }
  double sum = 0.0;
  for (double pi : p) {
    if (pi > 0.0) {
      sum += std::pow(pi, q);
    }
  }
  return std::log(sum) / (1.0 - q);
}

}  // namespace

double renyi_entropy(const ProbPair& pair, double q) {
  check_index(q);
  // Two outcomes: 0 <= H_q <= ln 2; the clamp only removes last-bit overshoot.
  // Adding +0.0 turns the -0 of ln(1) / (1 - q) for q > 1 into +0.
  return std::clamp(unclamped_renyi({pair.p_plus(), pair.p_minus()}, q), 0.0, std::numbers::ln2) + 0.0;
}

double entropy_of_observable(const BlochObservable& obs, const QubitState& state, double q) {
  return renyi_entropy(probabilities(obs, state), q);
}

double binary_renyi(double x, double q) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("P and V must lie in [0, 1] (got " + std::to_string(x) + ")");
  }
  return renyi_entropy(ProbPair::from_projection(x), q);
}

double entropy_sum(double predictability, double visibility, double q) {
  return binary_renyi(predictability, q) + binary_renyi(visibility, q);
}

}  // namespace mzq
