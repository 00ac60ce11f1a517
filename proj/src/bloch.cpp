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

#include "mzq/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mzq {

BlochVector::BlochVector(double sx, double sy, double sz, double eps_pos) : s_{sx, sy, sz} {
  if (!std::isfinite(sx) || !std::isfinite(sy) || !std::isfinite(sz)) {
    throw std::invalid_argument("Bloch vector components must be finite");
  }
  const double n = s_.norm();
  if (n > 1.0 + eps_pos) {
    throw std::invalid_argument("Bloch norm exceeds 1 (|s| = " + std::to_string(n) + ")");
  }
  if (n > 1.0) {
    s_ = s_ * (1.0 / n);
  }
}

QubitState QubitState::from_matrix_variables(double w_plus, double r, double theta) {
  if (!(w_plus >= 0.0 && w_plus <= 1.0)) {
    throw std::invalid_argument("w+ must lie in [0, 1]");
  }
  if (!(r >= 0.0 && r <= 0.5)) {
    throw std::invalid_argument("r must lie in [0, 1/2]");
  }
  return QubitState(BlochVector(2.0 * r * std::cos(theta), 2.0 * r * std::sin(theta), 2.0 * w_plus - 1.0));
}

double QubitState::r() const { return 0.5 * std::hypot(bloch_.x(), bloch_.y()); }

double QubitState::theta() const {
  if (bloch_.x() == 0.0 && bloch_.y() == 0.0) {
    return 0.0;
  }
  double t = std::atan2(bloch_.y(), bloch_.x());
  if (t < 0.0) {
    t += 2.0 * std::numbers::pi;
  }
  // atan2 of a tiny negative y can round up to exactly 2 pi.
  return t >= 2.0 * std::numbers::pi ? 0.0 : t;
}

UnitAxis::UnitAxis(const Vec3& a) : a_(a) {
  if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(a.z)) {
    throw std::invalid_argument("axis components must be finite");
  }
  if (std::abs(a.norm() - 1.0) > kEpsUnit) {
    throw std::invalid_argument("observable axis must be a unit vector (|a| = " +
                                std::to_string(a.norm()) + ")");
  }
}

UnitAxis UnitAxis::normalized(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite axis");
  }
  return UnitAxis(v * (1.0 / n));
}

BlochObservable::BlochObservable(double alpha1, double alpha2, const UnitAxis& axis)
    : alpha1_(alpha1), alpha2_(alpha2), axis_(axis) {
  if (!std::isfinite(alpha1) || !std::isfinite(alpha2)) {
    throw std::invalid_argument("observable coefficients must be finite");
  }
  if (alpha2 == 0.0) {
    throw std::invalid_argument("alpha2 must be nonzero");
  }
}

ProbPair::ProbPair(double p_plus, double p_minus) : p_plus_(p_plus), p_minus_(p_minus) {
  if (!(p_plus >= 0.0 && p_plus <= 1.0 && p_minus >= 0.0 && p_minus <= 1.0)) {
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  }
  if (std::abs(p_plus + p_minus - 1.0) > kEpsNorm) {
    throw std::invalid_argument("probabilities must sum to 1");
  }
}

ProbPair ProbPair::from_projection(double u) {
  u = std::clamp(u, -1.0, 1.0);
  return ProbPair(0.5 * (1.0 + u), 0.5 * (1.0 - u));
}

double projection(const BlochObservable& obs, const QubitState& state) {
  return std::clamp(obs.axis().dot(state.bloch().vec()), -1.0, 1.0);
}

ProbPair probabilities(const BlochObservable& obs, const QubitState& state) {
  return ProbPair::from_projection(projection(obs, state));
}

double expectation(const BlochObservable& obs, const QubitState& state) {
  return obs.alpha1() + obs.alpha2() * projection(obs, state);
}

double variance(const BlochObservable& obs, const QubitState& state) {
  const double u = projection(obs, state);
  return obs.alpha2() * obs.alpha2() * (1.0 - u * u);
}

double overlap(const BlochObservable& a, const BlochObservable& b) {
  const double ab = std::min(std::abs(a.axis().dot(b.axis().vec())), 1.0);
  return std::sqrt(0.5 * (1.0 + ab));
}

double purity(const QubitState& state) { return 0.5 * (1.0 + state.bloch().norm_squared()); }

bool is_pure(const QubitState& state, double eps_pure) {
  return std::abs(state.bloch().norm() - 1.0) <= eps_pure;
}

}  // namespace mzq
