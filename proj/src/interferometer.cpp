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

#include "mzq/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mzq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

PhaseShifter::PhaseShifter(double phi) {
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("phase must be finite");
  }
  phi_ = std::fmod(phi, kTwoPi);
  if (phi_ < 0.0) {
    phi_ += kTwoPi;
  }
  if (phi_ >= kTwoPi) {
    phi_ = 0.0;
  }
}

QubitState apply_beam_splitter(const QubitState& state) {
  // Quarter turn about y: (x, y, z) -> (z, y, -x), exact in floating point.
  const auto& s = state.bloch();
  return QubitState(BlochVector(s.z(), s.y(), -s.x()));
}

QubitState apply_phase_shifter(const QubitState& state, double phi) {
  const auto& s = state.bloch();
  const double c = std::cos(phi);
  const double n = std::sin(phi);
  return QubitState(BlochVector(c * s.x() - n * s.y(), n * s.x() + c * s.y(), s.z()));
}

QubitState apply(const MzElement& element, const QubitState& state) {
  return std::visit(overloaded{[&](const BeamSplitter&) { return apply_beam_splitter(state); },
                               [&](const PhaseShifter& ps) { return apply_phase_shifter(state, ps.phi()); }},
                    element);
}

QubitState propagate(const QubitState& state, std::span<const MzElement> elements) {
  QubitState out = state;
  for (const auto& e : elements) {
    out = mzq::apply(e, out);
  }
  return out;
}

double predictability(const QubitState& state) { return std::abs(state.bloch().z()); }

double visibility(const QubitState& state) {
  return std::min(std::hypot(state.bloch().x(), state.bloch().y()), 1.0);
}

BlochObservable predictability_op() { return BlochObservable(UnitAxis(0.0, 0.0, 1.0)); }

BlochObservable visibility_op(double phi) {
  return BlochObservable(UnitAxis(std::cos(phi), std::sin(phi), 0.0));
}

BlochObservable visibility_perp_op(double phi) {
  return BlochObservable(UnitAxis(-std::sin(phi), std::cos(phi), 0.0));
}

FringeScan fringe_scan(const QubitState& state, std::size_t n_phases) {
  if (n_phases < kMinFringePhases) {
    throw std::invalid_argument("fringe scan needs at least " + std::to_string(kMinFringePhases) +
                                " phases (got " + std::to_string(n_phases) + ")");
  }
  FringeScan scan;
  scan.points.reserve(n_phases);
  for (std::size_t k = 0; k < n_phases; ++k) {
    const double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(n_phases);
    const QubitState out = apply_beam_splitter(apply_phase_shifter(state, phi));
    const ProbPair p = ProbPair::from_projection(out.bloch().z());
    scan.points.push_back({phi, p.p_plus(), p.p_minus()});
  }
  const auto [lo, hi] = std::minmax_element(
      scan.points.begin(), scan.points.end(),
      [](const FringePoint& a, const FringePoint& b) { return a.p_d1 < b.p_d1; });
  scan.p_min = lo->p_d1;
  scan.p_max = hi->p_d1;
  scan.v_operational = (scan.p_max - scan.p_min) / (scan.p_max + scan.p_min);
  return scan;
}

DualityReport duality_report(const QubitState& state) {
  const double p = predictability(state);
  const double v = visibility(state);
  return {p, v, state.theta(), p * p + v * v};
}

}  // namespace mzq
