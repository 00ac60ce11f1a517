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

#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "mzq/bloch.hpp"

namespace mzq {

// Rotation convention: exp(-i t n.sigma/2) rotates the Bloch vector by +t
// about n (right-hand rule). The 50:50 beam splitter exp(-i pi sigma_y/4)
// therefore sends (0,0,1) to (1,0,0), and the phase shifter
// exp(-i phi sigma_z/2) advances theta by phi.

struct BeamSplitter {
  bool operator==(const BeamSplitter&) const = default;
};

struct PhaseShifter {
  /// Normalizes phi into [0, 2 pi).
  explicit PhaseShifter(double phi);
  double phi() const { return phi_; }
  bool operator==(const PhaseShifter&) const = default;

 private:
  double phi_;
};

using MzElement = std::variant<BeamSplitter, PhaseShifter>;

QubitState apply_beam_splitter(const QubitState& state);
QubitState apply_phase_shifter(const QubitState& state, double phi);
QubitState apply(const MzElement& element, const QubitState& state);
/// Applies the elements in order (first element acts first).
QubitState propagate(const QubitState& state, std::span<const MzElement> elements);

/// P = |<sigma_z>| = |sz|.
double predictability(const QubitState& state);
/// V = 2r = |(sx, sy)|.
double visibility(const QubitState& state);

BlochObservable predictability_op();
BlochObservable visibility_op(double phi);
BlochObservable visibility_perp_op(double phi);

struct FringePoint {
  double phi;
  double p_d1;
  double p_d2;
};

struct FringeScan {
  std::vector<FringePoint> points;
  double p_max;
  double p_min;
  /// (p_max - p_min) / (p_max + p_min) over the sampled phases.
  double v_operational;
};

/// Sweeps phi over n_phases equally spaced values in [0, 2 pi), sending the
/// state through PS(phi) and then the second beam splitter. D1 is the +
/// outcome of sigma_z at the output. Requires n_phases >= 8.
///
/// With an even phase count the grid is closed under phi -> phi + pi, so the
/// sampled extrema are mirror images and p_max + p_min = 1 up to round-off.
FringeScan fringe_scan(const QubitState& state_before_phase_shifter, std::size_t n_phases);

inline constexpr std::size_t kMinFringePhases = 8;

struct DualityReport {
  double predictability;
  double visibility;
  double theta;
  /// P^2 + V^2
  double lhs;
};

DualityReport duality_report(const QubitState& state);

}  // namespace mzq
