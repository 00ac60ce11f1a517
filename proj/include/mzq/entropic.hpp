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

// Minimum of H_q(P) + H_q(V) over the pure-state circle P^2 + V^2 = 1,
// the critical index q* where the boundary and symmetric minima tie, and
// sampling oracles over the Bloch ball.

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "mzq/bloch.hpp"
#include "mzq/tolerances.hpp"

namespace mzq {

/// q range where the Renyi entropy is concave in rho; the pure-state
/// restriction of the minimization is only valid here.
inline constexpr double kMaxConcaveIndex = 2.0;

enum class Regime {
  kI,    // 0 < q < q*: minimum ln 2 at the axes (V,P) = (0,1), (1,0)
  kII,   // q = q*:     ln 2, attained at the axes and at V = P = 1/sqrt 2
  kIII,  // q* < q <= 2: 2 H_q(1/sqrt 2), attained at V = P = 1/sqrt 2
};

std::string_view to_string(Regime r);

struct Minimizer {
  enum class Kind { kBoundary, kInterior };
  /// Circle angle: P = cos(alpha), V = sin(alpha), alpha in [0, pi/2].
  double alpha;
  double visibility;
  double predictability;
  Kind kind;
};

struct MinimizationResult {
  double q;
  double min_value;
  /// Sorted by alpha.
  std::vector<Minimizer> minimizers;
  Regime regime;
  std::size_t alpha_grid_size;
  double refine_tolerance;
};

inline constexpr std::size_t kAlphaGridSize = 10000;

/// Coarse scan over alpha plus Brent refinement of every basin. Throws
/// std::domain_error for q outside (0, 2].
MinimizationResult minimize_entropy_sum(double q);

struct QStarResult {
  double q_star;
  /// 2 H_{q*}(1/sqrt 2) - ln 2
  double residual;
  double bracket_width;
  std::size_t iterations;
};

/// Root of 2 H_q(1/sqrt 2) = ln 2 bracketed on [1.01, 2]. tolerance is the
/// final bracket width, in [1e-14, 1e-3]. Throws std::logic_error if the
/// bracket does not change sign.
QStarResult find_q_star(double tolerance);

/// q* at 1e-12 bracket width, computed once.
double q_star();

/// Band classification around the cached q*. Throws std::domain_error for q
/// outside (0, 2].
Regime classify_regime(double q, double band_eps = kRegimeBandEps);

struct BruteForceResult {
  double min_value;
  BlochVector argmin;
  double pure_min;
  std::optional<double> mixed_min;
  std::size_t n_evaluated;
};

inline constexpr std::size_t kMinBruteForceStates = 10000;

/// H_q(P;rho) + H_q(V_theta(rho);rho) evaluated through the Bloch-state
/// observables rather than the circle parametrization.
double state_entropy_sum(const QubitState& state, double q);

/// Sample minimum of state_entropy_sum over a sphere lattice of n_states pure
/// states, plus a ball lattice of ~n_states mixed states when requested.
BruteForceResult brute_force_min(double q, std::size_t n_states, bool include_mixed);

struct ContourGrid {
  double q;
  std::size_t n;
  /// Shared node coordinates for both axes: k / (n - 1).
  std::vector<double> coords;
  /// Row-major, values[ip * n + iv] = H_q(P = coords[ip]) + H_q(V = coords[iv]).
  std::vector<double> values;

  double at(std::size_t iv, std::size_t ip) const { return values[ip * n + iv]; }
  /// Bilinear interpolation inside [0,1]^2.
  double interpolate(double v, double p) const;
};

inline constexpr std::size_t kMinContourSize = 32;
inline constexpr std::string_view kConstraintLabel = "P^2+V^2=1";

ContourGrid contour_grid(double q, std::size_t n);

/// +-(cos t / sqrt 2, sin t / sqrt 2, +-1/sqrt 2): the four pure states with P = V = 1/sqrt 2.
std::vector<BlochVector> unbiased_saturating_states(double theta = 0.0);

using Region = std::function<bool(const BlochVector&)>;

struct RegionMinimum {
  double min_value;
  BlochVector argmin;
  std::size_t n_in_region;
};

/// Minimum of state_entropy_sum over the sphere and ball lattices of
/// n_samples points each, restricted to region. Throws std::runtime_error when
/// no lattice point satisfies the predicate.
RegionMinimum constrained_min_over_region(double q, const Region& region, std::size_t n_samples);

}  // namespace mzq
