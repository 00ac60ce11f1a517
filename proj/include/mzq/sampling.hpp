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
#include <cstdint>
#include <random>
#include <vector>

#include "mzq/bloch.hpp"

namespace mzq {

using Rng = std::mt19937_64;

/// Uniform on the unit sphere (area measure), via normalized Gaussians.
BlochVector random_pure_bloch(Rng& rng);

/// Uniform over the unit ball (volume measure), via cube rejection.
BlochVector random_mixed_bloch(Rng& rng);

/// Deterministic equal-area spiral on the unit sphere.
///
/// The z coordinates are evenly spaced on [-1, 1] with both poles included,
/// azimuths advance by the golden angle. The point count is rounded up to an
/// odd number so the equator z = 0 is hit exactly.
std::vector<BlochVector> sphere_lattice(std::size_t n_points);

/// Deterministic cover of the open ball: the origin plus spiral lattices on
/// n_shells - 1 concentric shells at radii k / n_shells, ~n_points in total.
std::vector<BlochVector> ball_lattice(std::size_t n_points, std::size_t n_shells = 64);

}  // namespace mzq
