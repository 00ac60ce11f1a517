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

#include "mzq/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mzq {

BlochVector random_pure_bloch(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
    const double n = v.norm();
    if (n > 1e-12) {
      return BlochVector(v * (1.0 / n));
    }
  }
}

BlochVector random_mixed_bloch(Rng& rng) {
  std::uniform_real_distribution<double> cube(-1.0, 1.0);
  for (;;) {
    const Vec3 v{cube(rng), cube(rng), cube(rng)};
    if (v.norm_squared() <= 1.0) {
      return BlochVector(v);
    }
  }
}

namespace {

void append_spiral(std::vector<BlochVector>& out, std::size_t count, double radius) {
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double last = static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) {
    const double z = -1.0 + 2.0 * static_cast<double>(k) / last;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = std::fmod(golden * static_cast<double>(k), 2.0 * std::numbers::pi);
    out.emplace_back(radius * rho * std::cos(phi), radius * rho * std::sin(phi), radius * z);
  }
}

std::size_t odd_at_least(std::size_t n) { return n % 2 == 0 ? n + 1 : n; }

}  // namespace

std::vector<BlochVector> sphere_lattice(std::size_t n_points) {
  if (n_points < 3) {
    throw std::invalid_argument("sphere lattice needs at least 3 points");
  }
  std::vector<BlochVector> out;
  const std::size_t count = odd_at_least(n_points);
  out.reserve(count);
  append_spiral(out, count, 1.0);
  return out;
}

std::vector<BlochVector> ball_lattice(std::size_t n_points, std::size_t n_shells) {
  if (n_shells < 2 || n_points < 3 * n_shells) {
    throw std::invalid_argument("ball lattice needs >= 2 shells and >= 3 points per shell");
  }
  std::vector<BlochVector> out;
  out.reserve(n_points + n_shells);
  out.emplace_back(0.0, 0.0, 0.0);
  const std::size_t per_shell = odd_at_least(n_points / (n_shells - 1));
  for (std::size_t k = 1; k < n_shells; ++k) {
    append_spiral(out, per_shell, static_cast<double>(k) / static_cast<double>(n_shells));
  }
  return out;
}

}  // namespace mzq
