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

#include "mzq/entropic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "mzq/interferometer.hpp"
#include "mzq/renyi.hpp"
#include "mzq/sampling.hpp"

namespace mzq {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
constexpr int kRefineBits = std::numeric_limits<double>::digits / 2;

void check_concave_range(double q) {
  if (!(q > 0.0 && q <= kMaxConcaveIndex)) {
    throw std::domain_error(
        "q = " + std::to_string(q) +
        " is outside (0, 2]: the restriction to pure states relies on concavity of the "
        "Renyi entropy, which only holds for q in (0, 2]");
  }
}

struct CirclePoint {
  double alpha;
  double p;
  double v;
};

CirclePoint on_circle(double alpha) {
  // The quarter-circle endpoints are pinned exactly.
  if (alpha <= 0.0) return {0.0, 1.0, 0.0};
  if (alpha >= kHalfPi) return {kHalfPi, 0.0, 1.0};
  return {alpha, std::clamp(std::cos(alpha), 0.0, 1.0), std::clamp(std::sin(alpha), 0.0, 1.0)};
}

double circle_objective(double alpha, double q) {
  const auto pt = on_circle(alpha);
  return entropy_sum(pt.p, pt.v, q);
}

double q_star_equation(double q) {
  return 2.0 * binary_renyi(kInvSqrt2, q) - std::numbers::ln2;
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kI:
      return "I";
    case Regime::kII:
      return "II";
    case Regime::kIII:
      return "III";
  }
  return "?";
}

MinimizationResult minimize_entropy_sum(double q) {
  check_concave_range(q);

  const std::size_t n = kAlphaGridSize;
  std::vector<double> grid(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    grid[i] = circle_objective(kHalfPi * static_cast<double>(i) / static_cast<double>(n), q);
  }
  auto alpha_at = [&](std::size_t i) { return kHalfPi * static_cast<double>(i) / static_cast<double>(n); };

  struct Candidate {
    double alpha;
    double value;
    bool boundary;
  };
  std::vector<Candidate> candidates;
  candidates.push_back({0.0, grid[0], true});
  candidates.push_back({kHalfPi, grid[n], true});
  for (std::size_t i = 1; i < n; ++i) {
    if (grid[i] <= grid[i - 1] && grid[i] <= grid[i + 1]) {
      boost::uintmax_t iters = 200;
      const auto [a, fa] = boost::math::tools::brent_find_minima(
          [q](double x) { return circle_objective(x, q); }, alpha_at(i - 1), alpha_at(i + 1),
          kRefineBits, iters);
      candidates.push_back({a, fa, false});
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) best = std::min(best, c.value);

  // Boundary points first so that a basin collapsing onto an endpoint is
  // reported as that endpoint.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.boundary && !b.boundary; });
  MinimizationResult result{q, best, {}, Regime::kI, n + 1, std::ldexp(1.0, 1 - kRefineBits)};
  for (const auto& c : candidates) {
    if (c.value - best > kMinimizerValueTol) continue;
    const bool seen = std::any_of(result.minimizers.begin(), result.minimizers.end(), [&](const Minimizer& m) {
      return std::abs(m.alpha - c.alpha) <= kMinimizerAngleTol;
    });
    if (seen) continue;
    const auto pt = on_circle(c.alpha);
    result.minimizers.push_back({pt.alpha, pt.v, pt.p,
                                 c.boundary ? Minimizer::Kind::kBoundary : Minimizer::Kind::kInterior});
  }
  std::sort(result.minimizers.begin(), result.minimizers.end(),
            [](const Minimizer& a, const Minimizer& b) { return a.alpha < b.alpha; });

  const bool has_boundary = std::any_of(result.minimizers.begin(), result.minimizers.end(),
                                        [](const Minimizer& m) { return m.kind == Minimizer::Kind::kBoundary; });
  const bool has_interior = std::any_of(result.minimizers.begin(), result.minimizers.end(),
                                        [](const Minimizer& m) { return m.kind == Minimizer::Kind::kInterior; });
  result.regime = has_boundary && has_interior ? Regime::kII : (has_boundary ? Regime::kI : Regime::kIII);
  return result;
}

QStarResult find_q_star(double tolerance) {
  if (!(tolerance >= 1e-14 && tolerance <= 1e-3)) {
    throw std::invalid_argument("q* tolerance must lie in [1e-14, 1e-3]");
  }
  const double lo = 1.01;
  const double hi = 2.0;
  const double f_lo = q_star_equation(lo);
  const double f_hi = q_star_equation(hi);
  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    throw std::logic_error("2 H_q(1/sqrt 2) - ln 2 does not change sign on [1.01, 2] (f(1.01) = " +
                           std::to_string(f_lo) + ", f(2) = " + std::to_string(f_hi) + ")");
  }
  boost::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      q_star_equation, lo, hi, f_lo, f_hi, [tolerance](double x, double y) { return std::abs(y - x) <= tolerance; },
      iters);
  const double root = 0.5 * (a + b);
  return {root, q_star_equation(root), b - a, static_cast<std::size_t>(iters)};
}

double q_star() {
  static const double cached = find_q_star(1e-12).q_star;
  return cached;
}

Regime classify_regime(double q, double band_eps) {
  check_concave_range(q);
  const double qs = q_star();
  if (std::abs(q - qs) <= band_eps) return Regime::kII;
  return q < qs ? Regime::kI : Regime::kIII;
}

double state_entropy_sum(const QubitState& state, double q) {
  return entropy_of_observable(predictability_op(), state, q) +
         entropy_of_observable(visibility_op(state.theta()), state, q);
}

BruteForceResult brute_force_min(double q, std::size_t n_states, bool include_mixed) {
  if (n_states < kMinBruteForceStates) {
    throw std::invalid_argument("brute force needs at least " + std::to_string(kMinBruteForceStates) + " states");
  }
  BruteForceResult result{std::numeric_limits<double>::infinity(), BlochVector{},
                          std::numeric_limits<double>::infinity(), std::nullopt, 0};

  auto scan = [&](const std::vector<BlochVector>& points) {
    double local = std::numeric_limits<double>::infinity();
    for (const auto& s : points) {
      const double h = state_entropy_sum(QubitState(s), q);
      if (h < local) local = h;
      if (h < result.min_value) {
        result.min_value = h;
        result.argmin = s;
      }
    }
    result.n_evaluated += points.size();
    return local;
  };

  result.pure_min = scan(sphere_lattice(n_states));
  if (include_mixed) {
    result.mixed_min = scan(ball_lattice(n_states));
  }
  return result;
}

double ContourGrid::interpolate(double v, double p) const {
  if (!(v >= 0.0 && v <= 1.0 && p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("contour interpolation point outside [0,1]^2");
  }
  const double scale = static_cast<double>(n - 1);
  const auto cell = [&](double x) { return std::min(static_cast<std::size_t>(x * scale), n - 2); };
  const std::size_t iv = cell(v);
  const std::size_t ip = cell(p);
  const double tv = v * scale - static_cast<double>(iv);
  const double tp = p * scale - static_cast<double>(ip);
  return (1 - tv) * (1 - tp) * at(iv, ip) + tv * (1 - tp) * at(iv + 1, ip) + (1 - tv) * tp * at(iv, ip + 1) +
         tv * tp * at(iv + 1, ip + 1);
}

ContourGrid contour_grid(double q, std::size_t n) {
  if (n < kMinContourSize) {
    throw std::invalid_argument("contour grid needs n >= " + std::to_string(kMinContourSize));
  }
  if (!(q > 0.0)) {
    throw std::invalid_argument("Renyi index must be positive");
  }
  ContourGrid grid{q, n, std::vector<double>(n), std::vector<double>(n * n)};
  std::vector<double> h(n);
  for (std::size_t k = 0; k < n; ++k) {
    grid.coords[k] = k + 1 == n ? 1.0 : static_cast<double>(k) / static_cast<double>(n - 1);
    h[k] = binary_renyi(grid.coords[k], q);
  }
  for (std::size_t ip = 0; ip < n; ++ip) {
    for (std::size_t iv = 0; iv < n; ++iv) {
      grid.values[ip * n + iv] = h[ip] + h[iv];
    }
  }
  return grid;
}

std::vector<BlochVector> unbiased_saturating_states(double theta) {
  const double cx = std::cos(theta) * kInvSqrt2;
  const double cy = std::sin(theta) * kInvSqrt2;
  return {BlochVector(cx, cy, kInvSqrt2), BlochVector(cx, cy, -kInvSqrt2), BlochVector(-cx, -cy, kInvSqrt2),
          BlochVector(-cx, -cy, -kInvSqrt2)};
}

RegionMinimum constrained_min_over_region(double q, const Region& region, std::size_t n_samples) {
  RegionMinimum best{std::numeric_limits<double>::infinity(), BlochVector{}, 0};
  for (const auto& points : {sphere_lattice(n_samples), ball_lattice(n_samples)}) {
    for (const auto& s : points) {
      if (!region(s)) continue;
      ++best.n_in_region;
      const double h = state_entropy_sum(QubitState(s), q);
      if (h < best.min_value) {
        best.min_value = h;
        best.argmin = s;
      }
    }
  }
  if (best.n_in_region == 0) {
    throw std::runtime_error("region contains no sampled states");
  }
  return best;
}

}  // namespace mzq
