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

#include "mzq/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mzq/interferometer.hpp"

namespace mzq {

namespace {

double clamp_unit(double u) { return std::clamp(u, -1.0, 1.0); }

// arccos sqrt((1+u)/2) for u in [0, 1]. Going through atan2 keeps the
// 1 - M branch exact near M = 1, where arccos would lose half the digits.
double half_arccos(double u) {
  u = std::clamp(u, 0.0, 1.0);
  return std::atan2(std::sqrt(0.5 * (1.0 - u)), std::sqrt(0.5 * (1.0 + u)));
}

// sqrt(M_A M_B) - sqrt((1-M_A)(1-M_B)) with M = (1+u)/2, u in [0, 1].
double lp_product(double u, double v) {
  u = std::clamp(u, 0.0, 1.0);
  v = std::clamp(v, 0.0, 1.0);
  return 0.5 * (std::sqrt((1.0 + u) * (1.0 + v)) - std::sqrt((1.0 - u) * (1.0 - v)));
}

struct Projections {
  double as;
  double bs;
  double ab;
  double cross_s;
};

Projections project(const BlochObservable& a, const BlochObservable& b, const QubitState& state) {
  const Vec3& s = state.bloch().vec();
  return {clamp_unit(a.axis().dot(s)), clamp_unit(b.axis().dot(s)),
          clamp_unit(a.axis().dot(b.axis().vec())), a.axis().vec().cross(b.axis().vec()).dot(s)};
}

}  // namespace

UncertaintyVerdict make_verdict(double lhs, double rhs, Bound bound, double eps_gap) {
  const double gap = bound == Bound::kLower ? lhs - rhs : rhs - lhs;
  return {lhs, rhs, gap, gap >= -eps_gap, std::abs(gap) <= eps_gap};
}

UncertaintyVerdict sr_relation(const BlochObservable& a, const BlochObservable& b,
                               const QubitState& state, double eps_gap) {
  const auto p = project(a, b, state);
  const double lhs = (1.0 - p.as * p.as) * (1.0 - p.bs * p.bs);
  const double cov = p.ab - p.as * p.bs;
  return make_verdict(lhs, cov * cov + p.cross_s * p.cross_s, Bound::kLower, eps_gap);
}

UncertaintyVerdict hr_relation(const BlochObservable& a, const BlochObservable& b,
                               const QubitState& state, double eps_gap) {
  const auto p = project(a, b, state);
  const double lhs = (1.0 - p.as * p.as) * (1.0 - p.bs * p.bs);
  return make_verdict(lhs, p.cross_s * p.cross_s, Bound::kLower, eps_gap);
}

UncertaintyVerdict sr_pv_form(const QubitState& state, double phi, double eps_gap) {
  const double p = predictability(state);
  const double v = visibility(state);
  const double c = std::cos(state.theta() - phi);
  const double s = std::sin(state.theta() - phi);
  const double lhs = (1.0 - p * p) * (1.0 - v * v * c * c);
  const double rhs = p * p * v * v * c * c + v * v * s * s;
  return make_verdict(lhs, rhs, Bound::kLower, eps_gap);
}

double max_prob(const BlochObservable& obs, const QubitState& state) {
  return probabilities(obs, state).max();
}

UncertaintyVerdict lp_relation(const BlochObservable& a, const BlochObservable& b,
                               const QubitState& state, double eps_gap) {
  const auto p = project(a, b, state);
  const double lhs = half_arccos(std::abs(p.as)) + half_arccos(std::abs(p.bs));
  return make_verdict(lhs, half_arccos(std::abs(p.ab)), Bound::kLower, eps_gap);
}

UncertaintyVerdict lp_product_form(const BlochObservable& a, const BlochObservable& b,
                                   const QubitState& state, double eps_gap) {
  const auto p = project(a, b, state);
  return make_verdict(lp_product(std::abs(p.as), std::abs(p.bs)), overlap(a, b), Bound::kUpper,
                      eps_gap);
}

UncertaintyVerdict lp_bloch_form(const BlochObservable& a, const BlochObservable& b,
                                 const QubitState& state, double eps_gap) {
  const auto p = project(a, b, state);
  const double u = std::abs(p.as);
  const double v = std::abs(p.bs);
  const double lhs = std::sqrt((1.0 + u) * (1.0 + v)) - std::sqrt((1.0 - u) * (1.0 - v));
  return make_verdict(lhs, std::sqrt(2.0 * (1.0 + std::abs(p.ab))), Bound::kUpper, eps_gap);
}

UncertaintyVerdict lp_pv_form(const QubitState& state, double eps_gap) {
  return make_verdict(lp_product(predictability(state), visibility(state)),
                      std::numbers::sqrt2 / 2.0, Bound::kUpper, eps_gap);
}

UncertaintyVerdict duality_verdict(const QubitState& state, double eps_gap) {
  const auto d = duality_report(state);
  return make_verdict(d.lhs, 1.0, Bound::kUpper, eps_gap);
}

EquivalenceAudit equivalence_audit(const QubitState& state, double eps_gap) {
  EquivalenceAudit audit{duality_verdict(state, eps_gap), sr_pv_form(state, state.theta(), eps_gap),
                         lp_pv_form(state, eps_gap), false, false, false, false};
  audit.duality_holds = audit.duality.holds;
  audit.sr_holds = audit.sr.holds;
  audit.lp_holds = audit.lp.holds;
  audit.all_agree_on_saturation = audit.duality.saturated == audit.sr.saturated &&
                                  audit.sr.saturated == audit.lp.saturated;
  return audit;
}

}  // namespace mzq
