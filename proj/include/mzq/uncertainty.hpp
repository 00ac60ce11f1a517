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

#include "mzq/bloch.hpp"
#include "mzq/tolerances.hpp"

namespace mzq {

/// Both sides of an inequality plus its classification.
///
/// gap is oriented so that the relation holds iff gap >= 0: lhs - rhs for
/// lower bounds (lhs >= rhs), rhs - lhs for upper bounds (lhs <= rhs).
/// Gaps in (-eps_gap, 0) are numerical zeros, never violations.
struct UncertaintyVerdict {
  double lhs;
  double rhs;
  double gap;
  bool holds;
  bool saturated;
};

enum class Bound { kLower, kUpper };

UncertaintyVerdict make_verdict(double lhs, double rhs, Bound bound, double eps_gap = kEpsGap);

// The variance relations below are normalized by alpha2^2 beta2^2, i.e. they
// compare [1-(a.s)^2][1-(b.s)^2] against the covariance and commutator terms.

/// Schrödinger–Robertson: lhs >= [a.b - (a.s)(b.s)]^2 + [(a x b).s]^2.
UncertaintyVerdict sr_relation(const BlochObservable& a, const BlochObservable& b,
                               const QubitState& state, double eps_gap = kEpsGap);

/// Heisenberg–Robertson: lhs >= [(a x b).s]^2.
UncertaintyVerdict hr_relation(const BlochObservable& a, const BlochObservable& b,
                               const QubitState& state, double eps_gap = kEpsGap);

/// SR for the predictability observable against V_phi, written in P, V, theta:
/// (1-P^2)[1-V^2 cos^2(theta-phi)] >= P^2 V^2 cos^2(theta-phi) + V^2 sin^2(theta-phi).
UncertaintyVerdict sr_pv_form(const QubitState& state, double phi, double eps_gap = kEpsGap);

/// M_inf(A) = max_i p_i(A), in [1/2, 1].
double max_prob(const BlochObservable& obs, const QubitState& state);

/// Landau–Pollak, angle form: arccos sqrt(M_A) + arccos sqrt(M_B) >= arccos c.
UncertaintyVerdict lp_relation(const BlochObservable& a, const BlochObservable& b,
                               const QubitState& state, double eps_gap = kEpsGap);

/// Landau–Pollak, product form: sqrt(M_A M_B) - sqrt((1-M_A)(1-M_B)) <= c.
UncertaintyVerdict lp_product_form(const BlochObservable& a, const BlochObservable& b,
                                   const QubitState& state, double eps_gap = kEpsGap);

/// Landau–Pollak in Bloch components:
/// sqrt((1+|a.s|)(1+|b.s|)) - sqrt((1-|a.s|)(1-|b.s|)) <= 2c = sqrt(2(1+|a.b|)).
UncertaintyVerdict lp_bloch_form(const BlochObservable& a, const BlochObservable& b,
                                 const QubitState& state, double eps_gap = kEpsGap);

/// Landau–Pollak for P and V_theta (c = 1/sqrt 2):
/// sqrt((1+P)/2 (1+V)/2) - sqrt((1-P)/2 (1-V)/2) <= 1/sqrt 2.
UncertaintyVerdict lp_pv_form(const QubitState& state, double eps_gap = kEpsGap);

/// P^2 + V^2 <= 1.
UncertaintyVerdict duality_verdict(const QubitState& state, double eps_gap = kEpsGap);

struct EquivalenceAudit {
  UncertaintyVerdict duality;
  UncertaintyVerdict sr;  // sr_pv_form at phi = theta
  UncertaintyVerdict lp;  // lp_pv_form
  bool duality_holds;
  bool sr_holds;
  bool lp_holds;
  bool all_agree_on_saturation;

  bool all_hold() const { return duality_holds && sr_holds && lp_holds; }
};

EquivalenceAudit equivalence_audit(const QubitState& state, double eps_gap = kEpsGap);

}  // namespace mzq
