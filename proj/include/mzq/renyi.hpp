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

#include <limits>

#include "mzq/bloch.hpp"

namespace mzq {

/// Entropic index q > 0. q = kMinEntropy selects H_inf = -ln max_i p_i.
inline constexpr double kMinEntropy = std::numeric_limits<double>::infinity();

/// H_q({p+, p-}) = ln(p+^q + p-^q) / (1 - q), in nats.
///
/// Inside |q - 1| < kShannonSwitchWidth the Shannon form -sum p ln p is used.
/// Zero probabilities contribute 0 for every q > 0. Throws on q <= 0 or NaN.
double renyi_entropy(const ProbPair& p, double q);

/// H_q of the outcome distribution of obs in state.
double entropy_of_observable(const BlochObservable& obs, const QubitState& state, double q);

/// H_q of {(1+x)/2, (1-x)/2}; the H_q(P) / H_q(V) of the P-V plane. x in [0, 1].
double binary_renyi(double x, double q);

/// H_q(P) + H_q(V) for P, V in [0, 1].
double entropy_sum(double predictability, double visibility, double q);

}  // namespace mzq
