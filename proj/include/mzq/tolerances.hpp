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

namespace mzq {

// Bloch vectors with norm in (1, 1 + kEpsPos] are renormalized; beyond that they are rejected.
inline constexpr double kEpsPos = 1e-9;
inline constexpr double kEpsPure = 1e-9;
inline constexpr double kEpsUnit = 1e-12;
inline constexpr double kEpsNorm = 1e-12;
inline constexpr double kEpsGap = 1e-9;

// Values within this distance of the global minimum count as minimizers.
inline constexpr double kMinimizerValueTol = 1e-9;
// Minimizers closer than this in the circle angle are the same point.
inline constexpr double kMinimizerAngleTol = 1e-6;
// Half-width of the regime II band around the computed q*.
inline constexpr double kRegimeBandEps = 1e-6;
// |q - 1| below this evaluates the Shannon limit directly.
inline constexpr double kShannonSwitchWidth = 1e-7;

}  // namespace mzq
