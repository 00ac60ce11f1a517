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

// JSON records for states and observables:
//   state       {"s": [sx, sy, sz]}
//   observable  {"alpha1": a1, "alpha2": a2, "axis": [ax, ay, az]}
// Parsing goes through the validating constructors, so malformed or
// unphysical records raise std::invalid_argument (or nlohmann::json errors
// for missing keys / wrong types).

#include <json.hpp>

#include "mzq/bloch.hpp"

namespace nlohmann {

template <>
struct adl_serializer<mzq::QubitState> {
  static void to_json(json& j, const mzq::QubitState& state);
  static mzq::QubitState from_json(const json& j);
};

template <>
struct adl_serializer<mzq::BlochObservable> {
  static void to_json(json& j, const mzq::BlochObservable& obs);
  static mzq::BlochObservable from_json(const json& j);
};

}  // namespace nlohmann
