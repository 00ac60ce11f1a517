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

#include "mzq/serialize.hpp"

#include <array>
#include <stdexcept>

namespace nlohmann {

namespace {

std::array<double, 3> triple(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != 3) {
    throw std::invalid_argument(std::string("'") + key + "' must be an array of 3 numbers");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

}  // namespace

void adl_serializer<mzq::QubitState>::to_json(json& j, const mzq::QubitState& state) {
  const auto& s = state.bloch();
  j = json{{"s", {s.x(), s.y(), s.z()}}};
}

mzq::QubitState adl_serializer<mzq::QubitState>::from_json(const json& j) {
  const auto s = triple(j, "s");
  return mzq::QubitState(s[0], s[1], s[2]);
}

void adl_serializer<mzq::BlochObservable>::to_json(json& j, const mzq::BlochObservable& obs) {
  const auto& a = obs.axis().vec();
  j = json{{"alpha1", obs.alpha1()}, {"alpha2", obs.alpha2()}, {"axis", {a.x, a.y, a.z}}};
}

mzq::BlochObservable adl_serializer<mzq::BlochObservable>::from_json(const json& j) {
  const auto a = triple(j, "axis");
  return mzq::BlochObservable(j.at("alpha1").get<double>(), j.at("alpha2").get<double>(),
                              mzq::UnitAxis(a[0], a[1], a[2]));
}

}  // namespace nlohmann
