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

#include <stdexcept>

#include <gtest/gtest.h>

#include "mzq/sampling.hpp"

using namespace mzq;
using nlohmann::json;

TEST(Serialize, StateRecordShape) {
  const json j = QubitState(0.25, -0.5, 0.125);
  EXPECT_EQ(j.dump(), R"({"s":[0.25,-0.5,0.125]})");
}

TEST(Serialize, ObservableRecordShape) {
  const json j = BlochObservable(2.0, -1.5, UnitAxis(0, 1, 0));
  EXPECT_EQ(j.at("alpha1"), 2.0);
  EXPECT_EQ(j.at("alpha2"), -1.5);
  EXPECT_EQ(j.at("axis"), json::array({0.0, 1.0, 0.0}));
}

TEST(Serialize, TextRoundTripIsExact) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const QubitState st(random_mixed_bloch(rng));
    EXPECT_EQ(json::parse(json(st).dump()).get<QubitState>(), st);
    const BlochObservable obs(0.5 * i, 1.0 + i, UnitAxis(random_pure_bloch(rng).vec()));
    EXPECT_EQ(json::parse(json(obs).dump()).get<BlochObservable>(), obs);
  }
}

TEST(Serialize, RejectsInvalidRecords) {
  EXPECT_THROW(json::parse(R"({"s":[0,0,2]})").get<QubitState>(), std::invalid_argument);
  EXPECT_THROW(json::parse(R"({"s":[0,0]})").get<QubitState>(), std::invalid_argument);
  EXPECT_THROW(json::parse(R"({"alpha1":0,"alpha2":1,"axis":[1,1,0]})").get<BlochObservable>(),
               std::invalid_argument);
  EXPECT_THROW(json::parse(R"({"alpha1":0,"alpha2":0,"axis":[1,0,0]})").get<BlochObservable>(),
               std::invalid_argument);
  EXPECT_THROW(json::parse(R"({"alpha2":1,"axis":[1,0,0]})").get<BlochObservable>(), json::exception);
}
