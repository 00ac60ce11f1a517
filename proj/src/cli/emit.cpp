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

#include "emit.hpp"

#include <fmt/format.h>

namespace mzq::cli {

std::string real(double x) { return fmt::format("{:.17g}", x); }

Metadata base_metadata(const RunConfig& config) {
  std::string tolerances;
  for (const auto& [name, value] : config.tolerances) {
    if (!tolerances.empty()) tolerances += ' ';
    tolerances += name + '=' + real(value);
  }
  return {{"tool", std::string("mzq ") + MZQ_VERSION},
          {"command", config.command_line},
          {"seed", std::to_string(config.seed)},
          {"tolerances", tolerances}};
}

void write_csv_metadata(std::ostream& os, const Metadata& meta) {
  for (const auto& [key, value] : meta) {
    os << "# " << key << ": " << value << '\n';
  }
}

nlohmann::ordered_json json_metadata(const Metadata& meta) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta) {
    j[key] = value;
  }
  return j;
}

void write_json(std::ostream& os, const nlohmann::ordered_json& j) { os << j.dump(2) << '\n'; }

}  // namespace mzq::cli
