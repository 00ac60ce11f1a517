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

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mzq/cli.hpp"

namespace mzq::cli {

/// 17 significant digits, '.' decimal point: round-trips every double.
std::string real(double x);

/// Ordered key/value metadata written ahead of every result.
using Metadata = std::vector<std::pair<std::string, std::string>>;

Metadata base_metadata(const RunConfig& config);

/// '# key: value' lines.
void write_csv_metadata(std::ostream& os, const Metadata& meta);

nlohmann::ordered_json json_metadata(const Metadata& meta);

/// Two-space indented JSON followed by a newline.
void write_json(std::ostream& os, const nlohmann::ordered_json& j);

}  // namespace mzq::cli
