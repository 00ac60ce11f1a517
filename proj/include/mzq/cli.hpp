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

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mzq::cli {

enum class OutputFormat { kCsv, kJson };

/// Options shared by every subcommand.
struct RunConfig {
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kCsv;
  std::optional<std::string> output_path;
  /// Effective tolerances after --tolerance NAME=VALUE overrides.
  std::map<std::string, double> tolerances;
  std::string command_line;

  double tolerance(const std::string& name) const { return tolerances.at(name); }
};

/// Default tolerance table; these are the only names --tolerance accepts.
std::map<std::string, double> default_tolerances();

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitViolation = 2;

/// Runs the command line (without the program name). Results go to out
/// unless --out names a file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzq::cli
