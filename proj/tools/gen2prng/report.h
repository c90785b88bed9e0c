// Copyright 2026 The gen2prng Authors
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

#ifndef GEN2_TOOLS_REPORT_H_
#define GEN2_TOOLS_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>

#include "gen2/randtest.h"
#include "gen2/scenarios.h"
#include "json.hpp"

namespace gen2::cli {

using nlohmann::json;

// Process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 1-16 hex digits, optional 0x prefix.
std::uint64_t ParseHex64(const std::string& text);
std::string Hex64(std::uint64_t v);

// Writes `doc` to `path` (pretty-printed); no-op for an empty path.
void WriteJson(const std::string& path, const json& doc);

json ToJson(const TestResult& r);
json ToJson(const ScenarioOutcome& o, bool with_transcript);

// Human-readable lines for a scenario: one per check and metric.
void PrintOutcome(const ScenarioOutcome& o);

}  // namespace gen2::cli

#endif  // GEN2_TOOLS_REPORT_H_
