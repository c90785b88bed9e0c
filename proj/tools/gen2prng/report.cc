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

#include "report.h"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace gen2::cli {

std::uint64_t ParseHex64(const std::string& text) {
  std::string t = text;
  if (t.starts_with("0x") || t.starts_with("0X")) t = t.substr(2);
  if (t.empty() || t.size() > 16 || t.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
    throw UsageError("expected a hex value, got '" + text + "'");
  }
  return std::stoull(t, nullptr, 16);
}

std::string Hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

void WriteJson(const std::string& path, const json& doc) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << doc.dump(2) << "\n";
}

json ToJson(const TestResult& r) {
  json j = {{"name", r.name},
            {"alpha", r.alpha},
            {"statistic", r.statistic},
            {"threshold", r.threshold},
            {"pass", r.pass}};
  if (r.degrees_of_freedom > 0) j["degrees_of_freedom"] = r.degrees_of_freedom;
  if (r.block_size > 0) j["block_size"] = r.block_size;
  if (r.shift > 0) j["shift"] = r.shift;
  return j;
}

json ToJson(const ScenarioOutcome& o, bool with_transcript) {
  json checks = json::array();
  for (const auto& c : o.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  json j = {{"scenario", o.name},
            {"run_seed", Hex64(o.run_seed)},
            {"passed", o.passed()},
            {"attack_detected", o.attack_detected},
            {"checks", checks},
            {"metrics", o.metrics},
            {"transcript_events", o.transcript.size()}};
  if (with_transcript) {
    json events = json::array();
    for (const auto& e : o.transcript) {
      std::string hex;
      for (std::uint8_t b : e.bytes) {
        char buf[3];
        std::snprintf(buf, sizeof buf, "%02x", b);
        hex += buf;
      }
      events.push_back({{"action", ToString(e.action)},
                        {"from", ToString(e.from)},
                        {"to", ToString(e.to)},
                        {"actor", ToString(e.actor)},
                        {"bytes", hex}});
    }
    j["transcript"] = std::move(events);
  }
  return j;
}

void PrintOutcome(const ScenarioOutcome& o) {
  std::cout << o.name << " (run seed " << Hex64(o.run_seed) << "): "
            << (o.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : o.checks) {
    std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
  }
  for (const auto& [k, v] : o.metrics) std::cout << "  " << k << " = " << v << "\n";
}

}  // namespace gen2::cli
