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

#ifndef GEN2_SCENARIOS_H_
#define GEN2_SCENARIOS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gen2/channel.h"
#include "gen2/protocol.h"

namespace gen2 {

// Environment variable that overrides every scenario's run seed.
inline constexpr const char* kRunSeedEnv = "GEN2_RUN_SEED";

// GEN2_RUN_SEED if set (hex, optional 0x), else `requested`, else a fresh
// value from std::random_device.
std::uint64_t ResolveRunSeed(std::optional<std::uint64_t> requested = std::nullopt);

// What the reader sees of one authentication: never ID or SSK.
struct ReaderRecord {
  Query query;
  std::optional<TagResponse> response;
  std::optional<Verdict> verdict;
};

struct SessionResult {
  enum class Status { kAuthenticated, kServerNoMatch, kTagRejected, kMessageLost, kRestartLimit };
  Status status = Status::kServerNoMatch;
  std::size_t restarts = 0;  // Ambiguous verdicts before the final attempt
  std::optional<std::uint16_t> reader_key;
  std::optional<std::uint16_t> tag_key;
  std::vector<ReaderRecord> reader_log;
};

// Steps 1-5 over the channel, restarting from step 1 on Ambiguous.
SessionResult Authenticate(Reader& reader, Tag& tag, Server& server, Channel& channel,
                           std::size_t max_restarts = 8);

// `count` tags with random credentials, labelled tag-0, tag-1, ...
ServerKeystore MakeRandomKeystore(std::size_t count, std::uint64_t seed);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ScenarioOutcome {
  std::string name;
  std::uint64_t run_seed = 0;
  bool attack_detected = false;
  std::vector<Check> checks;
  std::map<std::string, double> metrics;
  std::vector<ChannelEvent> transcript;

  bool passed() const;
  void AddCheck(std::string check_name, bool pass, std::string detail = {});
};

struct HonestConfig {
  std::size_t tags = 1;
  std::size_t rounds = 1;
  std::uint64_t run_seed = 0;
  int nonce_bits = kDefaultNonceBits;
  bool keep_transcript = true;
  // Registered tags; when null, `tags` random entries drawn from run_seed.
  const ServerKeystore* keystore = nullptr;
  // Receives the server's keystore after the last round.
  ServerKeystore* final_keystore = nullptr;
};
ScenarioOutcome RunHonestSession(const HonestConfig& config);

ScenarioOutcome RunReplayAttack(std::uint64_t run_seed, int nonce_bits = kDefaultNonceBits);

enum class Tamper { kFlipResponseBit, kFlipNonce3Bit, kForgeResponse };
std::string_view ToString(Tamper t);
std::optional<Tamper> ParseTamper(std::string_view name);

struct MitmConfig {
  Tamper tamper = Tamper::kFlipResponseBit;
  std::size_t trials = 1000;
  std::size_t tags = 1;
  std::uint64_t run_seed = 0;
  int nonce_bits = kDefaultNonceBits;
};
ScenarioOutcome RunMitmAttack(const MitmConfig& config);

struct TrackingConfig {
  std::size_t epochs = 1000;
  std::uint64_t run_seed = 0;
  // Control: credentials never rotate and the eavesdropped reader always
  // sends the same Query.
  bool frozen = false;
  int nonce_bits = kDefaultNonceBits;
};
ScenarioOutcome RunTrackingProbe(const TrackingConfig& config);

// Allowed accidental matches: five times the expectation, at least 3.
std::size_t AccidentalMatchBudget(std::size_t trials, std::size_t tags, int nonce_bits);

}  // namespace gen2

#endif  // GEN2_SCENARIOS_H_
