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

// auth demo and attack {replay|mitm|tracking}.

#include <iostream>
#include <map>
#include <memory>
#include <optional>

#include "commands.h"
#include "gen2/keystore_io.h"
#include "gen2/scenarios.h"
#include "report.h"

namespace gen2::cli {
namespace {

struct CommonOptions {
  std::string seed;
  int nonce_bits = kDefaultNonceBits;
  std::string json_path;
  bool transcript = false;
};

void AddCommon(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--seed", o.seed, "Run seed, hex (GEN2_RUN_SEED overrides)");
  cmd->add_option("--nonce-bits", o.nonce_bits, "Response length n")->check(CLI::Range(1, 64));
  cmd->add_option("--json", o.json_path, "Write a JSON report here");
  cmd->add_flag("--transcript", o.transcript, "Include the channel transcript in the JSON");
}

std::uint64_t RunSeed(const CommonOptions& o) {
  return ResolveRunSeed(o.seed.empty() ? std::nullopt
                                       : std::optional<std::uint64_t>(ParseHex64(o.seed)));
}

int Finish(const std::vector<ScenarioOutcome>& outcomes, const CommonOptions& o) {
  bool pass = true;
  json reports = json::array();
  for (const auto& out : outcomes) {
    PrintOutcome(out);
    pass &= out.passed();
    reports.push_back(ToJson(out, o.transcript));
  }
  WriteJson(o.json_path, outcomes.size() == 1 ? reports.front()
                                              : json{{"passed", pass}, {"scenarios", reports}});
  return pass ? kExitPass : kExitFail;
}

// Folds repeated runs of one scenario into a single outcome: a check
// passes only if it passed in every run; metrics are summed.
ScenarioOutcome Fold(const std::vector<ScenarioOutcome>& runs) {
  ScenarioOutcome total;
  total.name = runs.front().name;
  total.run_seed = runs.front().run_seed;
  total.attack_detected = true;
  std::map<std::string, std::size_t> passes;
  std::vector<std::string> order;
  for (const auto& r : runs) {
    total.attack_detected &= r.attack_detected;
    for (const auto& c : r.checks) {
      if (!passes.contains(c.name)) order.push_back(c.name);
      passes[c.name] += c.pass ? 1 : 0;
    }
    for (const auto& [k, v] : r.metrics) total.metrics[k] += v;
    total.transcript.insert(total.transcript.end(), r.transcript.begin(), r.transcript.end());
  }
  for (const auto& name : order) {
    total.AddCheck(name, passes[name] == runs.size(),
                   std::to_string(passes[name]) + "/" + std::to_string(runs.size()) + " runs");
  }
  total.metrics["runs"] = static_cast<double>(runs.size());
  return total;
}

}  // namespace

void AddProtocolCommands(CLI::App& app, int& exit_code) {
  auto* auth = app.add_subcommand("auth", "Honest mutual authentication");
  auth->require_subcommand(1);
  {
    struct Options {
      CommonOptions common;
      std::size_t tags = 1;
      std::size_t rounds = 1;
      std::string keystore_in;
      std::string keystore_out;
    };
    auto o = std::make_shared<Options>();
    auto* cmd = auth->add_subcommand("demo", "Authenticate every tag for a number of rounds");
    AddCommon(cmd, o->common);
    auto* tags = cmd->add_option("--tags", o->tags, "Random tags to register");
    cmd->add_option("--rounds", o->rounds, "Authentications per tag");
    cmd->add_option("--keystore", o->keystore_in, "Load registered tags from this file")
        ->excludes(tags);
    cmd->add_option("--save-keystore", o->keystore_out, "Write the final keystore here");
    cmd->callback([o, &exit_code] {
      HonestConfig cfg;
      cfg.tags = o->tags;
      cfg.rounds = o->rounds;
      cfg.run_seed = RunSeed(o->common);
      cfg.nonce_bits = o->common.nonce_bits;
      cfg.keep_transcript = o->common.transcript;
      std::optional<ServerKeystore> loaded;
      if (!o->keystore_in.empty()) {
        loaded = LoadKeystore(o->keystore_in);
        cfg.keystore = &*loaded;
      }
      ServerKeystore final_keystore;
      cfg.final_keystore = &final_keystore;
      exit_code = Finish({RunHonestSession(cfg)}, o->common);
      if (!o->keystore_out.empty()) SaveKeystore(final_keystore, o->keystore_out);
    });
  }

  auto* attack = app.add_subcommand("attack", "Adversary scenarios");
  attack->require_subcommand(1);
  {
    struct Options {
      CommonOptions common;
      std::size_t trials = 1;
    };
    auto o = std::make_shared<Options>();
    auto* cmd = attack->add_subcommand("replay", "Replay recorded responses after rotation");
    AddCommon(cmd, o->common);
    cmd->add_option("--trials", o->trials, "Independent runs")->check(CLI::PositiveNumber);
    cmd->callback([o, &exit_code] {
      const std::uint64_t seed = RunSeed(o->common);
      std::vector<ScenarioOutcome> runs;
      // Each run uses three consecutive seeds internally.
      for (std::size_t i = 0; i < o->trials; ++i) {
        runs.push_back(RunReplayAttack(seed + 3 * i, o->common.nonce_bits));
      }
      exit_code = Finish({Fold(runs)}, o->common);
    });
  }
  {
    struct Options {
      CommonOptions common;
      std::size_t trials = 1000;
      std::size_t tags = 1;
      std::string tamper = "all";
    };
    auto o = std::make_shared<Options>();
    auto* cmd = attack->add_subcommand("mitm", "Tamper with messages in flight");
    AddCommon(cmd, o->common);
    cmd->add_option("--trials", o->trials, "Tampered sessions")->check(CLI::PositiveNumber);
    cmd->add_option("--tags", o->tags, "Registered tags")->check(CLI::PositiveNumber);
    cmd->add_option("--tamper", o->tamper, "flip_response_bit, flip_nonce3_bit, forge_response or all")
        ->check(CLI::IsMember({"all", "flip_response_bit", "flip_nonce3_bit", "forge_response"}));
    cmd->callback([o, &exit_code] {
      MitmConfig cfg;
      cfg.trials = o->trials;
      cfg.tags = o->tags;
      cfg.run_seed = RunSeed(o->common);
      cfg.nonce_bits = o->common.nonce_bits;
      std::vector<ScenarioOutcome> outcomes;
      for (Tamper t : {Tamper::kFlipResponseBit, Tamper::kFlipNonce3Bit, Tamper::kForgeResponse}) {
        if (o->tamper != "all" && o->tamper != ToString(t)) continue;
        cfg.tamper = t;
        outcomes.push_back(RunMitmAttack(cfg));
      }
      exit_code = Finish(outcomes, o->common);
    });
  }
  {
    struct Options {
      CommonOptions common;
      std::size_t trials = 1000;
      bool control = false;
    };
    auto o = std::make_shared<Options>();
    auto* cmd = attack->add_subcommand("tracking", "Link a tag's responses across epochs");
    AddCommon(cmd, o->common);
    cmd->add_option("--trials", o->trials, "Epochs observed")->check(CLI::Range(2, 1 << 24));
    cmd->add_flag("--control", o->control, "Frozen credentials and a fixed Query");
    cmd->callback([o, &exit_code] {
      TrackingConfig cfg;
      cfg.epochs = o->trials;
      cfg.run_seed = RunSeed(o->common);
      cfg.frozen = o->control;
      cfg.nonce_bits = o->common.nonce_bits;
      exit_code = Finish({RunTrackingProbe(cfg)}, o->common);
    });
  }
}

}  // namespace gen2::cli
