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

// gen, analyze, epc-check, battery, filter-analyze and crc.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include "commands.h"
#include "gen2/boolfn.h"
#include "gen2/crc16.h"
#include "gen2/keystore_io.h"
#include "gen2/prng.h"
#include "gen2/randtest.h"
#include "report.h"

namespace gen2::cli {
namespace {

std::vector<std::uint8_t> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string HexBytes(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (std::uint8_t b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 15]);
  }
  return s;
}

std::string SidecarPath(const std::string& path) { return path + ".json"; }

// ---- gen ----

struct GenOptions {
  std::string seed;
  std::size_t bits = 0;
  std::string out;
  std::string format = "bits01";
};

int RunGen(const GenOptions& o) {
  const std::uint16_t seed = ParseHex16(o.seed);
  const BitSequence bits = PrngKeystream(seed, o.bits);
  std::string text;
  if (o.format == "bits01") {
    for (auto b : bits) text.push_back(static_cast<char>('0' + b));
    text.push_back('\n');
  } else if (o.format == "hex") {
    text = HexBytes(PackLsbFirst(bits)) + "\n";
  } else {
    if (o.out.empty()) throw UsageError("--format raw needs --out");
    const auto packed = PackLsbFirst(bits);
    text.assign(packed.begin(), packed.end());
    WriteJson(SidecarPath(o.out), json{{"bits", o.bits}, {"seed", Hex16(seed)}});
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw UsageError("cannot write " + o.out);
    out << text;
  }
  return kExitPass;
}

// ---- analyze ----

struct AnalyzeOptions {
  std::string in;
  std::string in_format = "auto";
  std::string seed;
  std::size_t bits = 65535;
  std::string tests = "freq,serial,poker,runs,autocorr,bm,period";
  double alpha = 0.05;
  int serial_block = 2;
  int poker_block = 4;
  int max_shift = 8;
  std::string json_path;
};

BitSequence LoadBits(const AnalyzeOptions& o, bool bits_given, json& source) {
  const auto data = ReadFile(o.in);
  std::string format = o.in_format;
  if (format == "auto") {
    if (std::filesystem::exists(SidecarPath(o.in))) {
      format = "raw";
    } else {
      const std::string text(data.begin(), data.end());
      format = text.find_first_not_of("01 \t\r\n") == std::string::npos ? "bits01" : "hex";
    }
  }
  source = {{"path", o.in}, {"format", format}};
  BitSequence bits;
  if (format == "raw") {
    std::size_t n = data.size() * 8;
    if (std::filesystem::exists(SidecarPath(o.in))) {
      std::ifstream side(SidecarPath(o.in));
      try {
        n = json::parse(side).at("bits").get<std::size_t>();
      } catch (const json::exception& e) {
        throw UsageError("bad sidecar " + SidecarPath(o.in) + ": " + e.what());
      }
      if (n > data.size() * 8) throw UsageError("sidecar bit count exceeds file size");
    }
    bits = UnpackLsbFirst(data, n);
  } else if (format == "bits01") {
    for (std::uint8_t c : data) {
      if (c == '0' || c == '1') {
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
      } else if (!std::isspace(c)) {
        throw UsageError("bits01 input may only contain 0, 1 and whitespace");
      }
    }
  } else if (format == "hex") {
    std::vector<std::uint8_t> bytes;
    std::string digits;
    for (std::uint8_t c : data) {
      if (std::isxdigit(c)) {
        digits.push_back(static_cast<char>(c));
      } else if (!std::isspace(c)) {
        throw UsageError("hex input may only contain hex digits and whitespace");
      }
    }
    if (digits.size() % 2 != 0) throw UsageError("hex input has an odd number of digits");
    for (std::size_t i = 0; i < digits.size(); i += 2) {
      bytes.push_back(static_cast<std::uint8_t>(std::stoul(digits.substr(i, 2), nullptr, 16)));
    }
    bits = UnpackLsbFirst(bytes, bytes.size() * 8);
  } else {
    throw UsageError("unknown input format '" + format + "'");
  }
  if (bits_given && o.bits < bits.size()) bits.resize(o.bits);
  return bits;
}

int RunAnalyze(const AnalyzeOptions& o, bool bits_given) {
  if (o.in.empty() == o.seed.empty()) throw UsageError("give exactly one of --in and --seed");
  json source;
  BitSequence bits;
  if (!o.seed.empty()) {
    const std::uint16_t seed = ParseHex16(o.seed);
    bits = PrngKeystream(seed, o.bits);
    source = {{"seed", Hex16(seed)}};
  } else {
    bits = LoadBits(o, bits_given, source);
  }

  TestParams params;
  params.alpha = o.alpha;
  params.serial_block = o.serial_block;
  params.poker_block = o.poker_block;
  params.max_shift = o.max_shift;

  json report = {{"source", source},
                 {"bits", bits.size()},
                 {"alpha", o.alpha},
                 {"params",
                  {{"serial_block", o.serial_block},
                   {"poker_block", o.poker_block},
                   {"max_shift", o.max_shift}}}};
  json tests = json::array();
  bool all_pass = true;
  std::stringstream list(o.tests);
  std::string name;
  std::cout << "bits: " << bits.size() << "\n";
  while (std::getline(list, name, ',')) {
    if (name == "bm") {
      const LinearComplexity lc = BerlekampMassey(bits);
      const double ratio = bits.empty() ? 0 : static_cast<double>(lc.linear_complexity) /
                                                  static_cast<double>(bits.size());
      report["linear_complexity"] = {{"value", lc.linear_complexity}, {"ratio", ratio}};
      std::cout << "linear complexity: " << lc.linear_complexity << " (" << ratio << " of n)\n";
      continue;
    }
    if (name == "period") {
      const auto p = MeasurePeriod(bits);
      report["period"] = p ? json(*p) : json(nullptr);
      std::cout << "period: " << (p ? std::to_string(*p) : "not observed (needs 2p bits)") << "\n";
      continue;
    }
    const auto kind = ParseTestKind(name);
    if (!kind) throw UsageError("unknown test '" + name + "'");
    std::vector<TestResult> results;
    try {
      results = GolombTest(bits, *kind, params);
    } catch (const SequenceTooShort& e) {
      throw UsageError(e.what());
    }
    for (const auto& r : results) {
      all_pass &= r.pass;
      tests.push_back(ToJson(r));
      std::cout << r.name;
      if (r.shift > 0) std::cout << " d=" << r.shift;
      std::cout << ": statistic " << r.statistic << ", threshold " << r.threshold << " -> "
                << (r.pass ? "pass" : "FAIL") << "\n";
    }
  }
  report["tests"] = tests;
  report["passed"] = all_pass;
  WriteJson(o.json_path, report);
  return all_pass ? kExitPass : kExitFail;
}

// ---- epc-check ----

struct EpcOptions {
  EpcConfig config;
  std::string sample_seed;
  std::string json_path;
};

int RunEpcCheck(EpcOptions o) {
  if (!o.sample_seed.empty()) o.config.sample_seed = ParseHex64(o.sample_seed);
  EpcReport r;
  try {
    r = EpcCriteriaReport(o.config);
  } catch (const InsufficientSample& e) {
    throw UsageError(e.what());
  }
  const auto& c1 = r.criterion1;
  const auto& c2 = r.criterion2;
  const auto& c3 = r.criterion3;
  std::cout << "criterion 1 (word frequencies in [0.8, 1.25] / 2^16 over " << c1.samples
            << " words): " << (c1.pass ? "PASS" : "FAIL") << "\n"
            << "  below " << c1.values_below << ", above " << c1.values_above
            << ", never seen " << c1.values_never_seen << ", max " << c1.max_frequency * 65536
            << " / 2^16\n"
            << "criterion 2 (distinct " << c2.prefix_bits << "-bit prefixes over " << c2.seeds
            << " seeds): " << (c2.pass ? "PASS" : "FAIL") << "\n"
            << "  distinct " << c2.distinct_prefixes << ", colliding seeds " << c2.colliding_seeds
            << "\n"
            << "criterion 3 (|lag-1 bit correlation| < " << c3.bound << "): "
            << (c3.pass ? "PASS" : "FAIL") << "\n"
            << "  max bit correlation " << c3.max_abs_bit_correlation
            << ", max word correlation " << c3.max_abs_word_correlation << " (informational)\n";
  const bool pass = c1.pass && c2.pass && c3.pass;
  WriteJson(o.json_path,
            {{"sample_seed", Hex64(o.config.sample_seed)},
             {"criterion1",
              {{"seeds", o.config.frequency_seeds},
               {"words_per_seed", o.config.words_per_seed},
               {"samples", c1.samples},
               {"lower", c1.lower},
               {"upper", c1.upper},
               {"min_frequency", c1.min_frequency},
               {"max_frequency", c1.max_frequency},
               {"values_below", c1.values_below},
               {"values_above", c1.values_above},
               {"values_never_seen", c1.values_never_seen},
               {"pass", c1.pass}}},
             {"criterion2",
              {{"seeds", c2.seeds},
               {"prefix_bits", c2.prefix_bits},
               {"distinct_prefixes", c2.distinct_prefixes},
               {"colliding_seeds", c2.colliding_seeds},
               {"pass", c2.pass}}},
             {"criterion3",
              {{"seeds", c3.seeds},
               {"bits_per_seed", c3.bits_per_seed},
               {"bound", c3.bound},
               {"max_abs_bit_correlation", c3.max_abs_bit_correlation},
               {"max_abs_word_correlation", c3.max_abs_word_correlation},
               {"pass", c3.pass}}},
             {"passed", pass}});
  return pass ? kExitPass : kExitFail;
}

// ---- battery ----

struct BatteryOptions {
  std::size_t seeds = 1024;
  bool all_seeds = false;
  std::size_t bits = 65535;
  std::string sample_seed = "67656e32";
  unsigned threads = 0;
  double alpha = 0.05;
  std::string json_path;
};

int RunBattery(const BatteryOptions& o) {
  std::vector<std::uint16_t> seeds;
  if (o.all_seeds) {
    for (std::uint32_t s = 1; s <= kLfsrPeriod; ++s) seeds.push_back(static_cast<std::uint16_t>(s));
  } else {
    seeds = SampleSeeds(o.seeds, ParseHex64(o.sample_seed));
  }
  TestParams params;
  params.alpha = o.alpha;
  const BatteryReport r = BatteryOverSeeds(seeds, o.bits, params, o.threads);
  json entries = json::array();
  std::cout << r.seed_count << " seeds x " << r.bits_per_seed << " bits, alpha " << o.alpha << "\n";
  for (const auto& e : r.entries) {
    std::cout << "  " << e.name << ": " << e.passed << " passed (" << e.pass_percent << "%)\n";
    entries.push_back({{"name", e.name}, {"passed", e.passed}, {"pass_percent", e.pass_percent}});
  }
  WriteJson(o.json_path, {{"seeds", r.seed_count},
                          {"bits_per_seed", r.bits_per_seed},
                          {"alpha", o.alpha},
                          {"sample", o.all_seeds ? "all" : Hex64(ParseHex64(o.sample_seed))},
                          {"entries", entries}});
  return kExitPass;
}

// ---- filter-analyze ----

int RunFilterAnalyze(const std::string& json_path, bool claims) {
  const FilterProfile p = AnalyzeFilter(FilterFunction::Canonical());
  const json doc = {{"weight", p.weight},
                    {"degree", p.algebraic_degree},
                    {"nonlinearity", p.nonlinearity},
                    {"ci_order", p.correlation_immunity_order},
                    {"resiliency", p.resiliency_order},
                    {"parseval_ok", p.parseval_ok}};
  std::cout << doc.dump(2) << "\n";
  if (claims) {
    std::cerr << "reference claims vs measured:\n"
              << "  balanced (weight 32768): " << (p.balanced() ? "yes" : "no") << ", weight "
              << p.weight << "\n"
              << "  algebraic degree 7: " << p.algebraic_degree << "\n"
              << "  correlation immune of order >= 1: order " << p.correlation_immunity_order
              << "\n";
  }
  WriteJson(json_path, doc);
  return p.parseval_ok && p.anf_round_trip_ok ? kExitPass : kExitFail;
}

// ---- crc ----

int RunCrc(const std::string& in, bool verify, const std::string& json_path) {
  const auto data = ReadFile(in);
  if (!verify) {
    const std::uint16_t c = Crc16(data);
    std::cout << Hex16(c) << "\n";
    WriteJson(json_path, {{"crc", Hex16(c)}, {"bytes", data.size()}});
    return kExitPass;
  }
  if (data.size() < 2) throw UsageError("--verify needs at least the two CRC bytes");
  const bool ok = Crc16Verify(data);
  const std::span<const std::uint8_t> body(data.data(), data.size() - 2);
  std::cout << Hex16(Crc16(body)) << (ok ? " ok" : " MISMATCH") << "\n";
  WriteJson(json_path, {{"crc", Hex16(Crc16(body))}, {"bytes", body.size()}, {"match", ok}});
  return ok ? kExitPass : kExitFail;
}

}  // namespace

void AddStreamCommands(CLI::App& app, int& exit_code) {
  {
    auto o = std::make_shared<GenOptions>();
    auto* cmd = app.add_subcommand("gen", "Write PRNG output bits");
    cmd->add_option("--seed", o->seed, "16-bit seed, hex")->required();
    cmd->add_option("--bits", o->bits, "Number of output bits")->required();
    cmd->add_option("--out", o->out, "Output path (stdout if omitted)");
    cmd->add_option("--format", o->format, "bits01, hex or raw")
        ->check(CLI::IsMember({"bits01", "hex", "raw"}));
    cmd->callback([o, &exit_code] { exit_code = RunGen(*o); });
  }
  {
    auto o = std::make_shared<AnalyzeOptions>();
    auto* cmd = app.add_subcommand("analyze", "Run statistical tests on a bit sequence");
    auto* in = cmd->add_option("--in", o->in, "Input file");
    cmd->add_option("--in-format", o->in_format, "auto, bits01, hex or raw")
        ->check(CLI::IsMember({"auto", "bits01", "hex", "raw"}));
    cmd->add_option("--seed", o->seed, "Generate from this 16-bit seed instead")->excludes(in);
    auto* bits = cmd->add_option("--bits", o->bits, "Bits to generate, or to keep from --in");
    cmd->add_option("--tests", o->tests, "Comma list: freq,serial,poker,runs,autocorr,bm,period");
    cmd->add_option("--alpha", o->alpha, "Significance level (0.05 or 0.01)");
    cmd->add_option("--serial-block", o->serial_block, "Serial test pattern length");
    cmd->add_option("--poker-block", o->poker_block, "Poker test block length");
    cmd->add_option("--max-shift", o->max_shift, "Autocorrelation shifts 1..d");
    cmd->add_option("--json", o->json_path, "Write a JSON report here");
    cmd->callback([o, bits, &exit_code] { exit_code = RunAnalyze(*o, bits->count() > 0); });
  }
  {
    auto o = std::make_shared<EpcOptions>();
    auto* cmd = app.add_subcommand("epc-check", "EPC Gen2 PRNG criteria 1-3");
    cmd->add_option("--seeds", o->config.frequency_seeds, "Seeds pooled for criterion 1");
    cmd->add_option("--words", o->config.words_per_seed, "Words per seed for criterion 1");
    cmd->add_option("--collision-seeds", o->config.collision_seeds, "Seeds for criterion 2");
    cmd->add_option("--prefix-bits", o->config.prefix_bits, "Prefix length for criterion 2");
    cmd->add_option("--correlation-seeds", o->config.correlation_seeds, "Seeds for criterion 3");
    cmd->add_option("--correlation-bits", o->config.correlation_bits, "Bits per seed for criterion 3");
    cmd->add_option("--sample-seed", o->sample_seed, "Seed-selection seed, hex");
    cmd->add_option("--json", o->json_path, "Write a JSON report here");
    cmd->callback([o, &exit_code] { exit_code = RunEpcCheck(*o); });
  }
  {
    auto o = std::make_shared<BatteryOptions>();
    auto* cmd = app.add_subcommand("battery", "Pass rates of every test over many seeds");
    cmd->add_option("--seeds", o->seeds, "Number of sampled seeds");
    cmd->add_flag("--all-seeds", o->all_seeds, "Use all 65535 nonzero seeds");
    cmd->add_option("--bits", o->bits, "Output bits per seed");
    cmd->add_option("--sample-seed", o->sample_seed, "Seed-selection seed, hex");
    cmd->add_option("--threads", o->threads, "Worker threads (0: all cores)");
    cmd->add_option("--alpha", o->alpha, "Significance level (0.05 or 0.01)");
    cmd->add_option("--json", o->json_path, "Write a JSON report here");
    cmd->callback([o, &exit_code] { exit_code = RunBattery(*o); });
  }
  {
    auto json_path = std::make_shared<std::string>();
    auto claims = std::make_shared<bool>(false);
    auto* cmd = app.add_subcommand("filter-analyze", "Exhaustive profile of the filter function");
    cmd->add_option("--json", *json_path, "Also write the JSON here");
    cmd->add_flag("--claims", *claims, "Compare with the reference claims on stderr");
    cmd->callback([json_path, claims, &exit_code] {
      exit_code = RunFilterAnalyze(*json_path, *claims);
    });
  }
  {
    auto in = std::make_shared<std::string>();
    auto verify = std::make_shared<bool>(false);
    auto json_path = std::make_shared<std::string>();
    auto* cmd = app.add_subcommand("crc", "CRC-16 of a file");
    cmd->add_option("--in", *in, "Input file")->required();
    cmd->add_flag("--verify", *verify, "Treat the last two bytes as the big-endian CRC");
    cmd->add_option("--json", *json_path, "Write a JSON report here");
    cmd->callback([in, verify, json_path, &exit_code] {
      exit_code = RunCrc(*in, *verify, *json_path);
    });
  }
}

}  // namespace gen2::cli
