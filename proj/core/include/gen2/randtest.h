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

#ifndef GEN2_RANDTEST_H_
#define GEN2_RANDTEST_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gen2/bits.h"

namespace gen2 {

enum class TestKind { kFrequency, kSerial, kPoker, kRuns, kAutocorrelation };

std::string_view ToString(TestKind kind);
std::optional<TestKind> ParseTestKind(std::string_view name);

struct TestParams {
  int serial_block = 2;  // m, overlapping patterns
  int poker_block = 4;   // m, disjoint blocks
  int max_shift = 8;     // autocorrelation shifts 1..max_shift
  double alpha = 0.05;
};

// One accept/reject decision. Chi-square statistics are compared with the
// upper alpha quantile; autocorrelation uses a two-sided normal bound on
// |statistic|.
struct TestResult {
  TestKind kind = TestKind::kFrequency;
  std::string name;  // frequency, serial, poker, runs.short, runs.long, autocorrelation
  int block_size = 0;
  int shift = 0;
  double alpha = 0.05;
  int degrees_of_freedom = 0;  // 0 for the normal statistic
  double statistic = 0;
  double threshold = 0;
  bool pass = false;
};

class SequenceTooShort : public std::invalid_argument {
 public:
  SequenceTooShort(std::string_view test, std::size_t min_length);
  std::size_t min_length() const { return min_length_; }

 private:
  std::size_t min_length_;
};

// Upper-tail chi-square quantile for the embedded (dof, alpha) pairs.
// Throws std::invalid_argument for anything not in the table.
double ChiSquareCritical(int dof, double alpha);
// Two-sided standard normal bound z with P(|Z| > z) = alpha.
double NormalCritical(double alpha);

std::size_t MinimumLength(TestKind kind, const TestParams& params = {});

// Runs one test family on the sequence.
//   frequency        1 result, chi-square, 1 dof
//   serial           1 result, delta-psi^2 over overlapping m-bit patterns, 2^(m-1) dof
//   poker            1 result, chi-square over disjoint m-bit blocks, 2^m - 1 dof
//   runs             2 results: runs.short (lengths 1..4 of both symbols,
//                    6 dof) and runs.long (aggregated runs of length >= 5
//                    of both symbols, 2 dof)
//   autocorrelation  max_shift results, one per shift d
// Throws SequenceTooShort below MinimumLength().
std::vector<TestResult> GolombTest(BitView seq, TestKind kind, const TestParams& params = {});

struct SerialCorrelation {
  double coefficient = 0;
  bool degenerate = false;  // zero variance; coefficient reported as 0
};

// Circular lag-1 serial correlation coefficient.
// Throws std::invalid_argument for fewer than 2 values.
SerialCorrelation SerialCorrelationCoefficient(BitView seq);
SerialCorrelation SerialCorrelationCoefficient(std::span<const std::uint16_t> words);

struct LinearComplexity {
  std::size_t linear_complexity = 0;
  // c_0..c_L with c_0 = 1: s[t] = sum_{i=1..L} c_i s[t-i].
  std::vector<std::uint8_t> connection;
};

// Shortest LFSR generating the sequence (Berlekamp-Massey over GF(2),
// bit-packed).
LinearComplexity BerlekampMassey(BitView seq);

// True iff the connection polynomial regenerates the whole sequence from
// its first L bits.
bool RegeneratesSequence(BitView seq, const LinearComplexity& lc);

// Smallest p such that the observed bits are p-periodic; absent unless at
// least 2p bits were observed.
std::optional<std::size_t> MeasurePeriod(BitView seq);

class InsufficientSample : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct WordFrequencyCheck {
  std::size_t samples = 0;
  double lower = 0;  // 0.8 / 2^16
  double upper = 0;  // 1.25 / 2^16
  double min_frequency = 0;
  double max_frequency = 0;
  std::size_t values_below = 0;
  std::size_t values_above = 0;
  std::size_t values_never_seen = 0;
  bool pass = false;
};

// Every 16-bit value's relative frequency must lie in [0.8, 1.25] / 2^16.
// Throws InsufficientSample for fewer than 2^16 words.
WordFrequencyCheck CheckWordFrequencies(std::span<const std::uint16_t> words);

struct CollisionCheck {
  std::size_t seeds = 0;
  int prefix_bits = 64;
  std::size_t distinct_prefixes = 0;
  std::size_t colliding_seeds = 0;  // seeds whose prefix another seed also produced
  bool pass = false;
};

// Compares the first prefix_bits (1..64) output bits of each seed.
CollisionCheck CheckPrefixCollisions(std::span<const std::uint16_t> seeds, int prefix_bits = 64);

struct PredictabilityCheck {
  std::size_t seeds = 0;
  std::size_t bits_per_seed = 0;
  double bound = 0.01;
  double max_abs_bit_correlation = 0;
  double max_abs_word_correlation = 0;
  bool pass = false;
};

// Lag-1 serial correlation of each seed's bit series and 16-bit word
// series. Passes when every bit-series magnitude is below the bound; the
// word-series maximum is informational.
PredictabilityCheck CheckSerialCorrelation(std::span<const std::uint16_t> seeds,
                                           std::size_t bits_per_seed, double bound);

struct EpcConfig {
  std::size_t frequency_seeds = 1024;
  std::size_t words_per_seed = 1024;
  std::size_t collision_seeds = 10000;
  int prefix_bits = 64;
  std::size_t correlation_seeds = 16;
  std::size_t correlation_bits = 1'000'000;
  double correlation_bound = 0.01;
  std::uint64_t sample_seed = 0x6765'6e32;  // drives seed selection
};

struct EpcReport {
  EpcConfig config;
  WordFrequencyCheck criterion1;
  CollisionCheck criterion2;
  PredictabilityCheck criterion3;
};

// Distinct, nonzero 16-bit seeds drawn without replacement.
std::vector<std::uint16_t> SampleSeeds(std::size_t count, std::uint64_t sample_seed);

// Throws InsufficientSample when a sample size is below its minimum.
EpcReport EpcCriteriaReport(const EpcConfig& config = {});

struct BatteryEntry {
  std::string name;
  std::size_t passed = 0;
  double pass_percent = 0;
};

struct BatteryReport {
  std::size_t seed_count = 0;
  std::size_t bits_per_seed = 0;
  TestParams params;
  // frequency, serial, poker, runs.short, runs.long, autocorrelation. A
  // seed passes autocorrelation only if every shift passes.
  std::vector<BatteryEntry> entries;

  const BatteryEntry* Find(std::string_view name) const;
};

// Runs every test family on each seed's first bits_per_seed output bits.
// Work is split across `threads` workers (0: hardware concurrency); the
// result does not depend on the split.
BatteryReport BatteryOverSeeds(std::span<const std::uint16_t> seeds, std::size_t bits_per_seed,
                               const TestParams& params = {}, unsigned threads = 0);

}  // namespace gen2

#endif  // GEN2_RANDTEST_H_
