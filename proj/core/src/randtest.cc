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

#include "gen2/randtest.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_map>

#include "gen2/lfsr.h"
#include "gen2/prng.h"

namespace gen2 {
namespace {

struct CriticalValue {
  int dof;
  double alpha;
  double value;
};

// Upper-tail chi-square quantiles for every degree of freedom the tests can
// produce with their supported block sizes.
constexpr std::array<CriticalValue, 22> kChiSquareTable = {{
    {1, 0.05, 3.841459},    {2, 0.05, 5.991465},    {3, 0.05, 7.814728},
    {4, 0.05, 9.487729},    {6, 0.05, 12.591587},   {7, 0.05, 14.067140},
    {8, 0.05, 15.507313},   {15, 0.05, 24.995790},  {31, 0.05, 44.985343},
    {63, 0.05, 82.528727},  {255, 0.05, 293.247835}, {1, 0.01, 6.634897},
    {2, 0.01, 9.210340},    {3, 0.01, 11.344867},   {4, 0.01, 13.276704},
    {6, 0.01, 16.811894},   {7, 0.01, 18.475307},   {8, 0.01, 20.090235},
    {15, 0.01, 30.577914},  {31, 0.01, 52.191395},  {63, 0.01, 92.010024},
    {255, 0.01, 310.457388},
}};

constexpr double kNormal05 = 1.959964;
constexpr double kNormal01 = 2.575829;

constexpr int kShortRunMax = 4;

bool SameAlpha(double a, double b) { return std::abs(a - b) < 1e-12; }

void RequireLength(BitView seq, TestKind kind, const TestParams& params) {
  const std::size_t min = MinimumLength(kind, params);
  if (seq.size() < min) throw SequenceTooShort(ToString(kind), min);
}

TestResult Make(TestKind kind, std::string name, const TestParams& params, int dof,
                double statistic, double threshold, bool pass) {
  TestResult r;
  r.kind = kind;
  r.name = std::move(name);
  r.alpha = params.alpha;
  r.degrees_of_freedom = dof;
  r.statistic = statistic;
  r.threshold = threshold;
  r.pass = pass;
  return r;
}

TestResult Frequency(BitView seq, const TestParams& params) {
  const auto n = static_cast<double>(seq.size());
  const auto ones = static_cast<double>(std::count(seq.begin(), seq.end(), 1));
  const double zeros = n - ones;
  const double x = (zeros - ones) * (zeros - ones) / n;
  const double crit = ChiSquareCritical(1, params.alpha);
  return Make(TestKind::kFrequency, "frequency", params, 1, x, crit, x <= crit);
}

std::vector<std::size_t> CircularPatternCounts(BitView seq, int m) {
  std::vector<std::size_t> counts(std::size_t{1} << m, 0);
  if (m == 0) {
    counts[0] = seq.size();
    return counts;
  }
  const std::size_t n = seq.size();
  const unsigned mask = (1u << m) - 1;
  unsigned window = 0;
  for (int k = 0; k < m - 1; ++k) window = (window << 1) | seq[k % n];
  for (std::size_t i = 0; i < n; ++i) {
    window = ((window << 1) | seq[(i + m - 1) % n]) & mask;
    ++counts[window];
  }
  return counts;
}

double Psi2(BitView seq, int m) {
  if (m == 0) return 0;
  const auto counts = CircularPatternCounts(seq, m);
  const auto n = static_cast<double>(seq.size());
  double sum = 0;
  for (std::size_t c : counts) sum += static_cast<double>(c) * static_cast<double>(c);
  return std::ldexp(sum, m) / n - n;
}

TestResult Serial(BitView seq, const TestParams& params) {
  const int m = params.serial_block;
  const double x = Psi2(seq, m) - Psi2(seq, m - 1);
  const int dof = 1 << (m - 1);
  const double crit = ChiSquareCritical(dof, params.alpha);
  TestResult r = Make(TestKind::kSerial, "serial", params, dof, x, crit, x <= crit);
  r.block_size = m;
  return r;
}

TestResult Poker(BitView seq, const TestParams& params) {
  const int m = params.poker_block;
  const std::size_t k = seq.size() / static_cast<std::size_t>(m);
  std::vector<std::size_t> counts(std::size_t{1} << m, 0);
  for (std::size_t b = 0; b < k; ++b) {
    unsigned v = 0;
    for (int j = 0; j < m; ++j) v = (v << 1) | seq[b * m + j];
    ++counts[v];
  }
  double sum = 0;
  for (std::size_t c : counts) sum += static_cast<double>(c) * static_cast<double>(c);
  const auto kd = static_cast<double>(k);
  const double x = std::ldexp(sum, m) / kd - kd;
  const int dof = (1 << m) - 1;
  const double crit = ChiSquareCritical(dof, params.alpha);
  TestResult r = Make(TestKind::kPoker, "poker", params, dof, x, crit, x <= crit);
  r.block_size = m;
  return r;
}

// Expected number of runs of length exactly i (of one symbol) in n random
// bits.
double ExpectedRuns(std::size_t n, std::size_t i) {
  return (static_cast<double>(n) - static_cast<double>(i) + 3) / std::ldexp(1.0, static_cast<int>(i) + 2);
}

std::vector<TestResult> Runs(BitView seq, const TestParams& params) {
  const std::size_t n = seq.size();
  std::array<std::size_t, kShortRunMax + 1> blocks{};  // runs of ones
  std::array<std::size_t, kShortRunMax + 1> gaps{};    // runs of zeros
  std::size_t long_blocks = 0;
  std::size_t long_gaps = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && seq[j] == seq[i]) ++j;
    const std::size_t len = j - i;
    if (len <= kShortRunMax) {
      (seq[i] ? blocks : gaps)[len]++;
    } else {
      (seq[i] ? long_blocks : long_gaps)++;
    }
    i = j;
  }

  double short_x = 0;
  for (std::size_t len = 1; len <= kShortRunMax; ++len) {
    const double e = ExpectedRuns(n, len);
    const double db = static_cast<double>(blocks[len]) - e;
    const double dg = static_cast<double>(gaps[len]) - e;
    short_x += (db * db + dg * dg) / e;
  }
  const int short_dof = 2 * kShortRunMax - 2;
  const double short_crit = ChiSquareCritical(short_dof, params.alpha);

  double long_e = 0;
  for (std::size_t len = kShortRunMax + 1; len <= n; ++len) {
    const double e = ExpectedRuns(n, len);
    long_e += e;
    if (e < 1e-12) break;
  }
  const double db = static_cast<double>(long_blocks) - long_e;
  const double dg = static_cast<double>(long_gaps) - long_e;
  const double long_x = (db * db + dg * dg) / long_e;
  const double long_crit = ChiSquareCritical(2, params.alpha);

  return {
      Make(TestKind::kRuns, "runs.short", params, short_dof, short_x, short_crit,
           short_x <= short_crit),
      Make(TestKind::kRuns, "runs.long", params, 2, long_x, long_crit, long_x <= long_crit),
  };
}

std::vector<TestResult> Autocorrelation(BitView seq, const TestParams& params) {
  const double z = NormalCritical(params.alpha);
  std::vector<TestResult> out;
  for (int d = 1; d <= params.max_shift; ++d) {
    const std::size_t len = seq.size() - static_cast<std::size_t>(d);
    std::size_t disagreements = 0;
    for (std::size_t i = 0; i < len; ++i) disagreements += seq[i] ^ seq[i + d];
    const auto l = static_cast<double>(len);
    const double x = 2.0 * (static_cast<double>(disagreements) - l / 2.0) / std::sqrt(l);
    TestResult r = Make(TestKind::kAutocorrelation, "autocorrelation", params, 0, x, z,
                        std::abs(x) <= z);
    r.shift = d;
    out.push_back(std::move(r));
  }
  return out;
}

template <typename T>
SerialCorrelation CircularLag1(std::span<const T> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("serial correlation needs at least 2 values");
  }
  const std::size_t n = values.size();
  double mean = 0;
  for (T v : values) mean += static_cast<double>(v);
  mean /= static_cast<double>(n);
  double num = 0;
  double den = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = static_cast<double>(values[i]) - mean;
    const double b = static_cast<double>(values[(i + 1) % n]) - mean;
    num += a * b;
    den += a * a;
  }
  if (den == 0) return {0.0, true};
  return {num / den, false};
}

// ---- packed GF(2) helpers for Berlekamp-Massey ----

using Words = std::vector<std::uint64_t>;

// Bit i of the result is seq[size - 1 - i]; one extra zero word of padding.
Words PackReversed(BitView seq) {
  Words r(seq.size() / 64 + 2, 0);
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (seq[n - 1 - i]) r[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return r;
}

std::uint64_t Extract64(const Words& w, std::size_t pos) {
  const std::size_t idx = pos >> 6;
  const unsigned off = pos & 63;
  if (idx >= w.size()) return 0;
  std::uint64_t lo = w[idx] >> off;
  if (off != 0 && idx + 1 < w.size()) lo |= w[idx + 1] << (64 - off);
  return lo;
}

// parity of sum_{i < nbits} poly_i * r[offset + i]
unsigned ParityDot(const Words& poly, std::size_t nbits, const Words& r, std::size_t offset) {
  std::uint64_t acc = 0;
  const std::size_t nwords = (nbits + 63) / 64;
  for (std::size_t k = 0; k < nwords && k < poly.size(); ++k) {
    acc ^= poly[k] & Extract64(r, offset + 64 * k);
  }
  return static_cast<unsigned>(std::popcount(acc) & 1);
}

// dst ^= src << shift, touching src bits below src_bits only.
void XorShifted(Words& dst, const Words& src, std::size_t src_bits, std::size_t shift) {
  const std::size_t word_shift = shift >> 6;
  const unsigned bit_shift = shift & 63;
  const std::size_t nwords = (src_bits + 63) / 64;
  for (std::size_t k = 0; k < nwords; ++k) {
    const std::uint64_t v = src[k];
    if (v == 0) continue;
    const std::size_t t = k + word_shift;
    dst[t] ^= v << bit_shift;
    if (bit_shift != 0) dst[t + 1] ^= v >> (64 - bit_shift);
  }
}

}  // namespace

std::string_view ToString(TestKind kind) {
  switch (kind) {
    case TestKind::kFrequency: return "frequency";
    case TestKind::kSerial: return "serial";
    case TestKind::kPoker: return "poker";
    case TestKind::kRuns: return "runs";
    case TestKind::kAutocorrelation: return "autocorrelation";
  }
  return "unknown";
}

std::optional<TestKind> ParseTestKind(std::string_view name) {
  if (name == "freq" || name == "frequency") return TestKind::kFrequency;
  if (name == "serial") return TestKind::kSerial;
  if (name == "poker") return TestKind::kPoker;
  if (name == "runs") return TestKind::kRuns;
  if (name == "autocorr" || name == "autocorrelation") return TestKind::kAutocorrelation;
  return std::nullopt;
}

SequenceTooShort::SequenceTooShort(std::string_view test, std::size_t min_length)
    : std::invalid_argument(std::string(test) + " test needs at least " +
                            std::to_string(min_length) + " bits"),
      min_length_(min_length) {}

double ChiSquareCritical(int dof, double alpha) {
  for (const auto& cv : kChiSquareTable) {
    if (cv.dof == dof && SameAlpha(cv.alpha, alpha)) return cv.value;
  }
  throw std::invalid_argument("no chi-square critical value for dof " + std::to_string(dof) +
                              " at alpha " + std::to_string(alpha));
}

double NormalCritical(double alpha) {
  if (SameAlpha(alpha, 0.05)) return kNormal05;
  if (SameAlpha(alpha, 0.01)) return kNormal01;
  throw std::invalid_argument("no normal critical value for alpha " + std::to_string(alpha));
}

std::size_t MinimumLength(TestKind kind, const TestParams& params) {
  switch (kind) {
    case TestKind::kFrequency: return 100;
    case TestKind::kSerial: return std::size_t{100} << params.serial_block;
    case TestKind::kPoker: return std::size_t{100} << params.poker_block;
    // (n - 1) / 64 >= 5: at least five expected runs of length 4.
    case TestKind::kRuns: return 321;
    case TestKind::kAutocorrelation: return static_cast<std::size_t>(params.max_shift) + 100;
  }
  return 0;
}

std::vector<TestResult> GolombTest(BitView seq, TestKind kind, const TestParams& params) {
  if (params.serial_block < 1 || params.serial_block > 16 || params.poker_block < 1 ||
      params.poker_block > 16 || params.max_shift < 1) {
    throw std::invalid_argument("GolombTest: block size or shift out of range");
  }
  RequireLength(seq, kind, params);
  switch (kind) {
    case TestKind::kFrequency: return {Frequency(seq, params)};
    case TestKind::kSerial: return {Serial(seq, params)};
    case TestKind::kPoker: return {Poker(seq, params)};
    case TestKind::kRuns: return Runs(seq, params);
    case TestKind::kAutocorrelation: return Autocorrelation(seq, params);
  }
  return {};
}

SerialCorrelation SerialCorrelationCoefficient(BitView seq) { return CircularLag1(seq); }

SerialCorrelation SerialCorrelationCoefficient(std::span<const std::uint16_t> words) {
  return CircularLag1(words);
}

LinearComplexity BerlekampMassey(BitView seq) {
  const std::size_t n = seq.size();
  const Words rev = PackReversed(seq);
  const std::size_t nwords = n / 64 + 3;
  Words c(nwords, 0);
  Words b(nwords, 0);
  c[0] = b[0] = 1;
  std::size_t c_bits = 1;  // L + 1
  std::size_t b_bits = 1;
  std::size_t lc = 0;
  std::size_t last = 0;  // step of the last length change, plus one
  bool have_last = false;
  Words saved;

  for (std::size_t step = 0; step < n; ++step) {
    // discrepancy = sum_{i=0..L} c_i s[step - i]; s[step - i] = rev[n-1-step+i]
    const unsigned d = ParityDot(c, c_bits, rev, n - 1 - step);
    if (d == 0) continue;
    const std::size_t shift = have_last ? step - last : step + 1;
    if (2 * lc <= step) {
      saved.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>((c_bits + 63) / 64));
      const std::size_t saved_bits = c_bits;
      XorShifted(c, b, b_bits, shift);
      lc = step + 1 - lc;
      c_bits = lc + 1;  // deg C <= L throughout
      std::fill(b.begin(), b.end(), 0);
      std::copy(saved.begin(), saved.end(), b.begin());
      b_bits = saved_bits;
      last = step;
      have_last = true;
    } else {
      XorShifted(c, b, b_bits, shift);
    }
  }

  LinearComplexity out;
  out.linear_complexity = lc;
  out.connection.assign(lc + 1, 0);
  for (std::size_t i = 0; i <= lc; ++i) out.connection[i] = (c[i >> 6] >> (i & 63)) & 1u;
  return out;
}

bool RegeneratesSequence(BitView seq, const LinearComplexity& lc) {
  const std::size_t n = seq.size();
  const std::size_t l = lc.linear_complexity;
  if (lc.connection.size() != l + 1 || lc.connection[0] != 1) return false;
  if (l >= n) return true;
  Words poly((l + 1) / 64 + 2, 0);
  for (std::size_t i = 0; i <= l; ++i) {
    if (lc.connection[i]) poly[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  const Words rev = PackReversed(seq);
  // sum_{i=0..L} c_i s[t-i] must vanish for every t >= L.
  for (std::size_t t = l; t < n; ++t) {
    if (ParityDot(poly, l + 1, rev, n - 1 - t) != 0) return false;
  }
  return true;
}

std::optional<std::size_t> MeasurePeriod(BitView seq) {
  const std::size_t n = seq.size();
  if (n == 0) return std::nullopt;
  // Prefix function; the smallest period of the whole string is n - pi[n-1].
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && seq[i] != seq[k]) k = pi[k - 1];
    if (seq[i] == seq[k]) ++k;
    pi[i] = k;
  }
  const std::size_t p = n - pi[n - 1];
  if (2 * p > n) return std::nullopt;
  return p;
}

WordFrequencyCheck CheckWordFrequencies(std::span<const std::uint16_t> words) {
  constexpr std::size_t kValues = std::size_t{1} << 16;
  if (words.size() < kValues) {
    throw InsufficientSample("word frequency check needs at least 65536 words");
  }
  std::vector<std::size_t> hist(kValues, 0);
  for (std::uint16_t w : words) ++hist[w];

  WordFrequencyCheck r;
  r.samples = words.size();
  r.lower = 0.8 / static_cast<double>(kValues);
  r.upper = 1.25 / static_cast<double>(kValues);
  const auto total = static_cast<double>(words.size());
  r.min_frequency = 1.0;
  for (std::size_t c : hist) {
    const double f = static_cast<double>(c) / total;
    r.min_frequency = std::min(r.min_frequency, f);
    r.max_frequency = std::max(r.max_frequency, f);
    if (f < r.lower) ++r.values_below;
    if (f > r.upper) ++r.values_above;
    if (c == 0) ++r.values_never_seen;
  }
  r.pass = r.values_below == 0 && r.values_above == 0;
  return r;
}

CollisionCheck CheckPrefixCollisions(std::span<const std::uint16_t> seeds, int prefix_bits) {
  if (prefix_bits < 1 || prefix_bits > 64) {
    throw std::invalid_argument("prefix_bits must be in 1..64");
  }
  std::unordered_map<std::uint64_t, std::size_t> seen;
  seen.reserve(seeds.size() * 2);
  for (std::uint16_t s : seeds) {
    Prng g(s);
    std::uint64_t prefix = 0;
    for (int k = 0; k < prefix_bits; ++k) prefix |= std::uint64_t{g.NextBit()} << k;
    ++seen[prefix];
  }
  CollisionCheck r;
  r.seeds = seeds.size();
  r.prefix_bits = prefix_bits;
  r.distinct_prefixes = seen.size();
  for (const auto& [prefix, count] : seen) {
    if (count > 1) r.colliding_seeds += count;
  }
  r.pass = r.colliding_seeds == 0;
  return r;
}

PredictabilityCheck CheckSerialCorrelation(std::span<const std::uint16_t> seeds,
                                           std::size_t bits_per_seed, double bound) {
  PredictabilityCheck r;
  r.seeds = seeds.size();
  r.bits_per_seed = bits_per_seed;
  r.bound = bound;
  for (std::uint16_t s : seeds) {
    const BitSequence bits = PrngKeystream(s, bits_per_seed);
    std::vector<std::uint16_t> words(bits_per_seed / 16);
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint16_t v = 0;
      for (int k = 0; k < 16; ++k) v |= static_cast<std::uint16_t>(bits[16 * w + k] << k);
      words[w] = v;
    }
    const auto bit_corr = SerialCorrelationCoefficient(bits);
    const auto word_corr = SerialCorrelationCoefficient(words);
    r.max_abs_bit_correlation = std::max(r.max_abs_bit_correlation, std::abs(bit_corr.coefficient));
    r.max_abs_word_correlation =
        std::max(r.max_abs_word_correlation, std::abs(word_corr.coefficient));
  }
  // The word series is reported alongside; the decision rests on the bits.
  r.pass = r.max_abs_bit_correlation < bound;
  return r;
}

std::vector<std::uint16_t> SampleSeeds(std::size_t count, std::uint64_t sample_seed) {
  if (count > kLfsrPeriod) throw std::invalid_argument("at most 65535 distinct nonzero seeds");
  std::vector<std::uint16_t> all(kLfsrPeriod);
  std::iota(all.begin(), all.end(), std::uint16_t{1});
  std::mt19937_64 rng(sample_seed);
  // Partial Fisher-Yates: the first `count` entries are the sample.
  for (std::size_t i = 0; i < count; ++i) {
    // Plain modulo keeps the sample identical across standard libraries.
    const std::size_t j = i + static_cast<std::size_t>(rng() % (all.size() - i));
    std::swap(all[i], all[j]);
  }
  all.resize(count);
  return all;
}

EpcReport EpcCriteriaReport(const EpcConfig& config) {
  if (config.frequency_seeds * config.words_per_seed < (std::size_t{1} << 16)) {
    throw InsufficientSample("criterion 1 needs at least 65536 pooled words");
  }
  if (config.collision_seeds < 2) throw InsufficientSample("criterion 2 needs at least 2 seeds");
  if (config.correlation_seeds < 1 || config.correlation_bits < 1000) {
    throw InsufficientSample("criterion 3 needs at least 1 seed and 1000 bits per seed");
  }

  EpcReport report;
  report.config = config;

  std::vector<std::uint16_t> words;
  words.reserve(config.frequency_seeds * config.words_per_seed);
  for (std::uint16_t s : SampleSeeds(config.frequency_seeds, config.sample_seed)) {
    Prng g(s);
    for (std::size_t i = 0; i < config.words_per_seed; ++i) words.push_back(g.NextWord());
  }
  report.criterion1 = CheckWordFrequencies(words);

  report.criterion2 = CheckPrefixCollisions(
      SampleSeeds(config.collision_seeds, config.sample_seed + 1), config.prefix_bits);

  report.criterion3 =
      CheckSerialCorrelation(SampleSeeds(config.correlation_seeds, config.sample_seed + 2),
                             config.correlation_bits, config.correlation_bound);
  return report;
}

const BatteryEntry* BatteryReport::Find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

BatteryReport BatteryOverSeeds(std::span<const std::uint16_t> seeds, std::size_t bits_per_seed,
                               const TestParams& params, unsigned threads) {
  if (seeds.empty()) throw std::invalid_argument("BatteryOverSeeds: empty seed list");
  static constexpr std::array<std::string_view, 6> kNames = {
      "frequency", "serial", "poker", "runs.short", "runs.long", "autocorrelation"};

  // passes[seed][test]
  std::vector<std::array<std::uint8_t, kNames.size()>> passes(seeds.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const BitSequence bits = PrngKeystream(seeds[i], bits_per_seed);
      auto& row = passes[i];
      row.fill(1);
      for (TestKind kind : {TestKind::kFrequency, TestKind::kSerial, TestKind::kPoker,
                            TestKind::kRuns, TestKind::kAutocorrelation}) {
        for (const TestResult& r : GolombTest(bits, kind, params)) {
          const auto it = std::find(kNames.begin(), kNames.end(), r.name);
          row[static_cast<std::size_t>(it - kNames.begin())] &= r.pass ? 1 : 0;
        }
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, seeds.size()));
  if (threads <= 1) {
    work(0, seeds.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (seeds.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < seeds.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(seeds.size(), begin + chunk));
    }
  }

  BatteryReport report;
  report.seed_count = seeds.size();
  report.bits_per_seed = bits_per_seed;
  report.params = params;
  for (std::size_t t = 0; t < kNames.size(); ++t) {
    BatteryEntry e;
    e.name = std::string(kNames[t]);
    for (const auto& row : passes) e.passed += row[t];
    e.pass_percent = 100.0 * static_cast<double>(e.passed) / static_cast<double>(seeds.size());
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace gen2
