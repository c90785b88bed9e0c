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

#include "gen2/boolfn.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace gen2 {
namespace {

constexpr Monomial Run(int first, int length) {
  Monomial m = 0;
  for (int k = first; k < first + length; ++k) m |= static_cast<Monomial>(1u << k);
  return m;
}

// x6, then for each order i = 2..7 the floor(16 / i) products of i
// successive disjoint variables starting at x0.
std::vector<Monomial> CanonicalMonomials() {
  std::vector<Monomial> ms = {Run(6, 1)};
  for (int i = 0; i < 8; ++i) ms.push_back(Run(2 * i, 2));
  for (int i = 0; i < 5; ++i) ms.push_back(Run(3 * i, 3));
  for (int i = 0; i < 4; ++i) ms.push_back(Run(4 * i, 4));
  for (int i = 0; i < 3; ++i) ms.push_back(Run(5 * i, 5));
  for (int i = 0; i < 2; ++i) ms.push_back(Run(6 * i, 6));
  for (int i = 0; i < 2; ++i) ms.push_back(Run(7 * i, 7));
  return ms;
}

bool IsPowerOfTwo(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

int MonomialDegree(Monomial m) { return std::popcount(m); }

const FilterFunction& FilterFunction::Canonical() {
  static const FilterFunction f(CanonicalMonomials());
  return f;
}

FilterFunction::FilterFunction(std::vector<Monomial> monomials)
    : monomials_(std::move(monomials)) {}

int FilterFunction::degree() const {
  int d = 0;
  for (Monomial m : monomials_) d = std::max(d, MonomialDegree(m));
  return d;
}

const TruthTable& CanonicalFilterTable() {
  static const TruthTable table = BuildTruthTable(FilterFunction::Canonical());
  return table;
}

TruthTable::TruthTable(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.size() != kTruthTableSize) {
    throw std::invalid_argument("truth table must have 65536 entries");
  }
}

std::size_t TruthTable::Weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

TruthTable BuildTruthTable(const FilterFunction& f) {
  TruthTable t;
  for (std::size_t x = 0; x < kTruthTableSize; ++x) t[x] = f.Eval(static_cast<std::uint16_t>(x));
  return t;
}

std::vector<std::int64_t> WalshSpectrum(std::span<const std::uint8_t> table) {
  if (!IsPowerOfTwo(table.size())) {
    throw std::invalid_argument("WalshSpectrum: table length must be a power of two");
  }
  std::vector<std::int64_t> w(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) w[x] = table[x] ? -1 : 1;
  for (std::size_t h = 1; h < w.size(); h <<= 1) {
    for (std::size_t i = 0; i < w.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = w[j];
        const std::int64_t b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
    }
  }
  return w;
}

std::vector<Monomial> AlgebraicNormalForm(const TruthTable& table) {
  std::vector<std::uint8_t> a(table.bits().begin(), table.bits().end());
  for (std::size_t h = 1; h < a.size(); h <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) a[j + h] ^= a[j];
    }
  }
  std::vector<Monomial> ms;
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a[u]) ms.push_back(static_cast<Monomial>(u));
  }
  return ms;
}

std::int64_t Nonlinearity(std::span<const std::int64_t> spectrum) {
  std::int64_t max_abs = 0;
  for (std::int64_t v : spectrum) max_abs = std::max(max_abs, std::abs(v));
  return static_cast<std::int64_t>(spectrum.size() / 2) - max_abs / 2;
}

int CorrelationImmunityOrder(std::span<const std::int64_t> spectrum) {
  const int n = std::countr_zero(spectrum.size());
  // Smallest nonzero-coefficient weight, minus one.
  int first_bad = n + 1;
  for (std::size_t a = 1; a < spectrum.size(); ++a) {
    if (spectrum[a] != 0) first_bad = std::min(first_bad, std::popcount(a));
  }
  return first_bad - 1;
}

bool ParsevalHolds(std::span<const std::int64_t> spectrum) {
  // Exact in 64-bit: each W(a)^2 <= 2^32 and there are at most 2^16 terms.
  std::uint64_t sum = 0;
  for (std::int64_t v : spectrum) sum += static_cast<std::uint64_t>(v * v);
  const std::uint64_t n = spectrum.size();
  return sum == n * n;
}

FilterProfile AnalyzeFilter(const FilterFunction& f) {
  const TruthTable table = BuildTruthTable(f);
  const auto spectrum = WalshSpectrum(table.bits());
  const auto anf = AlgebraicNormalForm(table);

  FilterProfile p;
  p.weight = table.Weight();
  for (Monomial m : anf) p.algebraic_degree = std::max(p.algebraic_degree, MonomialDegree(m));
  p.nonlinearity = Nonlinearity(spectrum);
  p.correlation_immunity_order = CorrelationImmunityOrder(spectrum);
  p.resiliency_order = p.balanced() ? p.correlation_immunity_order : -1;
  p.parseval_ok = ParsevalHolds(spectrum);

  std::vector<Monomial> input(f.monomials().begin(), f.monomials().end());
  std::sort(input.begin(), input.end());
  input.erase(std::unique(input.begin(), input.end()), input.end());
  p.anf_round_trip_ok = input.size() == f.monomials().size() && input == anf;
  return p;
}

std::vector<std::uint8_t> Restrict(const TruthTable& table, std::uint16_t fixed_mask,
                                   std::uint16_t fixed_values) {
  std::vector<int> free_vars;
  for (int k = 0; k < kFilterVariables; ++k) {
    if (!((fixed_mask >> k) & 1u)) free_vars.push_back(k);
  }
  const std::uint16_t base = fixed_values & fixed_mask;
  std::vector<std::uint8_t> sub(std::size_t{1} << free_vars.size());
  for (std::size_t y = 0; y < sub.size(); ++y) {
    std::uint16_t x = base;
    for (std::size_t i = 0; i < free_vars.size(); ++i) {
      if ((y >> i) & 1u) x |= static_cast<std::uint16_t>(1u << free_vars[i]);
    }
    sub[y] = table[x];
  }
  return sub;
}

bool IsConstant(std::span<const std::uint8_t> table) {
  return std::all_of(table.begin(), table.end(), [&](std::uint8_t b) { return b == table[0]; });
}

bool IsAffine(std::span<const std::uint8_t> table) {
  const auto w = WalshSpectrum(table);
  const auto n = static_cast<std::int64_t>(table.size());
  return std::any_of(w.begin(), w.end(), [n](std::int64_t v) { return std::abs(v) == n; });
}

}  // namespace gen2
