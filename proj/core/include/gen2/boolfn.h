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

#ifndef GEN2_BOOLFN_H_
#define GEN2_BOOLFN_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gen2 {

inline constexpr int kFilterVariables = 16;
inline constexpr std::size_t kTruthTableSize = std::size_t{1} << kFilterVariables;

// A monomial is the AND of the variables whose bits are set in the mask;
// x_k is bit k of the filter input.
using Monomial = std::uint16_t;

int MonomialDegree(Monomial m);

// Boolean function of 16 variables in algebraic normal form.
class FilterFunction {
 public:
  // The degree-7 filter of the generator: x6, the eight disjoint pairs,
  // five triples, four quadruples, three quintuples, two sextuples and
  // two septuples of successive variables (25 monomials).
  static const FilterFunction& Canonical();

  explicit FilterFunction(std::vector<Monomial> monomials);

  // XOR over all monomials of the AND of their variables.
  std::uint8_t Eval(std::uint16_t x) const {
    unsigned acc = 0;
    for (Monomial m : monomials_) acc ^= (x & m) == m;
    return static_cast<std::uint8_t>(acc);
  }

  std::span<const Monomial> monomials() const { return monomials_; }
  int degree() const;

 private:
  std::vector<Monomial> monomials_;
};

// 2^16 output bits; entry i is f evaluated at the input whose bit k is x_k.
class TruthTable {
 public:
  TruthTable() : bits_(kTruthTableSize, 0) {}
  explicit TruthTable(std::vector<std::uint8_t> bits);

  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::uint8_t& operator[](std::size_t i) { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t Weight() const;

 private:
  std::vector<std::uint8_t> bits_;
};

TruthTable BuildTruthTable(const FilterFunction& f);

// Truth table of the canonical filter, built once.
const TruthTable& CanonicalFilterTable();

// Canonical filter evaluated through that table.
inline std::uint8_t FilterEval(std::uint16_t x) { return CanonicalFilterTable()[x]; }

// W(a) = sum_x (-1)^(f(x) xor <a,x>), by the in-place fast transform.
// Works for any power-of-two table length; throws std::invalid_argument
// otherwise. Tables of the filter must have 2^16 entries.
std::vector<std::int64_t> WalshSpectrum(std::span<const std::uint8_t> table);

// Moebius transform: the monomials of the ANF, ascending by mask.
std::vector<Monomial> AlgebraicNormalForm(const TruthTable& table);

// 2^(n-1) - max|W|/2 for an n-variable spectrum.
std::int64_t Nonlinearity(std::span<const std::int64_t> spectrum);

// Largest m with W(a) = 0 for every a of Hamming weight 1..m.
int CorrelationImmunityOrder(std::span<const std::int64_t> spectrum);

bool ParsevalHolds(std::span<const std::int64_t> spectrum);

struct FilterProfile {
  std::size_t weight = 0;
  int algebraic_degree = 0;
  std::int64_t nonlinearity = 0;
  int correlation_immunity_order = 0;
  // -1 when the function is not balanced (resiliency undefined).
  int resiliency_order = -1;
  bool parseval_ok = false;
  // The ANF recovered from the truth table equals the input monomial set.
  bool anf_round_trip_ok = false;

  bool balanced() const { return weight == kTruthTableSize / 2; }
};

FilterProfile AnalyzeFilter(const FilterFunction& f);

// Sub-function obtained by fixing the variables in `fixed_mask` to the
// corresponding bits of `fixed_values`. The remaining variables, in
// ascending index order, index the returned table.
std::vector<std::uint8_t> Restrict(const TruthTable& table, std::uint16_t fixed_mask,
                                   std::uint16_t fixed_values);

bool IsConstant(std::span<const std::uint8_t> table);
bool IsAffine(std::span<const std::uint8_t> table);

}  // namespace gen2

#endif  // GEN2_BOOLFN_H_
