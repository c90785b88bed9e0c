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

#ifndef GEN2_LFSR_H_
#define GEN2_LFSR_H_

#include <cstddef>
#include <cstdint>

#include "gen2/bits.h"

namespace gen2 {

inline constexpr int kLfsrLength = 16;
inline constexpr std::uint32_t kLfsrPeriod = (1u << kLfsrLength) - 1;

// Connection polynomial over GF(2) as a bit mask: bit i holds the
// coefficient of x^i. The register recurrence is
//   s[t+16] = sum_{i=1..16} c_i * s[t+16-i].
class FeedbackPolynomial {
 public:
  // 1 + x^2 + x^7 + x^9 + x^16, i.e. s[j+16] = s[j+14]+s[j+9]+s[j+7]+s[j].
  static constexpr std::uint32_t kDefaultMask =
      (1u << 16) | (1u << 9) | (1u << 7) | (1u << 2) | 1u;

  constexpr FeedbackPolynomial() = default;

  // Throws std::invalid_argument unless the degree is exactly 16 and the
  // constant term is 1.
  explicit FeedbackPolynomial(std::uint32_t mask);

  constexpr std::uint32_t mask() const { return mask_; }

  // Cells of the register that feed the new bit: cell (16 - i) for each
  // nonzero c_i, i = 1..16.
  constexpr std::uint16_t tap_cells() const {
    std::uint16_t taps = 0;
    for (int i = 1; i <= kLfsrLength; ++i) {
      if ((mask_ >> i) & 1u) taps |= static_cast<std::uint16_t>(1u << (kLfsrLength - i));
    }
    return taps;
  }

  friend constexpr bool operator==(FeedbackPolynomial, FeedbackPolynomial) = default;

 private:
  std::uint32_t mask_ = kDefaultMask;
};

// True iff x has multiplicative order 2^16 - 1 modulo the polynomial.
// Throws std::invalid_argument if the degree is not 16.
bool IsPrimitive(std::uint32_t poly_mask);
inline bool IsPrimitive(FeedbackPolynomial poly) { return IsPrimitive(poly.mask()); }

// Sixteen-cell Fibonacci register. Bit k of cells() is cell[k] = s[j+k];
// cell 0 is the oldest bit and the one emitted on the next clock.
class LfsrState {
 public:
  static constexpr std::uint16_t kZeroSeedReplacement = 0x0001;

  // Loads bit k of `seed` into cell k. A zero seed is replaced by 0x0001.
  explicit LfsrState(std::uint16_t seed, FeedbackPolynomial poly = {});

  // Loads the cells verbatim, all-zero included.
  static LfsrState FromCells(std::uint16_t cells, FeedbackPolynomial poly = {});

  // Emits cell 0, shifts every cell down by one and feeds the new bit into
  // cell 15.
  std::uint8_t Clock() {
    const std::uint8_t out = cells_ & 1u;
    const std::uint16_t fb = static_cast<std::uint16_t>(
        __builtin_parity(static_cast<unsigned>(cells_ & taps_)));
    cells_ = static_cast<std::uint16_t>((cells_ >> 1) | (fb << 15));
    ++clock_count_;
    return out;
  }

  std::uint16_t cells() const { return cells_; }
  std::uint8_t cell(int k) const { return (cells_ >> k) & 1u; }
  std::uint64_t clock_count() const { return clock_count_; }
  FeedbackPolynomial polynomial() const { return poly_; }
  bool is_zero() const { return cells_ == 0; }

  friend bool operator==(const LfsrState&, const LfsrState&) = default;

 private:
  LfsrState(std::uint16_t cells, FeedbackPolynomial poly, std::uint64_t count);

  std::uint16_t cells_ = 0;
  std::uint16_t taps_ = 0;
  FeedbackPolynomial poly_;
  std::uint64_t clock_count_ = 0;
};

// First n output bits of the register seeded with `seed`.
BitSequence LfsrRun(std::uint16_t seed, std::size_t n, FeedbackPolynomial poly = {});

}  // namespace gen2

#endif  // GEN2_LFSR_H_
