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

#ifndef GEN2_PRNG_H_
#define GEN2_PRNG_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "gen2/bits.h"
#include "gen2/lfsr.h"

namespace gen2 {

// Filtered, self-decimated LFSR generator.
//
// Each clock evaluates the filter on the current 16 cells and reads the
// gate bit (cell 0) from the same pre-clock state, then advances the
// register once. The filter bit is kept when the gate is 1 and dropped
// otherwise, so over one register period exactly 32768 of 65535 clocks
// produce output. Kept bits pass through a small FIFO that smooths the
// output rate without changing the stream content.
class Prng {
 public:
  static constexpr std::size_t kBufferCapacity = 4;

  // Throws std::invalid_argument if buffer_capacity is 0 or above 4.
  explicit Prng(std::uint16_t seed, std::size_t buffer_capacity = kBufferCapacity);
  static Prng FromState(const LfsrState& state, std::size_t buffer_capacity = kBufferCapacity);

  // One register clock; returns the filter bit if the gate kept it. Does
  // not touch the FIFO.
  std::optional<std::uint8_t> ClockOnce();

  // Pops the oldest buffered bit, refilling the FIFO to capacity first if
  // it is empty. Throws std::logic_error on the all-zero register, which
  // never emits.
  std::uint8_t NextBit();

  // 16 bits, the first emitted bit in bit 0.
  std::uint16_t NextWord();

  const LfsrState& state() const { return state_; }
  std::uint64_t emitted_count() const { return emitted_count_; }
  std::uint64_t clock_count() const { return state_.clock_count(); }
  std::size_t buffered() const { return size_; }
  std::size_t buffer_capacity() const { return capacity_; }

 private:
  Prng(const LfsrState& state, std::size_t buffer_capacity);

  LfsrState state_;
  std::array<std::uint8_t, kBufferCapacity> fifo_{};
  std::size_t head_ = 0;
  std::size_t size_ = 0;
  std::size_t capacity_;
  std::uint64_t emitted_count_ = 0;
};

// First nbits of a fresh generator seeded with `seed`.
BitSequence PrngKeystream(std::uint16_t seed, std::size_t nbits);

// Output bits skip .. skip + n - 1 of seed's keystream, first bit most
// significant. Throws std::invalid_argument unless 0 <= n <= 64.
std::uint64_t PrngKeystreamWindow(std::uint16_t seed, std::size_t skip, int n);

// Next-epoch credential: the first word of a fresh generator seeded with c.
std::uint16_t UpdateCredential(std::uint16_t c);

}  // namespace gen2

#endif  // GEN2_PRNG_H_
