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

#include "gen2/prng.h"

#include <stdexcept>

#include "gen2/boolfn.h"

namespace gen2 {

Prng::Prng(std::uint16_t seed, std::size_t buffer_capacity)
    : Prng(LfsrState(seed), buffer_capacity) {}

Prng::Prng(const LfsrState& state, std::size_t buffer_capacity)
    : state_(state), capacity_(buffer_capacity) {
  if (capacity_ == 0 || capacity_ > kBufferCapacity) {
    throw std::invalid_argument("Prng buffer capacity must be in 1..4");
  }
}

Prng Prng::FromState(const LfsrState& state, std::size_t buffer_capacity) {
  return Prng(state, buffer_capacity);
}

std::optional<std::uint8_t> Prng::ClockOnce() {
  const std::uint8_t filtered = FilterEval(state_.cells());
  const std::uint8_t gate = state_.Clock();
  if (!gate) return std::nullopt;
  ++emitted_count_;
  return filtered;
}

std::uint8_t Prng::NextBit() {
  if (size_ == 0) {
    if (state_.is_zero()) throw std::logic_error("Prng: all-zero register never emits");
    head_ = 0;
    while (size_ < capacity_) {
      if (auto bit = ClockOnce()) fifo_[size_++] = *bit;
    }
  }
  const std::uint8_t bit = fifo_[head_];
  head_ = (head_ + 1) % kBufferCapacity;
  --size_;
  return bit;
}

std::uint16_t Prng::NextWord() {
  std::uint16_t word = 0;
  for (int k = 0; k < 16; ++k) word |= static_cast<std::uint16_t>(NextBit() << k);
  return word;
}

BitSequence PrngKeystream(std::uint16_t seed, std::size_t nbits) {
  Prng g(seed);
  BitSequence out(nbits);
  for (auto& bit : out) bit = g.NextBit();
  return out;
}

std::uint64_t PrngKeystreamWindow(std::uint16_t seed, std::size_t skip, int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("window must be 0..64 bits");
  // Straight from the register: the FIFO never changes stream content.
  const std::uint8_t* f = CanonicalFilterTable().bits().data();
  constexpr auto taps = FeedbackPolynomial().tap_cells();
  std::uint16_t cells = LfsrState(seed).cells();
  std::size_t emitted = 0;
  std::uint64_t v = 0;
  const std::size_t end = skip + static_cast<std::size_t>(n);
  while (emitted < end) {
    const std::uint8_t gate = cells & 1u;
    const std::uint8_t filtered = f[cells];
    const auto fb = static_cast<unsigned>(__builtin_parity(cells & taps));
    cells = static_cast<std::uint16_t>((cells >> 1) | (fb << 15));
    if (gate && emitted++ >= skip) v = (v << 1) | filtered;
  }
  return v;
}

std::uint16_t UpdateCredential(std::uint16_t c) { return Prng(c).NextWord(); }

}  // namespace gen2
