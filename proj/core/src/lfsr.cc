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

#include "gen2/lfsr.h"

#include <array>
#include <bit>
#include <stdexcept>

namespace gen2 {
namespace {

int Degree(std::uint32_t mask) { return mask == 0 ? -1 : 31 - std::countl_zero(mask); }

// a * b mod m over GF(2); a and b already reduced, deg(m) = 16.
std::uint32_t MulMod(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  std::uint32_t acc = 0;
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << kLfsrLength)) a ^= m;
  }
  return acc;
}

std::uint32_t PowX(std::uint32_t e, std::uint32_t m) {
  std::uint32_t result = 1;
  std::uint32_t base = 2;  // x
  while (e != 0) {
    if (e & 1u) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

FeedbackPolynomial::FeedbackPolynomial(std::uint32_t mask) : mask_(mask) {
  if (Degree(mask) != kLfsrLength || (mask & 1u) == 0) {
    throw std::invalid_argument("feedback polynomial must have degree 16 and constant term 1");
  }
}

bool IsPrimitive(std::uint32_t poly_mask) {
  if (Degree(poly_mask) != kLfsrLength) {
    throw std::invalid_argument("IsPrimitive: polynomial degree must be 16");
  }
  if ((poly_mask & 1u) == 0) return false;  // x divides it
  // 65535 = 3 * 5 * 17 * 257
  constexpr std::array<std::uint32_t, 4> kPrimeFactors = {3, 5, 17, 257};
  if (PowX(kLfsrPeriod, poly_mask) != 1) return false;
  for (std::uint32_t q : kPrimeFactors) {
    if (PowX(kLfsrPeriod / q, poly_mask) == 1) return false;
  }
  return true;
}

LfsrState::LfsrState(std::uint16_t seed, FeedbackPolynomial poly)
    : LfsrState(seed == 0 ? kZeroSeedReplacement : seed, poly, 0) {}

LfsrState::LfsrState(std::uint16_t cells, FeedbackPolynomial poly, std::uint64_t count)
    : cells_(cells), taps_(poly.tap_cells()), poly_(poly), clock_count_(count) {}

LfsrState LfsrState::FromCells(std::uint16_t cells, FeedbackPolynomial poly) {
  return LfsrState(cells, poly, 0);
}

BitSequence LfsrRun(std::uint16_t seed, std::size_t n, FeedbackPolynomial poly) {
  LfsrState state(seed, poly);
  BitSequence out(n);
  for (auto& bit : out) bit = state.Clock();
  return out;
}

std::vector<std::uint8_t> PackLsbFirst(BitView bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
  }
  return bytes;
}

BitSequence UnpackLsbFirst(std::span<const std::uint8_t> bytes, std::size_t nbits) {
  if (nbits > bytes.size() * 8) {
    throw std::invalid_argument("UnpackLsbFirst: not enough bytes for requested bit count");
  }
  BitSequence bits(nbits);
  for (std::size_t i = 0; i < nbits; ++i) bits[i] = (bytes[i / 8] >> (i % 8)) & 1u;
  return bits;
}

BitSequence WordToBits(std::uint64_t value, int width) {
  BitSequence bits(static_cast<std::size_t>(width));
  for (int k = 0; k < width; ++k) bits[k] = (value >> k) & 1u;
  return bits;
}

}  // namespace gen2
