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

#ifndef GEN2_CRC16_H_
#define GEN2_CRC16_H_

#include <cstdint>
#include <span>

namespace gen2 {

struct CrcParams {
  std::uint16_t polynomial = 0x1021;  // x^16 + x^12 + x^5 + 1
  std::uint16_t init = 0xFFFF;
  std::uint16_t xor_out = 0xFFFF;
};

// EPC Gen2 parameter set: preset 0xFFFF, complemented result, no
// reflection.
inline constexpr CrcParams kGen2Crc{};

// Bitwise long division, most significant bit of each byte first.
std::uint16_t Crc16(std::span<const std::uint8_t> data, const CrcParams& params = kGen2Crc);

// True iff the trailing two bytes (big-endian) equal the CRC of the rest.
// Throws std::invalid_argument when fewer than two bytes are given.
bool Crc16Verify(std::span<const std::uint8_t> data_with_crc, const CrcParams& params = kGen2Crc);

}  // namespace gen2

#endif  // GEN2_CRC16_H_
