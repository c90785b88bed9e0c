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

#include "gen2/crc16.h"

#include <stdexcept>

namespace gen2 {

std::uint16_t Crc16(std::span<const std::uint8_t> data, const CrcParams& params) {
  std::uint16_t reg = params.init;
  for (std::uint8_t byte : data) {
    for (int bit = 7; bit >= 0; --bit) {
      const bool in = (byte >> bit) & 1u;
      const bool top = reg & 0x8000u;
      reg = static_cast<std::uint16_t>(reg << 1);
      if (in != top) reg ^= params.polynomial;
    }
  }
  return static_cast<std::uint16_t>(reg ^ params.xor_out);
}

bool Crc16Verify(std::span<const std::uint8_t> data_with_crc, const CrcParams& params) {
  if (data_with_crc.size() < 2) {
    throw std::invalid_argument("Crc16Verify: input shorter than the 2-byte checksum");
  }
  const auto payload = data_with_crc.first(data_with_crc.size() - 2);
  const std::uint16_t stored = static_cast<std::uint16_t>(
      (data_with_crc[data_with_crc.size() - 2] << 8) | data_with_crc.back());
  return Crc16(payload, params) == stored;
}

}  // namespace gen2
