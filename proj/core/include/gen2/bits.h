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

#ifndef GEN2_BITS_H_
#define GEN2_BITS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gen2 {

// One bit per element, each element 0 or 1.
using BitSequence = std::vector<std::uint8_t>;
using BitView = std::span<const std::uint8_t>;

// Packs 8 bits per byte, bit i of the sequence into bit (i % 8) of byte
// i / 8. The final partial byte is zero-padded.
std::vector<std::uint8_t> PackLsbFirst(BitView bits);
BitSequence UnpackLsbFirst(std::span<const std::uint8_t> bytes, std::size_t nbits);

// Low `width` bits of `value`, bit 0 first.
BitSequence WordToBits(std::uint64_t value, int width);

}  // namespace gen2

#endif  // GEN2_BITS_H_
