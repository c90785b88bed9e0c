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

#ifndef GEN2_WIRE_H_
#define GEN2_WIRE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "gen2/protocol.h"

namespace gen2 {

// Record layout: 2-byte big-endian length of what follows, one type byte,
// then the payload. Query is a big-endian 16-bit word. n-bit fields are
// packed MSB-first and zero-padded to a byte boundary. TagResponse is the
// n-bit response followed by NONCE1 (16 bits); Nonce3 is the n-bit value.
enum class MessageType : std::uint8_t { kQuery = 1, kTagResponse = 2, kNonce3 = 3 };

using WireMessage = std::variant<Query, TagResponse, Nonce3Msg>;

class WireFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MessageType TypeOf(const WireMessage& msg);

std::vector<std::uint8_t> EncodeRecord(const WireMessage& msg);

// Decodes exactly one record spanning all of `bytes`; n is the deployment
// nonce length. Throws WireFormatError on any mismatch.
WireMessage DecodeRecord(std::span<const std::uint8_t> bytes, int nonce_bits);

// Splits a concatenation of records.
std::vector<WireMessage> DecodeStream(std::span<const std::uint8_t> bytes, int nonce_bits);

}  // namespace gen2

#endif  // GEN2_WIRE_H_
