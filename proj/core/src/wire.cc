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

#include "gen2/wire.h"

#include <string>

namespace gen2 {
namespace {

std::size_t FieldBytes(int nbits) { return (static_cast<std::size_t>(nbits) + 7) / 8; }

void PutField(std::vector<std::uint8_t>& out, const Response& r) {
  const std::size_t nbytes = FieldBytes(r.length());
  const int pad = static_cast<int>(nbytes * 8) - r.length();
  // pad < 8 and length <= 64, so the shifted value may need 72 bits; emit
  // from the most significant byte down.
  for (std::size_t i = 0; i < nbytes; ++i) {
    const int hi = static_cast<int>(nbytes - 1 - i) * 8 - pad;  // bit offset of this byte's LSB
    std::uint8_t byte;
    if (hi >= 0) {
      byte = static_cast<std::uint8_t>(r.value() >> hi);
    } else {
      byte = static_cast<std::uint8_t>(r.value() << -hi);
    }
    out.push_back(byte);
  }
}

Response GetField(std::span<const std::uint8_t> in, int nbits) {
  const std::size_t nbytes = FieldBytes(nbits);
  const int pad = static_cast<int>(nbytes * 8) - nbits;
  if (pad > 0 && (in[nbytes - 1] & ((1u << pad) - 1)) != 0) {
    throw WireFormatError("nonzero padding bits in n-bit field");
  }
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < nbytes; ++i) {
    const int hi = static_cast<int>(nbytes - 1 - i) * 8 - pad;
    if (hi >= 0) {
      v |= std::uint64_t{in[i]} << hi;
    } else {
      v |= std::uint64_t{in[i]} >> -hi;
    }
  }
  return Response(v, nbits);
}

void Put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

std::uint16_t Get16(std::span<const std::uint8_t> in) {
  return static_cast<std::uint16_t>((in[0] << 8) | in[1]);
}

std::size_t PayloadSize(MessageType type, int nonce_bits) {
  switch (type) {
    case MessageType::kQuery: return 2;
    case MessageType::kTagResponse: return FieldBytes(nonce_bits) + 2;
    case MessageType::kNonce3: return FieldBytes(nonce_bits);
  }
  return 0;
}

}  // namespace

MessageType TypeOf(const WireMessage& msg) {
  return static_cast<MessageType>(msg.index() + 1);
}

std::vector<std::uint8_t> EncodeRecord(const WireMessage& msg) {
  std::vector<std::uint8_t> payload;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Query>) {
          Put16(payload, m.value);
        } else if constexpr (std::is_same_v<T, TagResponse>) {
          PutField(payload, m.response);
          Put16(payload, m.nonce1);
        } else {
          PutField(payload, m.nonce3);
        }
      },
      msg);
  std::vector<std::uint8_t> out;
  Put16(out, static_cast<std::uint16_t>(payload.size() + 1));
  out.push_back(static_cast<std::uint8_t>(TypeOf(msg)));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

WireMessage DecodeRecord(std::span<const std::uint8_t> bytes, int nonce_bits) {
  if (nonce_bits < 1 || nonce_bits > kMaxNonceBits) {
    throw WireFormatError("nonce length must be in 1..64 bits");
  }
  if (bytes.size() < 3) throw WireFormatError("record shorter than its header");
  const std::size_t len = Get16(bytes);
  if (len + 2 != bytes.size()) throw WireFormatError("record length prefix mismatch");
  const std::uint8_t type = bytes[2];
  if (type < 1 || type > 3) throw WireFormatError("unknown message type " + std::to_string(type));
  const auto mtype = static_cast<MessageType>(type);
  const auto payload = bytes.subspan(3);
  if (payload.size() != PayloadSize(mtype, nonce_bits)) {
    throw WireFormatError("payload size does not match message type");
  }
  switch (mtype) {
    case MessageType::kQuery: return Query{Get16(payload)};
    case MessageType::kTagResponse: {
      const std::size_t nb = FieldBytes(nonce_bits);
      return TagResponse{GetField(payload, nonce_bits), Get16(payload.subspan(nb))};
    }
    case MessageType::kNonce3: return Nonce3Msg{GetField(payload, nonce_bits)};
  }
  throw WireFormatError("unreachable");
}

std::vector<WireMessage> DecodeStream(std::span<const std::uint8_t> bytes, int nonce_bits) {
  std::vector<WireMessage> out;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    if (bytes.size() - pos < 2) throw WireFormatError("truncated record header");
    const std::size_t len = Get16(bytes.subspan(pos));
    if (bytes.size() - pos < len + 2) throw WireFormatError("truncated record");
    out.push_back(DecodeRecord(bytes.subspan(pos, len + 2), nonce_bits));
    pos += len + 2;
  }
  return out;
}

}  // namespace gen2
