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

#include "gen2/protocol.h"

#include <algorithm>

#include "gen2/prng.h"

namespace gen2 {
namespace {

void RequireNonceBits(int n) {
  if (n < 1 || n > kMaxNonceBits) {
    throw std::invalid_argument("nonce length must be in 1..64 bits");
  }
}

std::uint64_t LowMask(int length) {
  return length == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

bool SamePair(const TagCredentials& a, const TagCredentials& b) {
  return (a.id == b.id && a.ssk == b.ssk) || (a.id == b.ssk && a.ssk == b.id);
}

}  // namespace

Response::Response(std::uint64_t value, int length) : length_(length) {
  RequireNonceBits(length);
  value_ = value & LowMask(length);
}

Response Response::FromBits(BitView bits) {
  RequireNonceBits(static_cast<int>(bits.size()));
  std::uint64_t v = 0;
  for (std::uint8_t b : bits) v = (v << 1) | b;
  return Response(v, static_cast<int>(bits.size()));
}

Response Response::WithBitFlipped(int i) const {
  return Response(value_ ^ (std::uint64_t{1} << (length_ - 1 - i)), length_);
}

BitSequence Response::ToBits() const {
  BitSequence bits(static_cast<std::size_t>(length_));
  for (int i = 0; i < length_; ++i) bits[i] = bit(i);
  return bits;
}

Response ComputeResponse(std::uint16_t id, std::uint16_t ssk, std::uint16_t x, int n) {
  RequireNonceBits(n);
  const std::uint64_t a = PrngKeystreamWindow(static_cast<std::uint16_t>(id ^ x), 16, n);
  const std::uint64_t b = PrngKeystreamWindow(static_cast<std::uint16_t>(ssk ^ x), 16, n);
  return Response(a ^ b, n);
}

TagCredentials TagCredentials::Rotated() const {
  return {UpdateCredential(id), UpdateCredential(ssk), epoch + 1};
}

Tag::Tag(TagCredentials credentials, EntropySource& entropy, int nonce_bits)
    : credentials_(credentials), entropy_(&entropy), nonce_bits_(nonce_bits) {
  RequireNonceBits(nonce_bits);
}

TagResponse Tag::Respond(const Query& query) {
  const std::uint16_t nonce1 = entropy_->Next16();
  TagResponse out{ComputeResponse(credentials_.id, credentials_.ssk, query.value, nonce_bits_),
                  nonce1};
  pending_ = Pending{query, nonce1,
                     ComputeResponse(credentials_.id, credentials_.ssk, nonce1, nonce_bits_)};
  return out;
}

FinalizeResult Tag::Finalize(const Nonce3Msg& msg) {
  if (!pending_) throw ProtocolOrderError("Tag::Finalize called without a pending authentication");
  const bool ok = msg.nonce3 == pending_->expected_nonce3;
  pending_.reset();
  if (!ok) return TagReject{};
  const std::uint16_t key = credentials_.SessionKey();
  if (!frozen_) credentials_ = credentials_.Rotated();
  return TagAccept{key};
}

void ServerKeystore::Register(std::string label, const TagCredentials& credentials) {
  if (credentials.id == credentials.ssk) {
    throw KeystoreError(KeystoreError::Code::kDegenerateCredentials,
                        "tag '" + label + "': id equals ssk");
  }
  for (const Entry& e : entries_) {
    if (e.label == label) {
      throw KeystoreError(KeystoreError::Code::kDuplicateLabel, "duplicate label '" + label + "'");
    }
    if (SamePair(e.credentials, credentials)) {
      throw KeystoreError(KeystoreError::Code::kDuplicatePair,
                          "tag '" + label + "' shares its {id, ssk} pair with '" + e.label + "'");
    }
  }
  entries_.push_back({std::move(label), credentials});
}

const TagCredentials* ServerKeystore::Find(const std::string& label) const {
  const auto it = std::find_if(entries_.begin(), entries_.end(),
                               [&](const Entry& e) { return e.label == label; });
  return it == entries_.end() ? nullptr : &it->credentials;
}

Server::Server(ServerKeystore keystore, int nonce_bits)
    : keystore_(std::move(keystore)), nonce_bits_(nonce_bits) {
  RequireNonceBits(nonce_bits);
}

Verdict Server::Verify(const Query& query, const TagResponse& response) {
  last_match_.reset();
  if (response.response.length() != nonce_bits_) return NoMatch{};
  std::size_t matches = 0;
  std::size_t hit = 0;
  for (std::size_t i = 0; i < keystore_.entries_.size(); ++i) {
    const TagCredentials& c = keystore_.entries_[i].credentials;
    if (ComputeResponse(c.id, c.ssk, query.value, nonce_bits_) == response.response) {
      ++matches;
      hit = i;
    }
  }
  if (matches == 0) return NoMatch{};
  if (matches > 1) return Ambiguous{matches};

  auto& entry = keystore_.entries_[hit];
  const TagCredentials& c = entry.credentials;
  Unique verdict{c.SessionKey(), ComputeResponse(c.id, c.ssk, response.nonce1, nonce_bits_)};
  if (!frozen_) entry.credentials = c.Rotated();
  last_match_ = entry.label;
  return verdict;
}

BitSequence SessionKeystream(std::uint16_t session_key, std::size_t nbits) {
  return PrngKeystream(session_key, nbits);
}

std::vector<std::uint8_t> ApplySessionKeystream(std::uint16_t session_key,
                                                std::span<const std::uint8_t> data) {
  const auto z = PackLsbFirst(SessionKeystream(session_key, data.size() * 8));
  std::vector<std::uint8_t> out(data.begin(), data.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= z[i];
  return out;
}

}  // namespace gen2
