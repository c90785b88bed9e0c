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

#ifndef GEN2_PROTOCOL_H_
#define GEN2_PROTOCOL_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gen2/bits.h"

namespace gen2 {

inline constexpr int kDefaultNonceBits = 16;
inline constexpr int kMaxNonceBits = 64;

// An n-bit protocol value (1 <= n <= 64). The first bit of the sequence is
// the most significant of the n bits.
class Response {
 public:
  Response() = default;
  // Throws std::invalid_argument if length is out of range; excess high
  // bits of `value` are dropped.
  Response(std::uint64_t value, int length);
  static Response FromBits(BitView bits);

  std::uint64_t value() const { return value_; }
  int length() const { return length_; }
  std::uint8_t bit(int i) const { return (value_ >> (length_ - 1 - i)) & 1u; }
  Response WithBitFlipped(int i) const;
  BitSequence ToBits() const;

  friend bool operator==(const Response&, const Response&) = default;

 private:
  std::uint64_t value_ = 0;
  int length_ = kDefaultNonceBits;
};

// XOR of the last n bits of the two (16 + n)-bit keystreams seeded with
// id ^ x and ssk ^ x. Throws std::invalid_argument unless 1 <= n <= 64.
Response ComputeResponse(std::uint16_t id, std::uint16_t ssk, std::uint16_t x, int n);

struct TagCredentials {
  std::uint16_t id = 0;
  std::uint16_t ssk = 0;
  std::uint64_t epoch = 0;

  std::uint16_t SessionKey() const { return id ^ ssk; }
  // Both fields passed through UpdateCredential, epoch + 1.
  TagCredentials Rotated() const;

  friend bool operator==(const TagCredentials&, const TagCredentials&) = default;
};

// Messages on the reader <-> tag channel. None of them carries ID or SSK.
struct Query {
  std::uint16_t value = 0;
  friend bool operator==(const Query&, const Query&) = default;
};
struct TagResponse {
  Response response;
  std::uint16_t nonce1 = 0;
  friend bool operator==(const TagResponse&, const TagResponse&) = default;
};
struct Nonce3Msg {
  Response nonce3;
  friend bool operator==(const Nonce3Msg&, const Nonce3Msg&) = default;
};

// Server -> reader, over the trusted link.
struct NoMatch {};
struct Unique {
  std::uint16_t session_key = 0;
  Response nonce3;
};
struct Ambiguous {
  std::size_t matches = 0;
};
using Verdict = std::variant<NoMatch, Unique, Ambiguous>;

class EntropySource {
 public:
  virtual ~EntropySource() = default;
  virtual std::uint16_t Next16() = 0;
};

// Deterministic test source: start, start + 1, ...
class CounterEntropy final : public EntropySource {
 public:
  explicit CounterEntropy(std::uint16_t start = 0) : next_(start) {}
  std::uint16_t Next16() override { return next_++; }

 private:
  std::uint16_t next_;
};

class SeededEntropy final : public EntropySource {
 public:
  explicit SeededEntropy(std::uint64_t seed) : rng_(seed) {}
  std::uint16_t Next16() override { return static_cast<std::uint16_t>(rng_() >> 48); }

 private:
  std::mt19937_64 rng_;
};

class ProtocolOrderError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Reader {
 public:
  explicit Reader(EntropySource& entropy) : entropy_(&entropy) {}
  Query Begin() { return Query{entropy_->Next16()}; }

 private:
  EntropySource* entropy_;
};

struct TagAccept {
  std::uint16_t session_key = 0;
};
struct TagReject {};
using FinalizeResult = std::variant<TagAccept, TagReject>;

class Tag {
 public:
  Tag(TagCredentials credentials, EntropySource& entropy, int nonce_bits = kDefaultNonceBits);

  // Step 2. Abandons any pending authentication.
  TagResponse Respond(const Query& query);

  // Step 5. Accepts iff the message equals the expected NONCE3, then
  // rotates the credentials (unless frozen). Either way the pending
  // authentication is cleared. Throws ProtocolOrderError without one.
  FinalizeResult Finalize(const Nonce3Msg& msg);

  const TagCredentials& credentials() const { return credentials_; }
  bool has_pending() const { return pending_.has_value(); }
  int nonce_bits() const { return nonce_bits_; }

  // Control experiments only: accept without rotating.
  void set_frozen(bool frozen) { frozen_ = frozen; }

 private:
  struct Pending {
    Query query;
    std::uint16_t nonce1 = 0;
    Response expected_nonce3;
  };

  TagCredentials credentials_;
  EntropySource* entropy_;
  int nonce_bits_;
  std::optional<Pending> pending_;
  bool frozen_ = false;
};

class KeystoreError : public std::runtime_error {
 public:
  enum class Code { kMalformed, kDuplicateLabel, kDegenerateCredentials, kDuplicatePair };
  KeystoreError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Tag label -> credentials. Labels are unique, id != ssk, and no two
// entries share the unordered pair {id, ssk}.
class ServerKeystore {
 public:
  struct Entry {
    std::string label;
    TagCredentials credentials;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // Throws KeystoreError on any invariant violation.
  void Register(std::string label, const TagCredentials& credentials);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const TagCredentials* Find(const std::string& label) const;

  friend bool operator==(const ServerKeystore&, const ServerKeystore&) = default;

 private:
  friend class Server;
  std::vector<Entry> entries_;
};

class Server {
 public:
  explicit Server(ServerKeystore keystore, int nonce_bits = kDefaultNonceBits);

  // Steps 3-4. Exactly one matching entry yields Unique and rotates that
  // entry (unless frozen); no match or several matches change nothing.
  Verdict Verify(const Query& query, const TagResponse& response);

  const ServerKeystore& keystore() const { return keystore_; }
  int nonce_bits() const { return nonce_bits_; }
  // Label of the entry matched by the last Unique verdict.
  const std::optional<std::string>& last_match() const { return last_match_; }

  // Control experiments only: never rotate on Unique.
  void set_frozen(bool frozen) { frozen_ = frozen; }

 private:
  ServerKeystore keystore_;
  int nonce_bits_;
  std::optional<std::string> last_match_;
  bool frozen_ = false;
};

// Keystream Z for the session keyed by K.
BitSequence SessionKeystream(std::uint16_t session_key, std::size_t nbits);

// XOR with Z packed LSB-first; encryption and decryption are the same call.
std::vector<std::uint8_t> ApplySessionKeystream(std::uint16_t session_key,
                                                std::span<const std::uint8_t> data);

}  // namespace gen2

#endif  // GEN2_PROTOCOL_H_
