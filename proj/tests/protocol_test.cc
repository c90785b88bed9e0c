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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string_view>

#include "gen2/prng.h"
#include "reference_model.h"

namespace gen2 {
namespace {

// Frozen from the reference model.
constexpr std::uint16_t kBeefResponse = 0xf1de;  // id 0xBEEF, ssk 0x1234, x 0xA5A5, n 16
const std::vector<std::uint8_t> kSessionCiphertext = {0xe2, 0x43, 0x9a, 0x2e, 0xc9, 0x70,
                                                      0xd7, 0xcd, 0x5f, 0x33, 0x51, 0x30,
                                                      0x17, 0xa3, 0xfd, 0x7f};

std::vector<std::uint8_t> Bytes(std::string_view s) { return {s.begin(), s.end()}; }

TEST(ResponseTest, BitOrderIsMsbFirst) {
  const Response r(0b1011, 4);
  EXPECT_EQ(r.ToBits(), (BitSequence{1, 0, 1, 1}));
  EXPECT_EQ(Response::FromBits(r.ToBits()), r);
  EXPECT_EQ(r.WithBitFlipped(0).value(), 0b0011u);
  EXPECT_EQ(r.WithBitFlipped(3).value(), 0b1010u);
  EXPECT_EQ(Response(0xFF, 4).value(), 0xFu);
  EXPECT_EQ(Response(~std::uint64_t{0}, 64).value(), ~std::uint64_t{0});
  EXPECT_THROW(Response(0, 0), std::invalid_argument);
  EXPECT_THROW(Response(0, 65), std::invalid_argument);
}

TEST(ComputeResponseTest, FrozenValues) {
  EXPECT_EQ(ComputeResponse(0xBEEF, 0x1234, 0xA5A5, 16).value(), kBeefResponse);
  // Seeds 1 and 2 share one output stream, so this pair responds with zeros.
  EXPECT_EQ(ComputeResponse(0x0001, 0x0002, 0x0000, 16).value(), 0u);
  EXPECT_EQ(ComputeResponse(0x0001, 0x0002, 0x0000, 8).value(), 0u);
  EXPECT_EQ(ComputeResponse(0x0001, 0x0002, 0x0000, 64).value(), 0u);
}

TEST(ComputeResponseTest, MatchesReferenceModel) {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 300; ++trial) {
    const auto id = static_cast<std::uint16_t>(rng());
    const auto ssk = static_cast<std::uint16_t>(rng());
    const auto x = static_cast<std::uint16_t>(rng());
    const int n = 1 + static_cast<int>(rng() % 64);
    const Response r = ComputeResponse(id, ssk, x, n);
    ASSERT_EQ(r.length(), n);
    ASSERT_EQ(r.value(), testing::RefResponse(id, ssk, x, n));
  }
}

TEST(ComputeResponseTest, SymmetricAndDegenerate) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto id = static_cast<std::uint16_t>(rng());
    const auto ssk = static_cast<std::uint16_t>(rng());
    const auto x = static_cast<std::uint16_t>(rng());
    EXPECT_EQ(ComputeResponse(id, ssk, x, 16), ComputeResponse(ssk, id, x, 16));
    EXPECT_EQ(ComputeResponse(id, id, x, 32).value(), 0u);
  }
  EXPECT_THROW(ComputeResponse(1, 2, 3, 0), std::invalid_argument);
  EXPECT_THROW(ComputeResponse(1, 2, 3, 65), std::invalid_argument);
}

TEST(ComputeResponseTest, ShorterResponsesAreNotPrefixes) {
  // The n-bit response comes from bits 16..16+n of each stream, so the
  // 8-bit value is the top byte of the 16-bit one.
  const auto r16 = ComputeResponse(0xBEEF, 0x1234, 0xA5A5, 16).value();
  const auto r8 = ComputeResponse(0xBEEF, 0x1234, 0xA5A5, 8).value();
  EXPECT_EQ(r8, r16 >> 8);
}

TEST(ComputeResponseTest, FixedQueryRepeatsAcrossEpochs) {
  // Credential rotation falls into a short cycle, so a reader that always
  // sends the same Query sees repeated responses: 195 equal pairs over
  // 1000 epochs, against about 7.6 for fresh random values.
  TagCredentials c{0xBEEF, 0x1234, 0};
  std::vector<std::uint64_t> seen;
  for (int epoch = 0; epoch < 1000; ++epoch) {
    seen.push_back(ComputeResponse(c.id, c.ssk, 0xA5A5, 16).value());
    c = c.Rotated();
  }
  std::sort(seen.begin(), seen.end());
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < seen.size();) {
    std::size_t j = i;
    while (j < seen.size() && seen[j] == seen[i]) ++j;
    pairs += (j - i) * (j - i - 1) / 2;
    i = j;
  }
  EXPECT_EQ(pairs, 195u);
}

TEST(CredentialsTest, RotationAndSessionKey) {
  const TagCredentials c{0xBEEF, 0x1234, 7};
  EXPECT_EQ(c.SessionKey(), 0xBEEF ^ 0x1234);
  const TagCredentials r = c.Rotated();
  EXPECT_EQ(r.id, UpdateCredential(0xBEEF));
  EXPECT_EQ(r.ssk, UpdateCredential(0x1234));
  EXPECT_EQ(r.epoch, 8u);
}

TEST(KeystoreTest, Invariants) {
  ServerKeystore ks;
  ks.Register("a", {0x1111, 0x2222, 0});
  auto code_of = [&](const std::string& label, TagCredentials c) {
    try {
      ks.Register(label, c);
    } catch (const KeystoreError& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error for " << label;
    return KeystoreError::Code::kMalformed;
  };
  EXPECT_EQ(code_of("a", {0x3333, 0x4444, 0}), KeystoreError::Code::kDuplicateLabel);
  EXPECT_EQ(code_of("b", {0x5555, 0x5555, 0}), KeystoreError::Code::kDegenerateCredentials);
  EXPECT_EQ(code_of("c", {0x2222, 0x1111, 0}), KeystoreError::Code::kDuplicatePair);
  EXPECT_EQ(code_of("d", {0x1111, 0x2222, 4}), KeystoreError::Code::kDuplicatePair);
  EXPECT_EQ(ks.size(), 1u);
  ks.Register("e", {0x1111, 0x3333, 0});
  EXPECT_EQ(ks.size(), 2u);
  ASSERT_NE(ks.Find("e"), nullptr);
  EXPECT_EQ(ks.Find("e")->ssk, 0x3333);
  EXPECT_EQ(ks.Find("zzz"), nullptr);
}

struct Fixture {
  CounterEntropy reader_entropy{0x1000};
  CounterEntropy tag_entropy{0x2000};
  Reader reader{reader_entropy};
  Tag tag{TagCredentials{0xBEEF, 0x1234, 0}, tag_entropy};
  Server server{[] {
    ServerKeystore ks;
    ks.Register("other", {0x0F0F, 0xF0F0, 0});
    ks.Register("t", {0xBEEF, 0x1234, 0});
    return ks;
  }()};
};

TEST(ProtocolTest, HonestRunAuthenticatesBothSides) {
  Fixture f;
  const Query q = f.reader.Begin();
  EXPECT_EQ(q.value, 0x1000);
  const TagResponse r = f.tag.Respond(q);
  EXPECT_EQ(r.nonce1, 0x2000);
  EXPECT_TRUE(f.tag.has_pending());

  const Verdict v = f.server.Verify(q, r);
  ASSERT_TRUE(std::holds_alternative<Unique>(v));
  const Unique& u = std::get<Unique>(v);
  EXPECT_EQ(u.session_key, 0xBEEF ^ 0x1234);
  EXPECT_EQ(u.nonce3, ComputeResponse(0xBEEF, 0x1234, 0x2000, 16));
  EXPECT_EQ(f.server.last_match(), "t");
  EXPECT_EQ(*f.server.keystore().Find("t"), (TagCredentials{0xBEEF, 0x1234, 0}.Rotated()));
  EXPECT_EQ(*f.server.keystore().Find("other"), (TagCredentials{0x0F0F, 0xF0F0, 0}));

  const FinalizeResult fin = f.tag.Finalize(Nonce3Msg{u.nonce3});
  ASSERT_TRUE(std::holds_alternative<TagAccept>(fin));
  EXPECT_EQ(std::get<TagAccept>(fin).session_key, u.session_key);
  EXPECT_FALSE(f.tag.has_pending());
  EXPECT_EQ(f.tag.credentials(), *f.server.keystore().Find("t"));
}

TEST(ProtocolTest, ManyRoundsStaySynchronized) {
  Fixture f;
  for (int round = 0; round < 100; ++round) {
    const Query q = f.reader.Begin();
    const TagResponse r = f.tag.Respond(q);
    const Verdict v = f.server.Verify(q, r);
    ASSERT_TRUE(std::holds_alternative<Unique>(v)) << round;
    ASSERT_TRUE(std::holds_alternative<TagAccept>(f.tag.Finalize({std::get<Unique>(v).nonce3})));
    ASSERT_EQ(f.tag.credentials(), *f.server.keystore().Find("t"));
  }
  EXPECT_EQ(f.tag.credentials().epoch, 100u);
}

TEST(ProtocolTest, WrongNonce3IsRejectedWithoutRotation) {
  Fixture f;
  const Query q = f.reader.Begin();
  const TagResponse r = f.tag.Respond(q);
  const Unique u = std::get<Unique>(f.server.Verify(q, r));
  const TagCredentials before = f.tag.credentials();
  EXPECT_TRUE(std::holds_alternative<TagReject>(f.tag.Finalize({u.nonce3.WithBitFlipped(5)})));
  EXPECT_EQ(f.tag.credentials(), before);
  EXPECT_FALSE(f.tag.has_pending());
  // Second finalize without a new exchange is out of order.
  EXPECT_THROW(f.tag.Finalize({u.nonce3}), ProtocolOrderError);
}

TEST(ProtocolTest, FinalizeWithoutRespondThrows) {
  Fixture f;
  EXPECT_THROW(f.tag.Finalize({Response(0, 16)}), ProtocolOrderError);
}

TEST(ProtocolTest, RespondAbandonsPendingExchange) {
  Fixture f;
  const Query q1 = f.reader.Begin();
  const TagResponse r1 = f.tag.Respond(q1);
  const Unique u1 = std::get<Unique>(f.server.Verify(q1, r1));
  f.tag.Respond(f.reader.Begin());
  // The NONCE3 for the first exchange no longer matches.
  EXPECT_TRUE(std::holds_alternative<TagReject>(f.tag.Finalize({u1.nonce3})));
}

TEST(ProtocolTest, FrozenPartiesDoNotRotate) {
  Fixture f;
  f.tag.set_frozen(true);
  f.server.set_frozen(true);
  const Query q = f.reader.Begin();
  const TagResponse r = f.tag.Respond(q);
  const Unique u = std::get<Unique>(f.server.Verify(q, r));
  EXPECT_TRUE(std::holds_alternative<TagAccept>(f.tag.Finalize({u.nonce3})));
  EXPECT_EQ(f.tag.credentials().epoch, 0u);
  EXPECT_EQ(f.server.keystore().Find("t")->epoch, 0u);
  EXPECT_TRUE(std::holds_alternative<Unique>(f.server.Verify(q, r)));
}

TEST(ServerTest, NoMatchAndAmbiguous) {
  Server empty{ServerKeystore{}};
  EXPECT_TRUE(std::holds_alternative<NoMatch>(empty.Verify({1}, {Response(5, 16), 2})));

  ServerKeystore ks;
  ks.Register("a", {0x1234, 0x5678, 0});
  Server s{ks};
  const TagResponse honest{ComputeResponse(0x1234, 0x5678, 42, 16), 7};
  EXPECT_TRUE(std::holds_alternative<NoMatch>(s.Verify({42}, {honest.response.WithBitFlipped(0), 7})));
  EXPECT_FALSE(s.last_match().has_value());
  // Wrong response length never matches.
  EXPECT_TRUE(std::holds_alternative<NoMatch>(s.Verify({42}, {ComputeResponse(0x1234, 0x5678, 42, 8), 7})));
  EXPECT_EQ(s.keystore().Find("a")->epoch, 0u);

  // Seeds 1 and 2 share a stream, so with Query 0 these entries collide.
  ServerKeystore twins;
  twins.Register("x", {0x0001, 0x0003, 0});
  twins.Register("y", {0x0002, 0x0003, 0});
  Server t{twins};
  const Verdict v = t.Verify({0}, {ComputeResponse(0x0001, 0x0003, 0, 16), 0});
  ASSERT_TRUE(std::holds_alternative<Ambiguous>(v));
  EXPECT_EQ(std::get<Ambiguous>(v).matches, 2u);
  EXPECT_EQ(t.keystore(), twins);
}

TEST(SessionTest, FrozenCiphertext) {
  const auto msg = Bytes("gen2 session msg");
  const auto ct = ApplySessionKeystream(0x0003, msg);
  EXPECT_EQ(ct, kSessionCiphertext);
  EXPECT_EQ(ApplySessionKeystream(0x0003, ct), msg);
  EXPECT_EQ(PackLsbFirst(SessionKeystream(0x0003, 16)).size(), 2u);
  EXPECT_TRUE(ApplySessionKeystream(0x0003, std::vector<std::uint8_t>{}).empty());
}

TEST(SessionTest, RoundTripRandom) {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint8_t> m(rng() % 200);
    for (auto& b : m) b = static_cast<std::uint8_t>(rng());
    const auto k = static_cast<std::uint16_t>(rng());
    EXPECT_EQ(ApplySessionKeystream(k, ApplySessionKeystream(k, m)), m);
  }
}

TEST(EntropyTest, Sources) {
  CounterEntropy c(0xFFFF);
  EXPECT_EQ(c.Next16(), 0xFFFF);
  EXPECT_EQ(c.Next16(), 0x0000);
  SeededEntropy a(5), b(5);
  std::set<std::uint16_t> seen;
  for (int i = 0; i < 100; ++i) {
    const auto v = a.Next16();
    EXPECT_EQ(v, b.Next16());
    seen.insert(v);
  }
  EXPECT_GT(seen.size(), 90u);
}

}  // namespace
}  // namespace gen2
