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

#include "gen2/keystore_io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace gen2 {
namespace {

KeystoreError::Code CodeOf(std::string_view text) {
  try {
    ParseKeystore(text);
  } catch (const KeystoreError& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return KeystoreError::Code::kMalformed;
}

ServerKeystore Sample() {
  ServerKeystore ks;
  ks.Register("dock-1", {0xBEEF, 0x1234, 0});
  ks.Register("dock-2", {0x0001, 0xFFFF, 12});
  return ks;
}

TEST(KeystoreIoTest, RoundTrip) {
  const ServerKeystore ks = Sample();
  const std::string text = SerializeKeystore(ks);
  EXPECT_NE(text.find("\"id\": \"beef\""), std::string::npos);
  EXPECT_EQ(ParseKeystore(text), ks);
  EXPECT_EQ(ParseKeystore("[]").size(), 0u);
}

TEST(KeystoreIoTest, AcceptsUppercaseHex) {
  const auto ks = ParseKeystore(R"([{"label":"a","id":"ABCD","ssk":"00ff","epoch":3}])");
  ASSERT_EQ(ks.size(), 1u);
  EXPECT_EQ(ks.entries()[0].credentials, (TagCredentials{0xABCD, 0x00FF, 3}));
}

TEST(KeystoreIoTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "gen2_keystore_io_test.json";
  SaveKeystore(Sample(), path);
  EXPECT_EQ(LoadKeystore(path), Sample());
  std::filesystem::remove(path);
  EXPECT_THROW(LoadKeystore(path), KeystoreError);
}

TEST(KeystoreIoTest, MalformedInputs) {
  using Code = KeystoreError::Code;
  EXPECT_EQ(CodeOf("not json"), Code::kMalformed);
  EXPECT_EQ(CodeOf("{}"), Code::kMalformed);
  EXPECT_EQ(CodeOf("[1]"), Code::kMalformed);
  EXPECT_EQ(CodeOf(R"([{"label":"a","id":"0001","ssk":"0002"}])"), Code::kMalformed);
  EXPECT_EQ(CodeOf(R"([{"label":"a","id":"001","ssk":"0002","epoch":0}])"), Code::kMalformed);
  EXPECT_EQ(CodeOf(R"([{"label":"a","id":"00g1","ssk":"0002","epoch":0}])"), Code::kMalformed);
  EXPECT_EQ(CodeOf(R"([{"label":"a","id":1,"ssk":"0002","epoch":0}])"), Code::kMalformed);
  EXPECT_EQ(CodeOf(R"([{"label":"a","id":"0001","ssk":"0002","epoch":-1}])"), Code::kMalformed);
  EXPECT_EQ(CodeOf(R"([{"label":7,"id":"0001","ssk":"0002","epoch":0}])"), Code::kMalformed);
}

TEST(KeystoreIoTest, InvariantViolations) {
  using Code = KeystoreError::Code;
  EXPECT_EQ(CodeOf(R"([{"label":"a","id":"0001","ssk":"0001","epoch":0}])"),
            Code::kDegenerateCredentials);
  EXPECT_EQ(CodeOf(R"([{"label":"a","id":"0001","ssk":"0002","epoch":0},
                       {"label":"a","id":"0003","ssk":"0004","epoch":0}])"),
            Code::kDuplicateLabel);
  EXPECT_EQ(CodeOf(R"([{"label":"a","id":"0001","ssk":"0002","epoch":0},
                       {"label":"b","id":"0002","ssk":"0001","epoch":5}])"),
            Code::kDuplicatePair);
}

TEST(KeystoreIoTest, Hex16) {
  EXPECT_EQ(Hex16(0x00ab), "00ab");
  EXPECT_EQ(ParseHex16("0xBEEF"), 0xBEEF);
  EXPECT_EQ(ParseHex16("f"), 0xF);
  EXPECT_THROW(ParseHex16(""), std::invalid_argument);
  EXPECT_THROW(ParseHex16("0x"), std::invalid_argument);
  EXPECT_THROW(ParseHex16("12345"), std::invalid_argument);
  EXPECT_THROW(ParseHex16("12 4"), std::invalid_argument);
  EXPECT_THROW(ParseHex16("-1"), std::invalid_argument);
}

}  // namespace
}  // namespace gen2
