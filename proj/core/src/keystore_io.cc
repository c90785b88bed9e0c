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

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gen2 {

using json = nlohmann::json;

std::string Hex16(std::uint16_t v) {
  char buf[5];
  std::snprintf(buf, sizeof buf, "%04x", v);
  return buf;
}

std::uint16_t ParseHex16(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value, 16);
  if (text.empty() || text.size() > 4 || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("expected a 16-bit hex value, got '" + std::string(text) + "'");
  }
  return static_cast<std::uint16_t>(value);
}

ServerKeystore ParseKeystore(std::string_view json_text) {
  using Code = KeystoreError::Code;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw KeystoreError(Code::kMalformed, std::string("keystore is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw KeystoreError(Code::kMalformed, "keystore must be a JSON array");

  ServerKeystore ks;
  for (const auto& item : doc) {
    try {
      if (!item.is_object() || !item.at("label").is_string() || !item.at("id").is_string() ||
          !item.at("ssk").is_string() || !item.at("epoch").is_number_unsigned()) {
        throw KeystoreError(Code::kMalformed, "keystore entry has missing or mistyped fields");
      }
      const auto id = item.at("id").get<std::string>();
      const auto ssk = item.at("ssk").get<std::string>();
      if (id.size() != 4 || ssk.size() != 4) {
        throw KeystoreError(Code::kMalformed, "id and ssk must be exactly 4 hex digits");
      }
      TagCredentials c{ParseHex16(id), ParseHex16(ssk), item.at("epoch").get<std::uint64_t>()};
      ks.Register(item.at("label").get<std::string>(), c);
    } catch (const json::exception& e) {
      throw KeystoreError(Code::kMalformed, std::string("keystore entry: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw KeystoreError(Code::kMalformed, std::string("keystore entry: ") + e.what());
    }
  }
  return ks;
}

std::string SerializeKeystore(const ServerKeystore& keystore) {
  json doc = json::array();
  for (const auto& e : keystore.entries()) {
    doc.push_back({{"label", e.label},
                   {"id", Hex16(e.credentials.id)},
                   {"ssk", Hex16(e.credentials.ssk)},
                   {"epoch", e.credentials.epoch}});
  }
  return doc.dump(2) + "\n";
}

ServerKeystore LoadKeystore(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw KeystoreError(KeystoreError::Code::kMalformed, "cannot open keystore " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseKeystore(buf.str());
}

void SaveKeystore(const ServerKeystore& keystore, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write keystore " + path.string());
  out << SerializeKeystore(keystore);
}

}  // namespace gen2
