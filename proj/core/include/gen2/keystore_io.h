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

#ifndef GEN2_KEYSTORE_IO_H_
#define GEN2_KEYSTORE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "gen2/protocol.h"

namespace gen2 {

// JSON array of {"label": str, "id": "<4 hex>", "ssk": "<4 hex>", "epoch": int}.
// Parse failures and schema violations raise KeystoreError::Code::kMalformed;
// invariant violations raise the matching KeystoreError code.
ServerKeystore ParseKeystore(std::string_view json_text);
std::string SerializeKeystore(const ServerKeystore& keystore);

ServerKeystore LoadKeystore(const std::filesystem::path& path);
void SaveKeystore(const ServerKeystore& keystore, const std::filesystem::path& path);

std::string Hex16(std::uint16_t v);
// Accepts 1-4 hex digits with an optional 0x prefix; throws
// std::invalid_argument otherwise.
std::uint16_t ParseHex16(std::string_view text);

}  // namespace gen2

#endif  // GEN2_KEYSTORE_IO_H_
