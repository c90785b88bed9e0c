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

#include "gen2/channel.h"

namespace gen2 {

std::string_view ToString(Party p) {
  switch (p) {
    case Party::kReader: return "reader";
    case Party::kTag: return "tag";
    case Party::kAdversary: return "adversary";
  }
  return "unknown";
}

std::string_view ToString(ChannelAction a) {
  switch (a) {
    case ChannelAction::kSent: return "sent";
    case ChannelAction::kDelivered: return "delivered";
    case ChannelAction::kDropped: return "dropped";
    case ChannelAction::kModified: return "modified";
    case ChannelAction::kInjected: return "injected";
  }
  return "unknown";
}

std::optional<std::vector<std::uint8_t>> Channel::Transmit(Party from, Party to,
                                                           std::vector<std::uint8_t> bytes) {
  log_.push_back({ChannelAction::kSent, from, to, from, bytes});
  Party actor = from;
  if (adversary_) {
    switch (adversary_(from, to, bytes)) {
      case Decision::kPass:
        break;
      case Decision::kDrop:
        log_.push_back({ChannelAction::kDropped, from, to, Party::kAdversary, {}});
        return std::nullopt;
      case Decision::kModify:
        log_.push_back({ChannelAction::kModified, from, to, Party::kAdversary, bytes});
        actor = Party::kAdversary;
        break;
    }
  }
  log_.push_back({ChannelAction::kDelivered, from, to, actor, bytes});
  return bytes;
}

std::vector<std::uint8_t> Channel::Inject(Party to, std::vector<std::uint8_t> bytes) {
  log_.push_back({ChannelAction::kInjected, Party::kAdversary, to, Party::kAdversary, bytes});
  log_.push_back({ChannelAction::kDelivered, Party::kAdversary, to, Party::kAdversary, bytes});
  return bytes;
}

std::vector<std::uint8_t> Channel::DeliveredStream() const {
  std::vector<std::uint8_t> out;
  for (const auto& e : log_) {
    if (e.action == ChannelAction::kDelivered) out.insert(out.end(), e.bytes.begin(), e.bytes.end());
  }
  return out;
}

}  // namespace gen2
