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

#ifndef GEN2_CHANNEL_H_
#define GEN2_CHANNEL_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gen2 {

enum class Party { kReader, kTag, kAdversary };
std::string_view ToString(Party p);

enum class ChannelAction { kSent, kDelivered, kDropped, kModified, kInjected };
std::string_view ToString(ChannelAction a);

struct ChannelEvent {
  ChannelAction action = ChannelAction::kSent;
  Party from = Party::kReader;
  Party to = Party::kTag;
  Party actor = Party::kReader;  // who caused this event
  std::vector<std::uint8_t> bytes;
};

// Insecure reader <-> tag link. Every send, adversary action and delivery
// is appended to the log in order.
class Channel {
 public:
  enum class Decision { kPass, kDrop, kModify };
  // The hook may rewrite `bytes` and must then return kModify.
  using Adversary =
      std::function<Decision(Party from, Party to, std::vector<std::uint8_t>& bytes)>;

  void set_adversary(Adversary adversary) { adversary_ = std::move(adversary); }
  void clear_adversary() { adversary_ = nullptr; }

  // Returns the bytes that reach `to`, or nothing if dropped.
  std::optional<std::vector<std::uint8_t>> Transmit(Party from, Party to,
                                                    std::vector<std::uint8_t> bytes);

  // Adversary-originated message; logged and delivered as given.
  std::vector<std::uint8_t> Inject(Party to, std::vector<std::uint8_t> bytes);

  const std::vector<ChannelEvent>& log() const { return log_; }
  // Concatenated bytes of every delivered message, in order.
  std::vector<std::uint8_t> DeliveredStream() const;

 private:
  Adversary adversary_;
  std::vector<ChannelEvent> log_;
};

}  // namespace gen2

#endif  // GEN2_CHANNEL_H_
