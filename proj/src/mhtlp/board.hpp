// Copyright 2026 The mhtlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MHTLP_BOARD_HPP_
#define MHTLP_BOARD_HPP_

#include <cstdint>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

namespace mhtlp {

struct BoardRecord {
  std::uint64_t seq = 0;
  std::string author;
  std::string topic;
  nlohmann::json payload;
};

struct BoardEnvelope {
  std::uint64_t seq = 0;
  std::string sender;
  std::string recipient;
  std::string topic;
  nlohmann::json payload;
};

/// Append-only public log plus addressed point-to-point envelopes. Every
/// publish and send of a protocol run lands here exactly once.
class BulletinBoard {
 public:
  std::uint64_t publish(std::string author, std::string topic, nlohmann::json payload);
  std::uint64_t send(std::string sender, std::string recipient, std::string topic,
                     nlohmann::json payload);

  std::vector<BoardRecord> records() const;
  std::vector<BoardEnvelope> envelopes() const;
  std::vector<BoardEnvelope> inbox(const std::string& recipient) const;
  // Records whose topic equals `topic`.
  std::vector<BoardRecord> find(const std::string& topic) const;

  nlohmann::json to_json() const;

 private:
  mutable std::shared_mutex mutex_;
  std::uint64_t next_seq_ = 0;
  std::vector<BoardRecord> records_;
  std::vector<BoardEnvelope> envelopes_;
};

// "phase{N}.step{label}.client{u}" or "phase{N}.step{label}.server".
std::string client_topic(int phase, const std::string& step, std::size_t client);
std::string server_topic(int phase, const std::string& step);

}  // namespace mhtlp

#endif  // MHTLP_BOARD_HPP_
