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

#include "mhtlp/board.hpp"

#include <mutex>

namespace mhtlp {

std::uint64_t BulletinBoard::publish(std::string author, std::string topic,
                                     nlohmann::json payload) {
  std::unique_lock lock(mutex_);
  const std::uint64_t seq = next_seq_++;
  records_.push_back({seq, std::move(author), std::move(topic), std::move(payload)});
  return seq;
}

std::uint64_t BulletinBoard::send(std::string sender, std::string recipient, std::string topic,
                                  nlohmann::json payload) {
  std::unique_lock lock(mutex_);
  const std::uint64_t seq = next_seq_++;
  envelopes_.push_back(
      {seq, std::move(sender), std::move(recipient), std::move(topic), std::move(payload)});
  return seq;
}

std::vector<BoardRecord> BulletinBoard::records() const {
  std::shared_lock lock(mutex_);
  return records_;
}

std::vector<BoardEnvelope> BulletinBoard::envelopes() const {
  std::shared_lock lock(mutex_);
  return envelopes_;
}

std::vector<BoardEnvelope> BulletinBoard::inbox(const std::string& recipient) const {
  std::shared_lock lock(mutex_);
  std::vector<BoardEnvelope> out;
  for (const auto& e : envelopes_)
    if (e.recipient == recipient) out.push_back(e);
  return out;
}

std::vector<BoardRecord> BulletinBoard::find(const std::string& topic) const {
  std::shared_lock lock(mutex_);
  std::vector<BoardRecord> out;
  for (const auto& r : records_)
    if (r.topic == topic) out.push_back(r);
  return out;
}

nlohmann::json BulletinBoard::to_json() const {
  std::shared_lock lock(mutex_);
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : records_)
    records.push_back({{"seq", r.seq}, {"author", r.author}, {"topic", r.topic},
                       {"payload", r.payload}});
  nlohmann::json envelopes = nlohmann::json::array();
  for (const auto& e : envelopes_)
    envelopes.push_back({{"seq", e.seq}, {"sender", e.sender}, {"recipient", e.recipient},
                         {"topic", e.topic}, {"payload", e.payload}});
  return {{"records", records}, {"envelopes", envelopes}};
}

std::string client_topic(int phase, const std::string& step, std::size_t client) {
  return "phase" + std::to_string(phase) + ".step" + step + ".client" + std::to_string(client);
}

std::string server_topic(int phase, const std::string& step) {
  return "phase" + std::to_string(phase) + ".step" + step + ".server";
}

}  // namespace mhtlp
