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

#include "mhtlp/rng.hpp"

#include <openssl/rand.h>
#include <openssl/sha.h>

#include <cstring>

#include "mhtlp/error.hpp"

namespace mhtlp {

Rng Rng::from_seed(ByteView seed) {
  Rng rng;
  Bytes material = {'m', 'h', 't', 'l', 'p', '-', 'r', 'n', 'g'};
  material.insert(material.end(), seed.begin(), seed.end());
  SHA256(material.data(), material.size(), rng.key_.data());
  return rng;
}

Rng Rng::from_seed(std::uint64_t seed) {
  Bytes encoded;
  append_u64_be(encoded, seed);
  return from_seed(encoded);
}

Rng Rng::system() {
  Rng rng;
  rng.system_ = true;
  return rng;
}

void Rng::refill() {
  Bytes input(key_.begin(), key_.end());
  append_u64_be(input, counter_++);
  SHA256(input.data(), input.size(), block_.data());
  used_ = 0;
}

void Rng::fill(std::span<std::uint8_t> out) {
  if (system_) {
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1)
      throw Error(ErrorCode::kInternal, "system entropy source failed");
    return;
  }
  std::size_t written = 0;
  while (written < out.size()) {
    if (used_ == block_.size()) refill();
    const std::size_t take = std::min(out.size() - written, block_.size() - used_);
    std::memcpy(out.data() + written, block_.data() + used_, take);
    used_ += take;
    written += take;
  }
}

Bytes Rng::bytes(std::size_t count) {
  Bytes out(count);
  fill(out);
  return out;
}

std::uint64_t Rng::next_u64() {
  std::array<std::uint8_t, 8> raw{};
  fill(raw);
  std::uint64_t v = 0;
  for (auto b : raw) v = (v << 8) | b;
  return v;
}

mpz_class Rng::random_bits(std::size_t bits) {
  if (bits == 0) return 0;
  Bytes raw = bytes((bits + 7) / 8);
  const std::size_t excess = raw.size() * 8 - bits;
  raw[0] &= static_cast<std::uint8_t>(0xff >> excess);
  return from_bytes(raw);
}

mpz_class Rng::below(const mpz_class& bound) {
  if (bound <= 0) throw Error(ErrorCode::kInvalidArgument, "sampling bound must be positive");
  const std::size_t bits = bit_length(bound);
  for (;;) {
    mpz_class candidate = random_bits(bits);
    if (candidate < bound) return candidate;
  }
}

mpz_class Rng::between(const mpz_class& lo, const mpz_class& hi) {
  if (hi <= lo) throw Error(ErrorCode::kInvalidArgument, "empty sampling range");
  return lo + below(hi - lo);
}

Rng Rng::fork(std::uint64_t label) {
  if (system_) return system();
  Bytes seed(key_.begin(), key_.end());
  append_u64_be(seed, label);
  append_u64_be(seed, next_u64());
  return from_seed(seed);
}

}  // namespace mhtlp
