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

#ifndef MHTLP_COMMITMENT_HPP_
#define MHTLP_COMMITMENT_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>

#include "mhtlp/bytes.hpp"

namespace mhtlp {

struct Commitment {
  std::array<std::uint8_t, 32> digest{};

  friend bool operator==(const Commitment&, const Commitment&) = default;
};

// SHA-256(len(m) || m || len(r) || r) with 4-byte big-endian lengths.
Commitment commit(ByteView message, ByteView opening);
bool verify_commit(const Commitment& com, ByteView message, ByteView opening);

// Integer conveniences using the minimal big-endian encoding.
Commitment commit(const mpz_class& message, const mpz_class& opening);
bool verify_commit(const Commitment& com, const mpz_class& message, const mpz_class& opening);

Bytes sha256(ByteView data);

}  // namespace mhtlp

#endif  // MHTLP_COMMITMENT_HPP_
