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

#include "mhtlp/commitment.hpp"

#include <openssl/sha.h>

namespace mhtlp {

Bytes sha256(ByteView data) {
  Bytes out(SHA256_DIGEST_LENGTH);
  SHA256(data.data(), data.size(), out.data());
  return out;
}

Commitment commit(ByteView message, ByteView opening) {
  Bytes input;
  append_length_prefixed(input, message);
  append_length_prefixed(input, opening);
  Commitment com;
  SHA256(input.data(), input.size(), com.digest.data());
  return com;
}

bool verify_commit(const Commitment& com, ByteView message, ByteView opening) {
  return commit(message, opening) == com;
}

Commitment commit(const mpz_class& message, const mpz_class& opening) {
  return commit(to_bytes(message), to_bytes(opening));
}

bool verify_commit(const Commitment& com, const mpz_class& message, const mpz_class& opening) {
  if (message < 0 || opening < 0) return false;
  return commit(message, opening) == com;
}

}  // namespace mhtlp
