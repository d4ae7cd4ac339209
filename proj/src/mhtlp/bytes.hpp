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

#ifndef MHTLP_BYTES_HPP_
#define MHTLP_BYTES_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mhtlp {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// Minimal big-endian encoding; zero encodes as the empty string.
Bytes to_bytes(const mpz_class& value);
mpz_class from_bytes(ByteView bytes);

// 4-byte big-endian length prefix followed by the minimal encoding.
Bytes length_prefixed(const mpz_class& value);
void append_length_prefixed(Bytes& out, ByteView field);

void append_u64_be(Bytes& out, std::uint64_t value);
void append_u32_be(Bytes& out, std::uint32_t value);

// Lowercase hexadecimal without leading zeros ("0" for zero).
std::string to_hex(const mpz_class& value);
// Accepts lowercase or uppercase digits, no prefix. Throws kMalformed.
mpz_class from_hex(std::string_view hex);

// Plain byte-string hex (two digits per byte, lowercase).
std::string bytes_to_hex(ByteView bytes);
Bytes bytes_from_hex(std::string_view hex);

std::size_t bit_length(const mpz_class& value);

}  // namespace mhtlp

#endif  // MHTLP_BYTES_HPP_
