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

#include "mhtlp/bytes.hpp"

#include <cctype>

#include "mhtlp/error.hpp"

namespace mhtlp {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kMalformed: return "malformed";
    case ErrorCode::kIntegrity: return "integrity";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kMisbehavior: return "misbehavior";
    case ErrorCode::kCancelled: return "cancelled";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

Bytes to_bytes(const mpz_class& value) {
  if (value < 0) throw Error(ErrorCode::kInvalidArgument, "negative integer has no byte encoding");
  if (value == 0) return {};
  std::size_t count = 0;
  const std::size_t size = (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
  Bytes out(size);
  mpz_export(out.data(), &count, 1, 1, 1, 0, value.get_mpz_t());
  out.resize(count);
  return out;
}

mpz_class from_bytes(ByteView bytes) {
  mpz_class out;
  if (!bytes.empty()) mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return out;
}

void append_u32_be(Bytes& out, std::uint32_t value) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(value >> shift));
}

void append_u64_be(Bytes& out, std::uint64_t value) {
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(value >> shift));
}

void append_length_prefixed(Bytes& out, ByteView field) {
  append_u32_be(out, static_cast<std::uint32_t>(field.size()));
  out.insert(out.end(), field.begin(), field.end());
}

Bytes length_prefixed(const mpz_class& value) {
  Bytes out;
  append_length_prefixed(out, to_bytes(value));
  return out;
}

std::string to_hex(const mpz_class& value) {
  if (value < 0) throw Error(ErrorCode::kInvalidArgument, "negative integer has no hex encoding");
  return value.get_str(16);
}

mpz_class from_hex(std::string_view hex) {
  if (hex.empty()) throw Error(ErrorCode::kMalformed, "empty hex string");
  for (char c : hex) {
    if (!std::isxdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::kMalformed, "invalid hex digit in '" + std::string(hex) + "'");
  }
  return mpz_class(std::string(hex), 16);
}

std::string bytes_to_hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Bytes bytes_from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error(ErrorCode::kMalformed, "odd-length byte hex");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(ErrorCode::kMalformed, "invalid hex digit");
  };
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
  return out;
}

std::size_t bit_length(const mpz_class& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

}  // namespace mhtlp
