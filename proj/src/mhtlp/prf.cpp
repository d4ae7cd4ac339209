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

#include "mhtlp/prf.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <array>

#include "mhtlp/error.hpp"

namespace mhtlp {
namespace {

std::array<std::uint8_t, 32> hmac_block(const PrfKey& key, const Bytes& input,
                                        std::uint32_t block) {
  Bytes message = input;
  append_u32_be(message, block);
  std::array<std::uint8_t, 32> out{};
  unsigned int len = 0;
  if (HMAC(EVP_sha256(), key.material().data(), static_cast<int>(key.material().size()),
           message.data(), message.size(), out.data(), &len) == nullptr ||
      len != out.size())
    throw Error(ErrorCode::kInternal, "HMAC-SHA-256 failed");
  return out;
}

}  // namespace

PrfKey::PrfKey(Bytes material) : material_(std::move(material)) {
  if (material_.empty()) throw Error(ErrorCode::kInvalidArgument, "empty PRF key");
}

PrfKey PrfKey::from_element(const mpz_class& element) {
  return PrfKey(length_prefixed(element));
}

PrfKey PrfKey::random(Rng& rng, std::size_t length) { return PrfKey(rng.bytes(length)); }

Bytes encode_prf_input(PrfLabel label, std::uint64_t index, std::uint8_t retry) {
  Bytes out;
  out.push_back(static_cast<std::uint8_t>(label));
  append_u64_be(out, index);
  if (label == PrfLabel::kBase) out.push_back(0x00);
  if (retry > 0) out.push_back(retry);
  return out;
}

mpz_class prf_mod(PrfLabel label, std::uint64_t index, const PrfKey& key,
                  const mpz_class& modulus, std::uint8_t retry) {
  const Bytes input = encode_prf_input(label, index, retry);
  const std::size_t blocks = (bit_length(modulus) + 128 + 255) / 256;
  Bytes stream;
  stream.reserve(blocks * 32);
  for (std::uint32_t b = 0; b < blocks; ++b) {
    const auto block = hmac_block(key, input, b);
    stream.insert(stream.end(), block.begin(), block.end());
  }
  mpz_class out = from_bytes(stream);
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

mpz_class prf(PrfLabel label, std::uint64_t index, const PrfKey& key, const FieldContext& ctx) {
  return prf_mod(label, index, key, ctx.p());
}

mpz_class first_nonzero(const std::function<mpz_class(std::uint8_t)>& sample) {
  for (int retry = 0; retry < kPrfNonzeroRetryCap; ++retry) {
    mpz_class v = sample(static_cast<std::uint8_t>(retry));
    if (v != 0) return v;
  }
  throw Error(ErrorCode::kInternal, "PRF produced zero on every retry");
}

mpz_class prf_nonzero(PrfLabel label, std::uint64_t index, const PrfKey& key,
                      const FieldContext& ctx) {
  return first_nonzero(
      [&](std::uint8_t retry) { return prf_mod(label, index, key, ctx.p(), retry); });
}

Bytes prf_keystream(const PrfKey& key, std::size_t length) {
  Bytes out;
  const Bytes input = encode_prf_input(PrfLabel::kKeystream, 0);
  for (std::uint32_t b = 0; out.size() < length; ++b) {
    const auto block = hmac_block(key, input, b);
    out.insert(out.end(), block.begin(), block.end());
  }
  out.resize(length);
  return out;
}

}  // namespace mhtlp
