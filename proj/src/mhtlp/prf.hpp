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

#ifndef MHTLP_PRF_HPP_
#define MHTLP_PRF_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <functional>

#include "mhtlp/bytes.hpp"
#include "mhtlp/field.hpp"
#include "mhtlp/rng.hpp"

namespace mhtlp {

enum class PrfLabel : std::uint8_t {
  kCoord = 0x01,      // PRF(i, key) for coordinate blinding
  kBase = 0x02,       // PRF(j||0, mk) deriving the next puzzle base
  kKdf = 0x03,        // PRF(1, mk) / PRF(2, mk) deriving sub-keys
  kKeystream = 0x04,  // keystream blocks of the baseline puzzle
};

/// Key material for the PRF. Random keys are 32 bytes; ring and field
/// elements are adopted through their length-prefixed minimal encoding.
class PrfKey {
 public:
  explicit PrfKey(Bytes material);
  static PrfKey from_element(const mpz_class& element);
  static PrfKey random(Rng& rng, std::size_t length = 32);

  const Bytes& material() const noexcept { return material_; }
  friend bool operator==(const PrfKey&, const PrfKey&) = default;

 private:
  Bytes material_;
};

// label || 8-byte BE index || [0x00 for kBase] || [retry byte if retry > 0]
Bytes encode_prf_input(PrfLabel label, std::uint64_t index, std::uint8_t retry = 0);

// HMAC-SHA-256 over encode_prf_input || 4-byte BE block counter, enough
// blocks for log2(p) + 128 bits, reduced mod p.
mpz_class prf(PrfLabel label, std::uint64_t index, const PrfKey& key, const FieldContext& ctx);
// Same construction reduced mod an arbitrary modulus (used for RSA bases).
mpz_class prf_mod(PrfLabel label, std::uint64_t index, const PrfKey& key,
                  const mpz_class& modulus, std::uint8_t retry = 0);

inline constexpr int kPrfNonzeroRetryCap = 256;

// Resamples with retry counter 1, 2, ... until the output is nonzero.
mpz_class prf_nonzero(PrfLabel label, std::uint64_t index, const PrfKey& key,
                      const FieldContext& ctx);

// Retry loop shared by prf_nonzero; `sample(retry)` returns the candidate for
// the given retry counter. Exposed so tests can force a zero first sample.
mpz_class first_nonzero(const std::function<mpz_class(std::uint8_t)>& sample);

// Raw keystream of `length` bytes (HMAC blocks under kKeystream).
Bytes prf_keystream(const PrfKey& key, std::size_t length);

}  // namespace mhtlp

#endif  // MHTLP_PRF_HPP_
