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

#ifndef MHTLP_RSA_HPP_
#define MHTLP_RSA_HPP_

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>

#include "mhtlp/rng.hpp"

namespace mhtlp {

inline constexpr std::size_t kMinRsaPrimeBits = 32;
inline constexpr std::size_t kProductionRsaPrimeBits = 2048;

/// Client RSA parameters. Only `n` is public.
struct RsaKeypair {
  mpz_class n;
  mpz_class phi;
  std::array<mpz_class, 2> primes;

  friend bool operator==(const RsaKeypair&, const RsaKeypair&) = default;
};

// Two distinct `bits`-bit primes with the top two bits set.
RsaKeypair rsa_keygen(std::size_t bits, Rng& rng);

// Throws kInvalidArgument when the fields are inconsistent.
void validate_keypair(const RsaKeypair& keys);

// Uniform element of Z_N^* (nonzero, coprime to N).
mpz_class sample_unit(const mpz_class& n, Rng& rng);

// base^(2^T) mod N using the exponent reduction 2^T mod phi(N).
mpz_class trapdoor_power(const mpz_class& base, std::uint64_t squarings, const RsaKeypair& keys);

}  // namespace mhtlp

#endif  // MHTLP_RSA_HPP_
