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

#include "mhtlp/rsa.hpp"

#include "mhtlp/error.hpp"
#include "mhtlp/primes.hpp"

namespace mhtlp {

RsaKeypair rsa_keygen(std::size_t bits, Rng& rng) {
  if (bits < kMinRsaPrimeBits)
    throw Error(ErrorCode::kInvalidArgument, "RSA prime size below 32 bits");
  RsaKeypair keys;
  keys.primes[0] = random_prime(bits, rng);
  do {
    keys.primes[1] = random_prime(bits, rng);
  } while (keys.primes[1] == keys.primes[0]);
  keys.n = keys.primes[0] * keys.primes[1];
  keys.phi = (keys.primes[0] - 1) * (keys.primes[1] - 1);
  return keys;
}

void validate_keypair(const RsaKeypair& keys) {
  if (keys.primes[0] < 2 || keys.primes[1] < 2 || keys.primes[0] == keys.primes[1] ||
      keys.n != keys.primes[0] * keys.primes[1] ||
      keys.phi != (keys.primes[0] - 1) * (keys.primes[1] - 1))
    throw Error(ErrorCode::kInvalidArgument, "inconsistent RSA keypair");
}

mpz_class sample_unit(const mpz_class& n, Rng& rng) {
  for (;;) {
    mpz_class r = rng.between(1, n);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    if (g == 1) return r;
  }
}

mpz_class trapdoor_power(const mpz_class& base, std::uint64_t squarings, const RsaKeypair& keys) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), base.get_mpz_t(), keys.n.get_mpz_t());
  if (base < 1 || base >= keys.n || g != 1)
    throw Error(ErrorCode::kInvalidArgument, "base must be a unit in [1, N)");
  mpz_class exponent;
  const mpz_class two = 2;
  mpz_powm_ui(exponent.get_mpz_t(), two.get_mpz_t(), squarings, keys.phi.get_mpz_t());
  mpz_class out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), keys.n.get_mpz_t());
  return out;
}

}  // namespace mhtlp
