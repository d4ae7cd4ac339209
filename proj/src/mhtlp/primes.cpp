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

#include "mhtlp/primes.hpp"

#include <array>

#include "mhtlp/error.hpp"

namespace mhtlp {
namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

bool witness_passes(const mpz_class& n, const mpz_class& d, unsigned s,
                    const mpz_class& a) {
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const mpz_class n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_probable_prime(const mpz_class& n, Rng& rng, int rounds) {
  if (n < 2) return false;
  for (unsigned sp : kSmallPrimes) {
    if (n == sp) return true;
    if (n % sp == 0) return false;
  }
  mpz_class d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (int i = 0; i < rounds; ++i) {
    const mpz_class a = rng.between(2, n - 1);
    if (!witness_passes(n, d, s, a)) return false;
  }
  return true;
}

bool is_probable_prime(const mpz_class& n, int rounds) {
  Bytes seed = {'m', 'r'};
  const Bytes encoded = to_bytes(n < 0 ? mpz_class(0) : n);
  seed.insert(seed.end(), encoded.begin(), encoded.end());
  Rng rng = Rng::from_seed(seed);
  return is_probable_prime(n, rng, rounds);
}

mpz_class random_prime(std::size_t bits, Rng& rng) {
  if (bits < 8) throw Error(ErrorCode::kInvalidArgument, "prime size below 8 bits");
  for (;;) {
    mpz_class candidate = rng.random_bits(bits);
    mpz_setbit(candidate.get_mpz_t(), bits - 1);
    mpz_setbit(candidate.get_mpz_t(), bits - 2);
    mpz_setbit(candidate.get_mpz_t(), 0);
    if (is_probable_prime(candidate, rng)) return candidate;
  }
}

}  // namespace mhtlp
