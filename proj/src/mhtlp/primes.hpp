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

#ifndef MHTLP_PRIMES_HPP_
#define MHTLP_PRIMES_HPP_

#include <gmpxx.h>

#include <cstddef>

#include "mhtlp/rng.hpp"

namespace mhtlp {

inline constexpr int kMillerRabinRounds = 64;

// Miller-Rabin with random bases drawn from `rng`, preceded by trial division.
bool is_probable_prime(const mpz_class& n, Rng& rng,
                       int rounds = kMillerRabinRounds);

// Same test with bases derived deterministically from n itself.
bool is_probable_prime(const mpz_class& n, int rounds = kMillerRabinRounds);

// Random prime of exactly `bits` bits with the top two bits set.
mpz_class random_prime(std::size_t bits, Rng& rng);

}  // namespace mhtlp

#endif  // MHTLP_PRIMES_HPP_
