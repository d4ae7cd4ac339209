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

#ifndef MHTLP_RNG_HPP_
#define MHTLP_RNG_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>

#include "mhtlp/bytes.hpp"

namespace mhtlp {

/// Source of protocol coins.
///
/// A seeded instance expands its seed with SHA-256 in counter mode, so a
/// single seed fixes every random choice of a run. The system instance reads
/// the operating system CSPRNG through OpenSSL.
class Rng {
 public:
  static Rng from_seed(ByteView seed);
  static Rng from_seed(std::uint64_t seed);
  static Rng system();

  void fill(std::span<std::uint8_t> out);
  Bytes bytes(std::size_t count);
  std::uint64_t next_u64();

  // Uniform in [0, bound) by rejection sampling; bound must be positive.
  mpz_class below(const mpz_class& bound);
  // Uniform in [lo, hi).
  mpz_class between(const mpz_class& lo, const mpz_class& hi);
  // Uniform integer with exactly `bits` random bits (may have leading zeros).
  mpz_class random_bits(std::size_t bits);

  // Independent child stream, deterministic for seeded parents.
  Rng fork(std::uint64_t label);

  bool deterministic() const noexcept { return !system_; }

 private:
  Rng() = default;
  void refill();

  bool system_ = false;
  std::array<std::uint8_t, 32> key_{};
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t used_ = 32;
};

}  // namespace mhtlp

#endif  // MHTLP_RNG_HPP_
