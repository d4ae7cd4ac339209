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

#ifndef MHTLP_FIELD_HPP_
#define MHTLP_FIELD_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "mhtlp/bytes.hpp"
#include "mhtlp/rng.hpp"

namespace mhtlp {

inline constexpr std::size_t kDefaultMinPrimeBits = 128;

struct FieldOptions {
  std::size_t min_prime_bits = kDefaultMinPrimeBits;
  // Permits primes below `min_prime_bits`. Unsafe outside of tests.
  bool allow_small_prime = false;
};

/// Prime field F_p together with the public evaluation coordinates.
///
/// Messages live in U = [0, universe_bound()). The coordinates are the
/// consecutive values universe_bound()+1, ..., universe_bound()+tbar, which
/// keeps them nonzero, distinct and outside U. For p above 2^64 + tbar + 1 the
/// bound is 2^64; smaller test primes use floor(p/2) instead.
class FieldContext {
 public:
  static FieldContext create(const mpz_class& p, std::size_t tbar,
                             ByteView seed = {}, FieldOptions options = {});
  // Samples a fresh prime of exactly `bits` bits.
  static FieldContext generate(std::size_t bits, std::size_t tbar, Rng& rng,
                               FieldOptions options = {});

  const mpz_class& p() const noexcept { return p_; }
  const std::vector<mpz_class>& xs() const noexcept { return xs_; }
  std::size_t tbar() const noexcept { return xs_.size(); }
  std::size_t tddot() const noexcept { return xs_.size() - 2; }
  const Bytes& seed() const noexcept { return seed_; }
  const mpz_class& universe_bound() const noexcept { return u_bound_; }
  bool in_universe(const mpz_class& m) const { return m >= 0 && m < u_bound_; }
  bool is_coordinate(const mpz_class& v) const;

  // Same prime, different coordinate count (MH-TLP vs MMH-TLP widths).
  FieldContext with_tbar(std::size_t tbar) const;

  mpz_class reduce(const mpz_class& a) const;
  mpz_class add(const mpz_class& a, const mpz_class& b) const;
  mpz_class sub(const mpz_class& a, const mpz_class& b) const;
  mpz_class mul(const mpz_class& a, const mpz_class& b) const;
  mpz_class neg(const mpz_class& a) const;
  // Throws kInvalidArgument on zero.
  mpz_class inv(const mpz_class& a) const;
  mpz_class pow(const mpz_class& a, const mpz_class& e) const;
  bool is_reduced(const mpz_class& a) const { return a >= 0 && a < p_; }

  friend bool operator==(const FieldContext& a, const FieldContext& b) {
    return a.p_ == b.p_ && a.xs_ == b.xs_;
  }

 private:
  FieldContext() = default;

  mpz_class p_;
  mpz_class u_bound_;
  std::vector<mpz_class> xs_;
  Bytes seed_;
  FieldOptions options_;
};

}  // namespace mhtlp

#endif  // MHTLP_FIELD_HPP_
