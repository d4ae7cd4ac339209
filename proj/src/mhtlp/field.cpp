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

#include "mhtlp/field.hpp"

#include "mhtlp/error.hpp"
#include "mhtlp/primes.hpp"

namespace mhtlp {

FieldContext FieldContext::create(const mpz_class& p, std::size_t tbar,
                                  ByteView seed, FieldOptions options) {
  if (tbar < 3) throw Error(ErrorCode::kInvalidArgument, "tbar must be at least 3");
  if (!options.allow_small_prime && bit_length(p) < options.min_prime_bits) {
    throw Error(ErrorCode::kInvalidArgument,
                "prime has " + std::to_string(bit_length(p)) +
                    " bits, below the configured minimum of " +
                    std::to_string(options.min_prime_bits));
  }
  if (!is_probable_prime(p)) throw Error(ErrorCode::kInvalidArgument, "modulus is not prime");

  FieldContext ctx;
  ctx.p_ = p;
  ctx.options_ = options;
  ctx.seed_.assign(seed.begin(), seed.end());
  const mpz_class two64 = mpz_class(1) << 64;
  ctx.u_bound_ = (p > two64 + tbar + 1) ? two64 : mpz_class(p / 2);
  if (ctx.u_bound_ + tbar >= p) {
    throw Error(ErrorCode::kInvalidArgument,
                "prime too small to host coordinates outside the message universe");
  }
  ctx.xs_.reserve(tbar);
  for (std::size_t i = 0; i < tbar; ++i) ctx.xs_.push_back(ctx.u_bound_ + 1 + i);
  return ctx;
}

FieldContext FieldContext::generate(std::size_t bits, std::size_t tbar, Rng& rng,
                                    FieldOptions options) {
  const mpz_class p = random_prime(bits, rng);
  return create(p, tbar, {}, options);
}

FieldContext FieldContext::with_tbar(std::size_t tbar) const {
  return create(p_, tbar, seed_, options_);
}

bool FieldContext::is_coordinate(const mpz_class& v) const {
  for (const auto& x : xs_) {
    if (x == v) return true;
  }
  return false;
}

mpz_class FieldContext::reduce(const mpz_class& a) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
  return r;
}

mpz_class FieldContext::add(const mpz_class& a, const mpz_class& b) const {
  mpz_class r = a + b;
  if (r >= p_) r -= p_;
  return r < 0 || r >= p_ ? reduce(r) : r;
}

mpz_class FieldContext::sub(const mpz_class& a, const mpz_class& b) const {
  mpz_class r = a - b;
  if (r < 0) r += p_;
  return r < 0 || r >= p_ ? reduce(r) : r;
}

mpz_class FieldContext::mul(const mpz_class& a, const mpz_class& b) const {
  return reduce(a * b);
}

mpz_class FieldContext::neg(const mpz_class& a) const { return sub(0, a); }

mpz_class FieldContext::inv(const mpz_class& a) const {
  mpz_class r;
  const mpz_class reduced = reduce(a);
  if (reduced == 0 || mpz_invert(r.get_mpz_t(), reduced.get_mpz_t(), p_.get_mpz_t()) == 0)
    throw Error(ErrorCode::kInvalidArgument, "zero has no inverse");
  return r;
}

mpz_class FieldContext::pow(const mpz_class& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), -e);
  mpz_class r;
  const mpz_class base = reduce(a);
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
  return r;
}

}  // namespace mhtlp
