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

#ifndef MHTLP_TESTS_FIXTURES_HPP_
#define MHTLP_TESTS_FIXTURES_HPP_

#include <vector>

#include "mhtlp/chain.hpp"
#include "mhtlp/field.hpp"
#include "mhtlp/rng.hpp"
#include "mhtlp/rsa.hpp"

namespace fixture {

struct Client {
  mhtlp::RsaKeypair keys;
  mhtlp::GeneratedChain generated;
  std::vector<mpz_class> messages;
};

inline Client make_client(const std::vector<mpz_class>& messages,
                          const std::vector<std::uint64_t>& intervals, const mhtlp::FieldContext& ctx,
                          mhtlp::Rng& rng, std::size_t rsa_prime_bits = 64, std::uint64_t maxss = 1) {
  Client c;
  c.keys = mhtlp::rsa_keygen(rsa_prime_bits, rng);
  c.messages = messages;
  c.generated = mhtlp::gen_puzzle(messages, c.keys, ctx, mhtlp::TimeSchedule{intervals, maxss}, rng);
  return c;
}

// Messages drawn uniformly from the universe.
inline std::vector<mpz_class> random_messages(std::size_t count, const mhtlp::FieldContext& ctx,
                                              mhtlp::Rng& rng) {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(rng.below(ctx.universe_bound()));
  return out;
}

inline std::vector<mpz_class> random_coeffs(std::size_t count, const mhtlp::FieldContext& ctx,
                                            mhtlp::Rng& rng) {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(rng.below(ctx.p()));
  return out;
}

}  // namespace fixture

#endif  // MHTLP_TESTS_FIXTURES_HPP_
