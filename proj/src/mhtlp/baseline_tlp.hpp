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

#ifndef MHTLP_BASELINE_TLP_HPP_
#define MHTLP_BASELINE_TLP_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <stop_token>

#include "mhtlp/bytes.hpp"
#include "mhtlp/rsa.hpp"
#include "mhtlp/squaring.hpp"

namespace mhtlp {

/// Classic single-instance RSA time-lock puzzle, kept as a reference point
/// for squaring counts. The message is XORed with a keystream under a random
/// key k, and k is hidden as o2 = k + r^(2^T) mod N.
struct BaselinePuzzle {
  mpz_class n;
  mpz_class base;
  std::uint64_t squarings = 0;
  Bytes ciphertext;
  mpz_class masked_key;
};

struct BaselineSolution {
  Bytes message;
  SquaringReport report;
};

BaselinePuzzle baseline_tlp_generate(ByteView message, std::uint64_t squarings,
                                     const RsaKeypair& keys, Rng& rng);
// Convenience form with T = maxss * delta.
BaselinePuzzle baseline_tlp_generate(ByteView message, std::uint64_t delta, std::uint64_t maxss,
                                     const RsaKeypair& keys, Rng& rng);

BaselineSolution baseline_tlp_solve(const BaselinePuzzle& puzzle, std::stop_token cancel = {});

}  // namespace mhtlp

#endif  // MHTLP_BASELINE_TLP_HPP_
