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

#include "mhtlp/baseline_tlp.hpp"

#include "mhtlp/error.hpp"
#include "mhtlp/prf.hpp"

namespace mhtlp {
namespace {

Bytes apply_keystream(ByteView data, const mpz_class& key) {
  const Bytes stream = prf_keystream(PrfKey::from_element(key), data.size());
  Bytes out(data.begin(), data.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= stream[i];
  return out;
}

}  // namespace

BaselinePuzzle baseline_tlp_generate(ByteView message, std::uint64_t squarings,
                                     const RsaKeypair& keys, Rng& rng) {
  BaselinePuzzle puzzle;
  puzzle.n = keys.n;
  puzzle.base = sample_unit(keys.n, rng);
  puzzle.squarings = squarings;
  const mpz_class k = rng.below(keys.n);
  puzzle.ciphertext = apply_keystream(message, k);
  puzzle.masked_key = (k + trapdoor_power(puzzle.base, squarings, keys)) % keys.n;
  return puzzle;
}

BaselinePuzzle baseline_tlp_generate(ByteView message, std::uint64_t delta, std::uint64_t maxss,
                                     const RsaKeypair& keys, Rng& rng) {
  return baseline_tlp_generate(message, delta * maxss, keys, rng);
}

BaselineSolution baseline_tlp_solve(const BaselinePuzzle& puzzle, std::stop_token cancel) {
  if (puzzle.n < 2 || puzzle.masked_key < 0 || puzzle.masked_key >= puzzle.n)
    throw Error(ErrorCode::kMalformed, "malformed baseline puzzle");
  BaselineSolution out;
  out.report = sequential_square(puzzle.base, puzzle.squarings, puzzle.n, cancel);
  mpz_class k = puzzle.masked_key - out.report.result;
  mpz_mod(k.get_mpz_t(), k.get_mpz_t(), puzzle.n.get_mpz_t());
  out.message = apply_keystream(puzzle.ciphertext, k);
  return out;
}

}  // namespace mhtlp
