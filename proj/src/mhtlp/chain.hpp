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

#ifndef MHTLP_CHAIN_HPP_
#define MHTLP_CHAIN_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <stop_token>
#include <variant>
#include <vector>

#include "mhtlp/commitment.hpp"
#include "mhtlp/field.hpp"
#include "mhtlp/prf.hpp"
#include "mhtlp/rng.hpp"
#include "mhtlp/rsa.hpp"

namespace mhtlp {

/// Release schedule of a chain. `intervals[j]` is the gap (in seconds)
/// between the release of puzzle j-1 and puzzle j; T_j = maxss * intervals[j].
struct TimeSchedule {
  std::vector<std::uint64_t> intervals;
  std::uint64_t maxss = 1;

  std::size_t size() const { return intervals.size(); }
  std::uint64_t squarings(std::size_t j) const { return intervals.at(j) * maxss; }
  // Cumulative release time of puzzle j (0-based), i.e. the sum of the first j+1 gaps.
  std::uint64_t cumulative(std::size_t j) const;
  // Throws kInvalidArgument when empty or an interval is zero.
  void validate() const;

  friend bool operator==(const TimeSchedule&, const TimeSchedule&) = default;
};

/// Public half of a client's chained puzzles.
struct PuzzleChain {
  mpz_class modulus;
  mpz_class first_base;
  TimeSchedule schedule;
  std::vector<std::vector<mpz_class>> coords;  // [puzzle][coordinate]
  std::vector<Commitment> commitments;

  std::size_t size() const { return coords.size(); }
  friend bool operator==(const PuzzleChain&, const PuzzleChain&) = default;
};

struct MasterKeyChain {
  std::vector<mpz_class> keys;
};

struct GeneratedChain {
  PuzzleChain chain;
  MasterKeyChain master_keys;
};

// Per-puzzle blinding derived from a master key: k = PRF(1, mk), s = PRF(2, mk),
// z_i = PRF(i, k), w_i = PRF(i, s) (nonzero), for i = 1..tbar.
struct Blinding {
  std::vector<mpz_class> additive;        // z
  std::vector<mpz_class> multiplicative;  // w
};
Blinding derive_blinding(const mpz_class& master_key, const FieldContext& ctx);

// r_j = PRF(j||0, mk_{j-1}) mod N, resampled until it is a unit. j is 1-based.
mpz_class derive_next_base(const mpz_class& previous_key, std::uint64_t j, const mpz_class& n);

GeneratedChain gen_puzzle(const std::vector<mpz_class>& messages, const RsaKeypair& keys,
                          const FieldContext& ctx, const TimeSchedule& schedule, Rng& rng);

struct RootOpening {
  mpz_class root;
  mpz_class tk;
  friend bool operator==(const RootOpening&, const RootOpening&) = default;
};

// A master key proves a chain solution; a root opening proves an evaluation.
using ProofElement = std::variant<mpz_class, RootOpening>;

struct Solution {
  mpz_class value;
  std::uint64_t index = 0;  // 1-based puzzle index; 0 for evaluation results
  friend bool operator==(const Solution&, const Solution&) = default;
};

struct SolutionBundle {
  std::vector<Solution> solutions;
  std::vector<ProofElement> proofs;
  friend bool operator==(const SolutionBundle&, const SolutionBundle&) = default;
};

struct ChainSolveResult {
  SolutionBundle bundle;
  std::vector<std::uint64_t> squarings;  // per solved link
  std::uint64_t total_squarings = 0;     // includes a cancelled partial link
  bool complete = false;
};

// Unblinds one puzzle's coordinates with its master key and returns the
// constant term of the interpolated polynomial.
mpz_class decode_puzzle(const std::vector<mpz_class>& coords, const mpz_class& master_key,
                        const FieldContext& ctx);

// Solves the chain link by link. On cancellation the completed prefix is
// returned with complete = false.
ChainSolveResult solve_chain(const PuzzleChain& chain, const FieldContext& ctx,
                             std::stop_token cancel = {});

bool verify_client_solution(const mpz_class& message, const mpz_class& master_key,
                            const Commitment& com);

// Throws kMalformed when the chain's shape does not match ctx.
void validate_chain(const PuzzleChain& chain, const FieldContext& ctx);

}  // namespace mhtlp

#endif  // MHTLP_CHAIN_HPP_
