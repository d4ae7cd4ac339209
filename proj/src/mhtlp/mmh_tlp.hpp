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

#ifndef MHTLP_MMH_TLP_HPP_
#define MHTLP_MMH_TLP_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stop_token>
#include <vector>

#include "mhtlp/mh_tlp.hpp"

namespace mhtlp {

/// Leader set I for a multi-client evaluation. Clients are indexed 0..n-1.
struct LeaderConfig {
  std::size_t n = 0;
  std::size_t tddot = 0;
  std::size_t threshold = 0;  // published metadata only
  Bytes rhat;
  std::vector<std::size_t> leaders;  // in selection order

  bool is_leader(std::size_t client) const;
  friend bool operator==(const LeaderConfig&, const LeaderConfig&) = default;
};

// int(SHA-256(8-byte BE j || rhat [|| counter])) mod n; the counter byte is
// appended only when nonzero.
std::size_t raw_leader_index(std::uint64_t j, ByteView rhat, std::uint8_t counter, std::size_t n);

// Leader j (1-based) takes raw_leader_index(j, rhat, 0, n); on collision with
// an earlier leader the counter is bumped until a fresh index appears.
LeaderConfig select_leaders(std::size_t n, std::size_t tddot, std::size_t threshold,
                            ByteView rhat);

struct McClientInput {
  const PuzzleChain* chain = nullptr;
  const MasterKeyChain* master_keys = nullptr;
  const RsaKeypair* keys = nullptr;
  std::size_t puzzle_id = 1;  // 1-based index of the selected puzzle
  mpz_class coeff;
};

// gamma'_{i,u} = (x_i - root_u) * w'_{i,u}, broadcast by leader u.
struct RootShare {
  std::size_t leader = 0;
  std::vector<mpz_class> gamma_prime;
};

// Zero-sum key sent from a leader to another client.
struct KeyEnvelope {
  std::size_t from = 0;
  std::size_t to = 0;
  Bytes key;
};

struct LeaderSecrets {
  mpz_class tk;
  mpz_class root;
};

struct McEvaluation {
  EvalPuzzle puzzle;
  std::map<std::size_t, EvalGrant> grants;  // keyed by leader index
  std::vector<RootShare> shares;
  std::vector<KeyEnvelope> envelopes;
  std::map<std::size_t, LeaderSecrets> leader_secrets;
  std::vector<mpz_class> v;                     // identical for every client
  std::vector<std::vector<mpz_class>> y;        // [client][coordinate]
  std::vector<std::vector<mpz_class>> outputs;  // d, [client][coordinate]
  std::vector<OleTranscript> transcripts;       // client-major order
};

McEvaluation evaluate_mc(const std::vector<McClientInput>& clients, const LeaderConfig& config,
                         const FieldContext& ctx, std::uint64_t delay, std::uint64_t maxss,
                         Rng& rng, const EvalOptions& options = {});

// Grants in leader-selection order.
std::vector<EvalGrant> ordered_grants(const McEvaluation& eval, const LeaderConfig& config);

EvalSolveResult solve_mc(const EvalPuzzle& puzzle, const std::vector<EvalGrant>& grants,
                         const FieldContext& ctx, std::stop_token cancel = {});

VerifyOutcome verify_mc(const mpz_class& m, const std::vector<RootOpening>& openings,
                        const EvalPuzzle& puzzle, const std::vector<EvalGrant>& grants,
                        const FieldContext& ctx);

}  // namespace mhtlp

#endif  // MHTLP_MMH_TLP_HPP_
