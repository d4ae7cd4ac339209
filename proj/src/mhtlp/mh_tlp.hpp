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

#ifndef MHTLP_MH_TLP_HPP_
#define MHTLP_MH_TLP_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "mhtlp/chain.hpp"
#include "mhtlp/ole.hpp"
#include "mhtlp/poly.hpp"
#include "mhtlp/squaring.hpp"

namespace mhtlp {

/// Public parameters of one evaluation puzzle: tk = h^(2^Y) mod N and a
/// commitment to (root, tk).
struct EvalGrant {
  mpz_class modulus;
  mpz_class base;
  Commitment commitment;
  std::uint64_t squarings = 0;

  friend bool operator==(const EvalGrant&, const EvalGrant&) = default;
};

struct EvalSecrets {
  mpz_class tk;
  mpz_class root;
  std::vector<mpz_class> gamma;             // gamma_i = x_i - root
  std::vector<Bytes> zero_sum_keys;         // f_2 .. f_z
  std::vector<std::vector<mpz_class>> y;    // [puzzle][coordinate]
};

struct EvalPuzzle {
  std::vector<mpz_class> g;
  friend bool operator==(const EvalPuzzle&, const EvalPuzzle&) = default;
};

// Perturbs one OLE+ session of an evaluation, addressed by
// (participant, coordinate). For single-client evaluations the participant
// is the 0-based puzzle index; for multi-client ones it is the client index.
struct OleFaultTarget {
  std::size_t participant = 0;
  std::size_t coordinate = 0;
  OleFault fault;
};

struct EvalOptions {
  std::optional<OleFaultTarget> ole_fault;
  // With verification on, a faulty OLE+ session aborts the evaluation with
  // kMisbehavior; otherwise the perturbation silently reaches g.
  bool verifying = true;
};

struct ScEvaluation {
  EvalPuzzle puzzle;
  EvalGrant grant;
  EvalSecrets secrets;
  std::vector<std::vector<mpz_class>> outputs;  // d, [puzzle][coordinate]
  std::vector<OleTranscript> transcripts;       // puzzle-major order
};

// Samples a root that is nonzero, not a coordinate and not in `taken`.
mpz_class sample_root(const FieldContext& ctx, Rng& rng, const std::vector<mpz_class>& taken = {});

// Single-client linear combination of every puzzle in the chain with
// coefficients `coeffs`; the result unlocks after Y = delay * maxss squarings.
ScEvaluation evaluate_sc(const PuzzleChain& chain, const MasterKeyChain& master_keys,
                         const RsaKeypair& keys, const std::vector<mpz_class>& coeffs,
                         const FieldContext& ctx, std::uint64_t delay, Rng& rng,
                         const EvalOptions& options = {});

// Unblinds g with the temporary keys of every contributing grant:
// theta_i = (prod w'_i)^-1 (g_i - sum z'_i).
DensePoly unblind_theta(const EvalPuzzle& puzzle, const std::vector<mpz_class>& temporary_keys,
                        const FieldContext& ctx);

struct EvalSolveResult {
  SolutionBundle bundle;
  std::vector<SquaringReport> reports;
  DensePoly theta;
};

// Recovers every tk by squaring, interpolates theta and identifies one valid
// root per grant. `max_degree` is 2 for single-client evaluations and
// tddot + 1 for multi-client ones.
EvalSolveResult solve_combination(const EvalPuzzle& puzzle, const std::vector<EvalGrant>& grants,
                                  const FieldContext& ctx, int max_degree,
                                  std::stop_token cancel = {});

EvalSolveResult solve_eval_sc(const EvalPuzzle& puzzle, const EvalGrant& grant,
                              const FieldContext& ctx, std::stop_token cancel = {});

struct VerifyOutcome {
  bool accepted = false;
  std::string reason;  // empty when accepted
  explicit operator bool() const { return accepted; }
};

VerifyOutcome verify_combination(const mpz_class& m, const std::vector<RootOpening>& openings,
                                 const EvalPuzzle& puzzle, const std::vector<EvalGrant>& grants,
                                 const FieldContext& ctx, int max_degree);

VerifyOutcome verify_eval_sc(const mpz_class& m, const RootOpening& opening,
                             const EvalPuzzle& puzzle, const EvalGrant& grant,
                             const FieldContext& ctx);

}  // namespace mhtlp

#endif  // MHTLP_MH_TLP_HPP_
