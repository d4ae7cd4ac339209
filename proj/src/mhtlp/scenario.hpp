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

#ifndef MHTLP_SCENARIO_HPP_
#define MHTLP_SCENARIO_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mhtlp/board.hpp"
#include "mhtlp/ole.hpp"

namespace mhtlp {

struct ScenarioClient {
  std::vector<mpz_class> messages;
  std::vector<std::uint64_t> intervals;
  // Single-client runs combine every puzzle with these coefficients.
  std::vector<mpz_class> coefficients;
  // Multi-client runs combine puzzle `puzzle_id` (1-based) scaled by `coefficient`.
  std::size_t puzzle_id = 1;
  mpz_class coefficient = 1;
};

/// One deliberate deviation injected into a run.
///
/// Targets: "g" (add delta to g[coordinate]), "ole" (perturb an OLE+ slot of
/// session (participant, coordinate)), "grant-base" (add delta to the base of
/// grant number `participant`), "proof-root" / "proof-tk" (perturb the opening
/// handed to the verifier), "message" (perturb the claimed combination) and
/// "coord" (perturb coordinate `coordinate` of puzzle `puzzle` in client
/// `participant`'s published chain).
struct ScenarioFault {
  std::string target;
  std::size_t participant = 0;
  std::size_t coordinate = 0;
  std::size_t puzzle = 1;
  mpz_class delta = 1;
  OleFaultSlot slot = OleFaultSlot::kSecondB;
  bool verifying = false;
};

struct Scenario {
  std::uint64_t seed = 0;
  std::size_t prime_bits = 128;
  bool unsafe_small_prime = false;
  std::size_t rsa_bits = 64;  // bits per RSA prime
  bool deterministic_rsa = true;
  std::uint64_t maxss = 1;
  std::uint64_t delay = 0;
  std::size_t tddot = 1;
  std::size_t threshold = 1;
  Bytes rhat;  // derived from the seed when empty
  std::vector<ScenarioClient> clients;
  std::optional<ScenarioFault> fault;
};

// Integers may be given as JSON numbers or hex strings.
Scenario parse_scenario(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);

struct Verdict {
  std::string check;
  std::string result;  // "accept", "reject", "match", "mismatch", "abort", ...
  bool passed = false;

  std::string line() const { return check + ": " + result; }
};

struct ScenarioResult {
  nlohmann::json transcript;
  std::vector<Verdict> verdicts;
  bool all_passed = false;
};

// keygen -> puzzle-gen -> evaluate -> solve -> verify. One client routes
// through the single-client scheme, two or more through the multi-client one.
// Every phase error is recorded as a verdict tagged with its phase.
ScenarioResult run_scenario(const Scenario& scenario);

}  // namespace mhtlp

#endif  // MHTLP_SCENARIO_HPP_
