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

#ifndef MHTLP_CODEC_HPP_
#define MHTLP_CODEC_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "mhtlp/baseline_tlp.hpp"
#include "mhtlp/chain.hpp"
#include "mhtlp/field.hpp"
#include "mhtlp/mh_tlp.hpp"
#include "mhtlp/mmh_tlp.hpp"
#include "mhtlp/poly.hpp"
#include "mhtlp/rsa.hpp"

// Canonical JSON for every public artifact. Integers are lowercase hex
// strings without leading zeros, objects have sorted keys, and decoders throw
// Error(kMalformed) on any shape mismatch.
namespace mhtlp::codec {

using Json = nlohmann::json;

Json encode_int(const mpz_class& v);
mpz_class decode_int(const Json& j);
Json encode_ints(const std::vector<mpz_class>& v);
std::vector<mpz_class> decode_ints(const Json& j);
Json encode_bytes(ByteView b);
Bytes decode_bytes(const Json& j);

Json encode(const FieldContext& ctx);
FieldContext decode_field(const Json& j);

Json encode(const DensePoly& poly);
DensePoly decode_poly(const Json& j);

Json encode(const RsaKeypair& keys);
RsaKeypair decode_keypair(const Json& j);

Json encode(const Commitment& com);
Commitment decode_commitment(const Json& j);

Json encode(const TimeSchedule& s);
TimeSchedule decode_schedule(const Json& j);

Json encode(const PuzzleChain& chain);
PuzzleChain decode_chain(const Json& j);

Json encode(const MasterKeyChain& mks);
MasterKeyChain decode_master_keys(const Json& j);

Json encode(const EvalGrant& grant);
EvalGrant decode_grant(const Json& j);

Json encode(const EvalPuzzle& puzzle);
EvalPuzzle decode_eval_puzzle(const Json& j);

Json encode(const SolutionBundle& bundle);
SolutionBundle decode_bundle(const Json& j);

Json encode(const LeaderConfig& cfg);
LeaderConfig decode_leaders(const Json& j);

Json encode(const RootShare& share);
Json encode(const KeyEnvelope& env);
Json encode(const OleTranscript& transcript);
Json encode(const BaselinePuzzle& puzzle);
BaselinePuzzle decode_baseline(const Json& j);

// Grants keyed by decimal leader index.
Json encode_grants(const std::map<std::size_t, EvalGrant>& grants);
std::map<std::size_t, EvalGrant> decode_grants(const Json& j);

std::string dump(const Json& j);
Json parse(const std::string& text);

}  // namespace mhtlp::codec

#endif  // MHTLP_CODEC_HPP_
