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

#include "mhtlp/codec.hpp"

#include "mhtlp/error.hpp"

namespace mhtlp::codec {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformed, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) malformed(std::string("expected object holding '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

std::uint64_t decode_u64(const Json& j) {
  if (!j.is_number_unsigned()) malformed("expected unsigned integer");
  return j.get<std::uint64_t>();
}

const Json& as_array(const Json& j) {
  if (!j.is_array()) malformed("expected array");
  return j;
}

}  // namespace

Json encode_int(const mpz_class& v) { return to_hex(v); }

mpz_class decode_int(const Json& j) {
  if (!j.is_string()) malformed("expected hex string");
  const auto& s = j.get_ref<const std::string&>();
  for (char c : s)
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) malformed("non-canonical hex '" + s + "'");
  if (s.size() > 1 && s[0] == '0') malformed("hex with leading zero '" + s + "'");
  return from_hex(s);
}

Json encode_ints(const std::vector<mpz_class>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode_int(x));
  return out;
}

std::vector<mpz_class> decode_ints(const Json& j) {
  std::vector<mpz_class> out;
  for (const auto& x : as_array(j)) out.push_back(decode_int(x));
  return out;
}

Json encode_bytes(ByteView b) { return bytes_to_hex(b); }

Bytes decode_bytes(const Json& j) {
  if (!j.is_string()) malformed("expected byte hex string");
  return bytes_from_hex(j.get<std::string>());
}

Json encode(const FieldContext& ctx) {
  return {{"p", encode_int(ctx.p())},
          {"tbar", ctx.tbar()},
          {"xs", encode_ints(ctx.xs())},
          {"seed", encode_bytes(ctx.seed())}};
}

FieldContext decode_field(const Json& j) {
  const mpz_class p = decode_int(field(j, "p"));
  const std::uint64_t tbar = decode_u64(field(j, "tbar"));
  FieldOptions options;
  // Artifacts may carry test-scale primes; production callers gate this at setup.
  options.allow_small_prime = true;
  try {
    FieldContext ctx = FieldContext::create(p, tbar, decode_bytes(field(j, "seed")), options);
    if (decode_ints(field(j, "xs")) != ctx.xs()) malformed("field coordinates do not match rule");
    return ctx;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformed) throw;
    malformed(std::string("invalid field context: ") + e.what());
  }
}

Json encode(const DensePoly& poly) { return encode_ints(poly.coeffs); }

DensePoly decode_poly(const Json& j) {
  auto coeffs = decode_ints(j);
  if (!coeffs.empty() && coeffs.back() == 0) malformed("polynomial has zero leading coefficient");
  return DensePoly(std::move(coeffs));
}

Json encode(const RsaKeypair& keys) {
  return {{"n", encode_int(keys.n)},
          {"phi", encode_int(keys.phi)},
          {"primes", encode_ints({keys.primes[0], keys.primes[1]})}};
}

RsaKeypair decode_keypair(const Json& j) {
  RsaKeypair keys;
  keys.n = decode_int(field(j, "n"));
  keys.phi = decode_int(field(j, "phi"));
  const auto primes = decode_ints(field(j, "primes"));
  if (primes.size() != 2) malformed("keypair needs two primes");
  keys.primes = {primes[0], primes[1]};
  try {
    validate_keypair(keys);
  } catch (const Error& e) {
    malformed(e.what());
  }
  return keys;
}

Json encode(const Commitment& com) { return encode_bytes(com.digest); }

Commitment decode_commitment(const Json& j) {
  const Bytes raw = decode_bytes(j);
  if (raw.size() != 32) malformed("commitment digest must be 32 bytes");
  Commitment com;
  std::copy(raw.begin(), raw.end(), com.digest.begin());
  return com;
}

Json encode(const TimeSchedule& s) { return {{"intervals", s.intervals}, {"maxss", s.maxss}}; }

TimeSchedule decode_schedule(const Json& j) {
  TimeSchedule s;
  for (const auto& d : as_array(field(j, "intervals"))) s.intervals.push_back(decode_u64(d));
  s.maxss = decode_u64(field(j, "maxss"));
  return s;
}

Json encode(const PuzzleChain& chain) {
  Json coords = Json::array();
  for (const auto& row : chain.coords) coords.push_back(encode_ints(row));
  Json coms = Json::array();
  for (const auto& c : chain.commitments) coms.push_back(encode(c));
  return {{"modulus", encode_int(chain.modulus)},
          {"first_base", encode_int(chain.first_base)},
          {"schedule", encode(chain.schedule)},
          {"coords", coords},
          {"commitments", coms}};
}

PuzzleChain decode_chain(const Json& j) {
  PuzzleChain chain;
  chain.modulus = decode_int(field(j, "modulus"));
  chain.first_base = decode_int(field(j, "first_base"));
  chain.schedule = decode_schedule(field(j, "schedule"));
  for (const auto& row : as_array(field(j, "coords"))) chain.coords.push_back(decode_ints(row));
  for (const auto& c : as_array(field(j, "commitments")))
    chain.commitments.push_back(decode_commitment(c));
  return chain;
}

Json encode(const MasterKeyChain& mks) { return {{"master_keys", encode_ints(mks.keys)}}; }

MasterKeyChain decode_master_keys(const Json& j) {
  return {decode_ints(field(j, "master_keys"))};
}

Json encode(const EvalGrant& grant) {
  return {{"modulus", encode_int(grant.modulus)},
          {"base", encode_int(grant.base)},
          {"commitment", encode(grant.commitment)},
          {"squarings", grant.squarings}};
}

EvalGrant decode_grant(const Json& j) {
  EvalGrant g;
  g.modulus = decode_int(field(j, "modulus"));
  g.base = decode_int(field(j, "base"));
  g.commitment = decode_commitment(field(j, "commitment"));
  g.squarings = decode_u64(field(j, "squarings"));
  return g;
}

Json encode(const EvalPuzzle& puzzle) { return {{"g", encode_ints(puzzle.g)}}; }

EvalPuzzle decode_eval_puzzle(const Json& j) { return {decode_ints(field(j, "g"))}; }

Json encode(const SolutionBundle& bundle) {
  Json solutions = Json::array();
  for (const auto& s : bundle.solutions)
    solutions.push_back({{"value", encode_int(s.value)}, {"index", s.index}});
  Json proofs = Json::array();
  for (const auto& p : bundle.proofs) {
    if (const auto* mk = std::get_if<mpz_class>(&p)) {
      proofs.push_back({{"kind", "master-key"}, {"mk", encode_int(*mk)}});
    } else {
      const auto& op = std::get<RootOpening>(p);
      proofs.push_back({{"kind", "root-opening"}, {"root", encode_int(op.root)}, {"tk", encode_int(op.tk)}});
    }
  }
  return {{"solutions", solutions}, {"proofs", proofs}};
}

SolutionBundle decode_bundle(const Json& j) {
  SolutionBundle b;
  for (const auto& s : as_array(field(j, "solutions")))
    b.solutions.push_back({decode_int(field(s, "value")), decode_u64(field(s, "index"))});
  for (const auto& p : as_array(field(j, "proofs"))) {
    const Json& kind = field(p, "kind");
    if (kind == "master-key") {
      b.proofs.emplace_back(decode_int(field(p, "mk")));
    } else if (kind == "root-opening") {
      b.proofs.emplace_back(RootOpening{decode_int(field(p, "root")), decode_int(field(p, "tk"))});
    } else {
      malformed("unknown proof kind");
    }
  }
  return b;
}

Json encode(const LeaderConfig& cfg) {
  return {{"n", cfg.n},
          {"tddot", cfg.tddot},
          {"threshold", cfg.threshold},
          {"rhat", encode_bytes(cfg.rhat)},
          {"leaders", cfg.leaders}};
}

LeaderConfig decode_leaders(const Json& j) {
  LeaderConfig cfg;
  cfg.n = decode_u64(field(j, "n"));
  cfg.tddot = decode_u64(field(j, "tddot"));
  cfg.threshold = decode_u64(field(j, "threshold"));
  cfg.rhat = decode_bytes(field(j, "rhat"));
  for (const auto& l : as_array(field(j, "leaders"))) cfg.leaders.push_back(decode_u64(l));
  return cfg;
}

Json encode(const RootShare& share) {
  return {{"leader", share.leader}, {"gamma_prime", encode_ints(share.gamma_prime)}};
}

Json encode(const KeyEnvelope& env) {
  return {{"from", env.from}, {"to", env.to}, {"key", encode_bytes(env.key)}};
}

Json encode(const OleTranscript& transcript) {
  Json out = Json::array();
  for (const auto& e : transcript)
    out.push_back({{"functionality", e.functionality},
                   {"sender_role", e.sender_role},
                   {"a", encode_int(e.a)},
                   {"b", encode_int(e.b)},
                   {"c", encode_int(e.c)},
                   {"output", encode_int(e.output)}});
  return out;
}

Json encode(const BaselinePuzzle& puzzle) {
  return {{"modulus", encode_int(puzzle.n)},
          {"base", encode_int(puzzle.base)},
          {"squarings", puzzle.squarings},
          {"ciphertext", encode_bytes(puzzle.ciphertext)},
          {"masked_key", encode_int(puzzle.masked_key)}};
}

BaselinePuzzle decode_baseline(const Json& j) {
  BaselinePuzzle p;
  p.n = decode_int(field(j, "modulus"));
  p.base = decode_int(field(j, "base"));
  p.squarings = decode_u64(field(j, "squarings"));
  p.ciphertext = decode_bytes(field(j, "ciphertext"));
  p.masked_key = decode_int(field(j, "masked_key"));
  return p;
}

Json encode_grants(const std::map<std::size_t, EvalGrant>& grants) {
  Json out = Json::object();
  for (const auto& [leader, grant] : grants) out[std::to_string(leader)] = encode(grant);
  return out;
}

std::map<std::size_t, EvalGrant> decode_grants(const Json& j) {
  if (!j.is_object()) malformed("grants must be an object keyed by leader index");
  std::map<std::size_t, EvalGrant> out;
  for (const auto& [key, value] : j.items()) {
    std::size_t idx = 0;
    try {
      idx = std::stoul(key);
    } catch (const std::exception&) {
      malformed("grant key is not a leader index");
    }
    out.emplace(idx, decode_grant(value));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2); }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace mhtlp::codec
