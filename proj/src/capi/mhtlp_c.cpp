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

#include "mhtlp/mhtlp.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "mhtlp/calibrate.hpp"
#include "mhtlp/codec.hpp"
#include "mhtlp/error.hpp"
#include "mhtlp/mmh_tlp.hpp"
#include "mhtlp/scenario.hpp"

struct mhtlp_rng {
  mhtlp::Rng rng;
};

struct mhtlp_field {
  mhtlp::FieldContext ctx;
};

namespace {

using mhtlp::Error;
using mhtlp::ErrorCode;
using Json = mhtlp::codec::Json;
namespace codec = mhtlp::codec;

thread_local std::string g_last_error;

mhtlp_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return MHTLP_INVALID_ARGUMENT;
    case ErrorCode::kMalformed: return MHTLP_MALFORMED;
    case ErrorCode::kIntegrity: return MHTLP_INTEGRITY;
    case ErrorCode::kDegenerate: return MHTLP_DEGENERATE;
    case ErrorCode::kMisbehavior: return MHTLP_MISBEHAVIOR;
    case ErrorCode::kCancelled: return MHTLP_CANCELLED;
    case ErrorCode::kInternal: return MHTLP_INTERNAL;
  }
  return MHTLP_INTERNAL;
}

mhtlp_status fail(mhtlp_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
mhtlp_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(MHTLP_MALFORMED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MHTLP_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MHTLP_INTERNAL, e.what());
  } catch (...) {
    return fail(MHTLP_INTERNAL, "unknown failure");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

Json parse_arg(const char* text, const char* name) {
  require(text != nullptr, name);
  return codec::parse(text);
}

char* to_c_string(const Json& j) {
  const std::string s = codec::dump(j);
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Json encode_secrets(const mhtlp::EvalSecrets& s) {
  Json keys = Json::array();
  for (const auto& k : s.zero_sum_keys) keys.push_back(codec::encode_bytes(k));
  Json y = Json::array();
  for (const auto& row : s.y) y.push_back(codec::encode_ints(row));
  return {{"tk", codec::encode_int(s.tk)},
          {"root", codec::encode_int(s.root)},
          {"gamma", codec::encode_ints(s.gamma)},
          {"zero_sum_keys", keys},
          {"y", y}};
}

std::vector<mhtlp::RootOpening> openings_of(const mhtlp::SolutionBundle& b) {
  std::vector<mhtlp::RootOpening> out;
  for (const auto& p : b.proofs) {
    const auto* op = std::get_if<mhtlp::RootOpening>(&p);
    if (op == nullptr) throw Error(ErrorCode::kMalformed, "evaluation bundle holds a non-root proof");
    out.push_back(*op);
  }
  return out;
}

mhtlp_status verdict(const mhtlp::VerifyOutcome& outcome) {
  if (outcome.accepted) return MHTLP_OK;
  return fail(MHTLP_REJECT, outcome.reason);
}

}  // namespace

extern "C" {

const char* mhtlp_version(void) { return "0.1.0"; }

const char* mhtlp_status_name(mhtlp_status status) {
  switch (status) {
    case MHTLP_OK: return "ok";
    case MHTLP_REJECT: return "reject";
    case MHTLP_MALFORMED: return "malformed";
    case MHTLP_INTERNAL: return "internal";
    case MHTLP_INVALID_ARGUMENT: return "invalid-argument";
    case MHTLP_INTEGRITY: return "integrity";
    case MHTLP_MISBEHAVIOR: return "misbehavior";
    case MHTLP_DEGENERATE: return "degenerate";
    case MHTLP_CANCELLED: return "cancelled";
  }
  return "unknown";
}

const char* mhtlp_last_error(void) { return g_last_error.c_str(); }

void mhtlp_string_free(char* s) { std::free(s); }

mhtlp_status mhtlp_rng_new_seeded(uint64_t seed, mhtlp_rng** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new mhtlp_rng{mhtlp::Rng::from_seed(seed)};
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_rng_new_system(mhtlp_rng** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new mhtlp_rng{mhtlp::Rng::system()};
    return MHTLP_OK;
  });
}

void mhtlp_rng_free(mhtlp_rng* rng) { delete rng; }

mhtlp_status mhtlp_field_generate(unsigned prime_bits, unsigned tbar, int allow_small_prime,
                                  mhtlp_rng* rng, mhtlp_field** out) {
  return guarded([&] {
    require(rng != nullptr && out != nullptr, "null argument");
    mhtlp::FieldOptions opts;
    opts.allow_small_prime = allow_small_prime != 0;
    *out = new mhtlp_field{mhtlp::FieldContext::generate(prime_bits, tbar, rng->rng, opts)};
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_field_new(const char* p_hex, unsigned tbar, const char* seed_hex,
                             int allow_small_prime, mhtlp_field** out) {
  return guarded([&] {
    require(p_hex != nullptr && out != nullptr, "null argument");
    mhtlp::FieldOptions opts;
    opts.allow_small_prime = allow_small_prime != 0;
    const mhtlp::Bytes seed = seed_hex ? mhtlp::bytes_from_hex(seed_hex) : mhtlp::Bytes{};
    *out = new mhtlp_field{mhtlp::FieldContext::create(mhtlp::from_hex(p_hex), tbar, seed, opts)};
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_field_from_json(const char* json, mhtlp_field** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new mhtlp_field{codec::decode_field(parse_arg(json, "null field JSON"))};
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_field_to_json(const mhtlp_field* field, char** out) {
  return guarded([&] {
    require(field != nullptr && out != nullptr, "null argument");
    *out = to_c_string(codec::encode(field->ctx));
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_field_with_tbar(const mhtlp_field* field, unsigned tbar, mhtlp_field** out) {
  return guarded([&] {
    require(field != nullptr && out != nullptr, "null argument");
    *out = new mhtlp_field{field->ctx.with_tbar(tbar)};
    return MHTLP_OK;
  });
}

void mhtlp_field_free(mhtlp_field* field) { delete field; }

mhtlp_status mhtlp_keygen(unsigned prime_bits, mhtlp_rng* rng, char** keypair_json) {
  return guarded([&] {
    require(rng != nullptr && keypair_json != nullptr, "null argument");
    *keypair_json = to_c_string(codec::encode(mhtlp::rsa_keygen(prime_bits, rng->rng)));
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_puzzle_gen(const mhtlp_field* field, const char* keypair_json,
                              const char* messages_json, const char* schedule_json,
                              mhtlp_rng* rng, char** chain_json, char** master_keys_json) {
  return guarded([&] {
    require(field && rng && chain_json && master_keys_json, "null argument");
    const auto keys = codec::decode_keypair(parse_arg(keypair_json, "null keypair"));
    const auto messages = codec::decode_ints(parse_arg(messages_json, "null messages"));
    const auto schedule = codec::decode_schedule(parse_arg(schedule_json, "null schedule"));
    const auto gen = mhtlp::gen_puzzle(messages, keys, field->ctx, schedule, rng->rng);
    char* chain = to_c_string(codec::encode(gen.chain));
    char* mks = nullptr;
    try {
      mks = to_c_string(codec::encode(gen.master_keys));
    } catch (...) {
      std::free(chain);
      throw;
    }
    *chain_json = chain;
    *master_keys_json = mks;
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_evaluate_sc(const mhtlp_field* field, const char* chain_json,
                               const char* master_keys_json, const char* keypair_json,
                               const char* coefficients_json, uint64_t delay, mhtlp_rng* rng,
                               char** eval_json, char** secrets_json) {
  return guarded([&] {
    require(field && rng && eval_json, "null argument");
    const auto chain = codec::decode_chain(parse_arg(chain_json, "null chain"));
    const auto mks = codec::decode_master_keys(parse_arg(master_keys_json, "null master keys"));
    const auto keys = codec::decode_keypair(parse_arg(keypair_json, "null keypair"));
    const auto coeffs = codec::decode_ints(parse_arg(coefficients_json, "null coefficients"));
    const auto ev = mhtlp::evaluate_sc(chain, mks, keys, coeffs, field->ctx, delay, rng->rng);
    char* eval = to_c_string({{"puzzle", codec::encode(ev.puzzle)}, {"grant", codec::encode(ev.grant)}});
    if (secrets_json != nullptr) {
      try {
        *secrets_json = to_c_string(encode_secrets(ev.secrets));
      } catch (...) {
        std::free(eval);
        throw;
      }
    }
    *eval_json = eval;
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_select_leaders(size_t n, size_t tddot, size_t threshold, const char* rhat_hex,
                                  char** config_json) {
  return guarded([&] {
    require(rhat_hex && config_json, "null argument");
    const auto cfg = mhtlp::select_leaders(n, tddot, threshold, mhtlp::bytes_from_hex(rhat_hex));
    *config_json = to_c_string(codec::encode(cfg));
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_evaluate_mc(const mhtlp_field* field, const char* clients_json,
                               const char* config_json, uint64_t delay, uint64_t maxss,
                               mhtlp_rng* rng, char** eval_json) {
  return guarded([&] {
    require(field && rng && eval_json, "null argument");
    const Json clients = parse_arg(clients_json, "null clients");
    if (!clients.is_array()) throw Error(ErrorCode::kMalformed, "clients must be an array");
    const auto cfg = codec::decode_leaders(parse_arg(config_json, "null leader config"));
    std::vector<mhtlp::PuzzleChain> chains;
    std::vector<mhtlp::MasterKeyChain> mks;
    std::vector<mhtlp::RsaKeypair> keys;
    std::vector<std::pair<std::size_t, mpz_class>> picks;
    for (const auto& c : clients) {
      if (!c.is_object()) throw Error(ErrorCode::kMalformed, "client entry must be an object");
      chains.push_back(codec::decode_chain(c.at("chain")));
      mks.push_back(codec::decode_master_keys(c.at("master_keys")));
      keys.push_back(codec::decode_keypair(c.at("keypair")));
      if (!c.at("puzzle_id").is_number_unsigned())
        throw Error(ErrorCode::kMalformed, "puzzle_id must be an unsigned integer");
      picks.emplace_back(c.at("puzzle_id").get<std::size_t>(), codec::decode_int(c.at("coefficient")));
    }
    std::vector<mhtlp::McClientInput> inputs;
    for (std::size_t u = 0; u < chains.size(); ++u)
      inputs.push_back({&chains[u], &mks[u], &keys[u], picks[u].first, picks[u].second});
    const auto ev = mhtlp::evaluate_mc(inputs, cfg, field->ctx, delay, maxss, rng->rng);
    *eval_json = to_c_string(
        {{"puzzle", codec::encode(ev.puzzle)}, {"grants", codec::encode_grants(ev.grants)}});
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_solve_chain(const mhtlp_field* field, const char* chain_json,
                               char** bundle_json) {
  return guarded([&] {
    require(field && bundle_json, "null argument");
    const auto chain = codec::decode_chain(parse_arg(chain_json, "null chain"));
    const auto res = mhtlp::solve_chain(chain, field->ctx);
    *bundle_json = to_c_string(codec::encode(res.bundle));
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_solve_eval_sc(const mhtlp_field* field, const char* puzzle_json,
                                 const char* grant_json, char** bundle_json) {
  return guarded([&] {
    require(field && bundle_json, "null argument");
    const auto puzzle = codec::decode_eval_puzzle(parse_arg(puzzle_json, "null puzzle"));
    const auto grant = codec::decode_grant(parse_arg(grant_json, "null grant"));
    const auto res = mhtlp::solve_eval_sc(puzzle, grant, field->ctx);
    *bundle_json = to_c_string(codec::encode(res.bundle));
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_solve_eval_mc(const mhtlp_field* field, const char* puzzle_json,
                                 const char* grants_json, const char* config_json,
                                 char** bundle_json) {
  return guarded([&] {
    require(field && bundle_json, "null argument");
    const auto puzzle = codec::decode_eval_puzzle(parse_arg(puzzle_json, "null puzzle"));
    const auto grants = codec::decode_grants(parse_arg(grants_json, "null grants"));
    const auto cfg = codec::decode_leaders(parse_arg(config_json, "null leader config"));
    std::vector<mhtlp::EvalGrant> ordered;
    for (std::size_t u : cfg.leaders) {
      auto it = grants.find(u);
      if (it == grants.end()) throw Error(ErrorCode::kMalformed, "missing grant for a leader");
      ordered.push_back(it->second);
    }
    const auto res = mhtlp::solve_mc(puzzle, ordered, field->ctx);
    *bundle_json = to_c_string(codec::encode(res.bundle));
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_verify_client(const char* bundle_json, const char* chain_json) {
  return guarded([&] {
    const auto bundle = codec::decode_bundle(parse_arg(bundle_json, "null bundle"));
    const auto chain = codec::decode_chain(parse_arg(chain_json, "null chain"));
    if (bundle.solutions.size() != bundle.proofs.size())
      throw Error(ErrorCode::kMalformed, "solutions and proofs are misaligned");
    if (bundle.solutions.empty()) throw Error(ErrorCode::kMalformed, "empty bundle");
    for (std::size_t k = 0; k < bundle.solutions.size(); ++k) {
      const auto& s = bundle.solutions[k];
      const auto* mk = std::get_if<mpz_class>(&bundle.proofs[k]);
      if (mk == nullptr) throw Error(ErrorCode::kMalformed, "client bundle holds a non-key proof");
      if (s.index < 1 || s.index > chain.commitments.size())
        throw Error(ErrorCode::kMalformed, "solution index outside the chain");
      if (!mhtlp::verify_client_solution(s.value, *mk, chain.commitments[s.index - 1]))
        return fail(MHTLP_REJECT, "commitment opening failed for puzzle " + std::to_string(s.index));
    }
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_verify_eval_sc(const mhtlp_field* field, const char* bundle_json,
                                  const char* puzzle_json, const char* grant_json) {
  return guarded([&] {
    require(field != nullptr, "null field");
    const auto bundle = codec::decode_bundle(parse_arg(bundle_json, "null bundle"));
    const auto puzzle = codec::decode_eval_puzzle(parse_arg(puzzle_json, "null puzzle"));
    const auto grant = codec::decode_grant(parse_arg(grant_json, "null grant"));
    const auto openings = openings_of(bundle);
    if (bundle.solutions.size() != 1 || openings.size() != 1)
      return fail(MHTLP_REJECT, "single-client bundle needs one result and one opening");
    return verdict(mhtlp::verify_eval_sc(bundle.solutions[0].value, openings[0], puzzle, grant,
                                         field->ctx));
  });
}

mhtlp_status mhtlp_verify_eval_mc(const mhtlp_field* field, const char* bundle_json,
                                  const char* puzzle_json, const char* grants_json,
                                  const char* config_json) {
  return guarded([&] {
    require(field != nullptr, "null field");
    const auto bundle = codec::decode_bundle(parse_arg(bundle_json, "null bundle"));
    const auto puzzle = codec::decode_eval_puzzle(parse_arg(puzzle_json, "null puzzle"));
    const auto grants = codec::decode_grants(parse_arg(grants_json, "null grants"));
    const auto cfg = codec::decode_leaders(parse_arg(config_json, "null leader config"));
    std::vector<mhtlp::EvalGrant> ordered;
    for (std::size_t u : cfg.leaders) {
      auto it = grants.find(u);
      if (it == grants.end()) return fail(MHTLP_REJECT, "missing grant for a leader");
      ordered.push_back(it->second);
    }
    if (bundle.solutions.size() != 1) return fail(MHTLP_REJECT, "bundle needs exactly one result");
    return verdict(mhtlp::verify_mc(bundle.solutions[0].value, openings_of(bundle), puzzle,
                                    ordered, field->ctx));
  });
}

mhtlp_status mhtlp_bench_squaring(unsigned prime_bits, double seconds, mhtlp_rng* rng,
                                  char** report_json) {
  return guarded([&] {
    require(rng && report_json, "null argument");
    const auto keys = mhtlp::rsa_keygen(prime_bits, rng->rng);
    const auto cal = mhtlp::calibrate_maxss(keys.n, seconds);
    *report_json = to_c_string({{"squarings_per_second", cal.squarings_per_second},
                                {"modulus_bits", cal.modulus_bits},
                                {"squarings", cal.squarings},
                                {"seconds", cal.seconds}});
    return MHTLP_OK;
  });
}

mhtlp_status mhtlp_run_scenario(const char* scenario_json, char** transcript_json) {
  return guarded([&] {
    require(transcript_json != nullptr, "null output pointer");
    const auto scenario = mhtlp::parse_scenario(parse_arg(scenario_json, "null scenario"));
    const auto result = mhtlp::run_scenario(scenario);
    *transcript_json = to_c_string(result.transcript);
    if (result.all_passed) return MHTLP_OK;
    std::string failed;
    for (const auto& v : result.verdicts)
      if (!v.passed) failed += (failed.empty() ? "" : "; ") + v.line();
    return fail(MHTLP_REJECT, failed);
  });
}

}  // extern "C"
