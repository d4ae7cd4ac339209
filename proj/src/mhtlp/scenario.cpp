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

#include "mhtlp/scenario.hpp"

#include "mhtlp/codec.hpp"
#include "mhtlp/error.hpp"
#include "mhtlp/mmh_tlp.hpp"

namespace mhtlp {
namespace {

using Json = nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformed, what); }

mpz_class read_int(const Json& j) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) return codec::decode_int(j);
  malformed("expected a non-negative integer or hex string");
}

std::uint64_t read_u64(const Json& j, const char* name, std::uint64_t fallback) {
  auto it = j.find(name);
  if (it == j.end()) return fallback;
  if (!it->is_number_unsigned()) malformed(std::string("'") + name + "' must be an unsigned integer");
  return it->get<std::uint64_t>();
}

bool read_bool(const Json& j, const char* name, bool fallback) {
  auto it = j.find(name);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) malformed(std::string("'") + name + "' must be a boolean");
  return it->get<bool>();
}

std::vector<mpz_class> read_ints(const Json& j, const char* name) {
  std::vector<mpz_class> out;
  auto it = j.find(name);
  if (it == j.end()) return out;
  if (!it->is_array()) malformed(std::string("'") + name + "' must be an array");
  for (const auto& v : *it) out.push_back(read_int(v));
  return out;
}

const std::vector<std::pair<std::string, OleFaultSlot>> kSlots = {
    {"first-a", OleFaultSlot::kFirstA},
    {"first-b", OleFaultSlot::kFirstB},
    {"second-a", OleFaultSlot::kSecondA},
    {"second-b", OleFaultSlot::kSecondB}};

std::string slot_name(OleFaultSlot slot) {
  for (const auto& [name, s] : kSlots)
    if (s == slot) return name;
  return "second-b";
}

const std::vector<std::string> kTargets = {"g",         "ole",      "grant-base", "proof-root",
                                           "proof-tk", "message", "coord"};

struct Claim {
  mpz_class m;
  std::vector<RootOpening> openings;
};

// Decoding an evaluation with openings the runner already knows; used when
// the solver fails so the verifier still sees a concrete claim.
Claim fallback_claim(const EvalPuzzle& g, std::vector<RootOpening> openings,
                     const FieldContext& ctx) {
  Claim claim{0, std::move(openings)};
  std::vector<mpz_class> tks;
  mpz_class denom = 1;
  for (const auto& op : claim.openings) {
    tks.push_back(op.tk);
    denom = ctx.mul(denom, ctx.neg(op.root));
  }
  try {
    const DensePoly theta = unblind_theta(g, tks, ctx);
    claim.m = ctx.mul(theta.constant_term(), ctx.inv(denom));
  } catch (const Error&) {
    claim.m = 0;
  }
  return claim;
}

class Runner {
 public:
  explicit Runner(const Scenario& s) : s_(s) {}

  ScenarioResult run();

 private:
  void add(std::string check, std::string result, bool passed) {
    verdicts_.push_back({std::move(check), std::move(result), passed});
  }
  bool fault_is(const char* target) const { return s_.fault && s_.fault->target == target; }
  void apply_claim_faults(Claim& claim, const FieldContext& ctx) const;
  void solve_and_verify(const EvalPuzzle& g, const std::vector<EvalGrant>& grants,
                        std::vector<RootOpening> known, const FieldContext& ctx, int phase,
                        const mpz_class& expected, bool multi);

  const Scenario& s_;
  BulletinBoard board_;
  std::vector<Verdict> verdicts_;
  Json squarings_ = Json::object();
};

void Runner::apply_claim_faults(Claim& claim, const FieldContext& ctx) const {
  if (!s_.fault) return;
  const ScenarioFault& f = *s_.fault;
  if (f.target == "message") claim.m = ctx.add(claim.m, ctx.reduce(f.delta));
  if ((f.target == "proof-root" || f.target == "proof-tk") && f.participant < claim.openings.size()) {
    RootOpening& op = claim.openings[f.participant];
    if (f.target == "proof-root") op.root = ctx.add(op.root, ctx.reduce(f.delta));
    else op.tk += f.delta;
  }
}

void Runner::solve_and_verify(const EvalPuzzle& g, const std::vector<EvalGrant>& grants,
                              std::vector<RootOpening> known, const FieldContext& ctx, int phase,
                              const mpz_class& expected, bool multi) {
  Claim claim;
  try {
    EvalSolveResult solved = multi ? solve_mc(g, grants, ctx) : solve_eval_sc(g, grants.front(), ctx);
    claim.m = solved.bundle.solutions.front().value;
    for (const auto& p : solved.bundle.proofs) claim.openings.push_back(std::get<RootOpening>(p));
    Json counts = Json::array();
    for (const auto& r : solved.reports) counts.push_back(r.squarings_performed);
    squarings_["evaluation"] = counts;
    add("evaluation solve", "ok", true);
    add("evaluation result", claim.m == expected ? "match" : "mismatch", claim.m == expected);
  } catch (const Error& e) {
    add("evaluation solve", std::string("error (") + error_code_name(e.code()) + ")", false);
    claim = fallback_claim(g, std::move(known), ctx);
  }
  apply_claim_faults(claim, ctx);

  SolutionBundle bundle;
  bundle.solutions.push_back({claim.m, 0});
  for (const auto& op : claim.openings) bundle.proofs.emplace_back(op);
  board_.publish("server", server_topic(phase + 1, "solve"), codec::encode(bundle));

  const VerifyOutcome outcome = multi ? verify_mc(claim.m, claim.openings, g, grants, ctx)
                                      : verify_eval_sc(claim.m, claim.openings.front(), g,
                                                       grants.front(), ctx);
  add("evaluation verification", outcome.accepted ? "accept" : "reject", outcome.accepted);
  board_.publish("verifier", server_topic(phase + 2, "verify"),
                 {{"check", "evaluation"},
                  {"accepted", outcome.accepted},
                  {"reason", outcome.reason}});
}

ScenarioResult Runner::run() {
  const std::size_t n = s_.clients.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "scenario has no clients");
  const bool multi = n >= 2;
  const std::size_t tbar = multi ? s_.tddot + 2 : 3;

  Rng root_rng = Rng::from_seed(s_.seed);
  Rng field_rng = root_rng.fork(1);
  Rng rsa_rng = s_.deterministic_rsa ? root_rng.fork(2) : Rng::system();
  Rng proto_rng = root_rng.fork(3);

  FieldOptions options;
  options.allow_small_prime = s_.unsafe_small_prime;
  Bytes seed_bytes;
  append_u64_be(seed_bytes, s_.seed);
  const FieldContext generated = FieldContext::generate(s_.prime_bits, tbar, field_rng, options);
  const FieldContext ctx = FieldContext::create(generated.p(), tbar, seed_bytes, options);
  board_.publish("server", server_topic(1, "setup"), codec::encode(ctx));

  std::vector<RsaKeypair> keys;
  for (std::size_t u = 0; u < n; ++u) {
    keys.push_back(rsa_keygen(s_.rsa_bits, rsa_rng));
    board_.publish("client" + std::to_string(u), client_topic(2, "keygen", u),
                   {{"n", codec::encode_int(keys.back().n)}});
  }

  std::vector<GeneratedChain> gens;
  std::vector<PuzzleChain> published;
  for (std::size_t u = 0; u < n; ++u) {
    const ScenarioClient& c = s_.clients[u];
    TimeSchedule schedule{c.intervals, s_.maxss};
    gens.push_back(gen_puzzle(c.messages, keys[u], ctx, schedule, proto_rng));
    published.push_back(gens.back().chain);
    if (fault_is("coord") && s_.fault->participant == u) {
      auto& row = published.back().coords.at(s_.fault->puzzle - 1);
      row.at(s_.fault->coordinate) = ctx.add(row.at(s_.fault->coordinate), ctx.reduce(s_.fault->delta));
    }
    board_.publish("client" + std::to_string(u), client_topic(3, "g", u),
                   codec::encode(published.back()));
  }

  // Evaluation phase.
  EvalOptions eval_opts;
  if (fault_is("ole")) {
    eval_opts.ole_fault = OleFaultTarget{s_.fault->participant, s_.fault->coordinate,
                                         OleFault{s_.fault->slot, s_.fault->delta}};
    eval_opts.verifying = s_.fault->verifying;
  }
  const int eval_phase = multi ? 5 : 4;
  const int solve_phase = 6;
  try {
    if (!multi) {
      const ScenarioClient& c = s_.clients[0];
      ScEvaluation ev = evaluate_sc(published[0], gens[0].master_keys, keys[0], c.coefficients,
                                    ctx, s_.delay, proto_rng, eval_opts);
      board_.publish("client0", client_topic(4, "a.vi", 0), codec::encode(ev.grant));
      for (const auto& t : ev.transcripts)
        board_.send("client0", "server", client_topic(4, "a.v", 0), codec::encode(t));
      if (fault_is("g"))
        ev.puzzle.g.at(s_.fault->coordinate) =
            ctx.add(ev.puzzle.g.at(s_.fault->coordinate), ctx.reduce(s_.fault->delta));
      board_.publish("server", server_topic(4, "B"), codec::encode(ev.puzzle));

      EvalGrant grant = ev.grant;
      if (fault_is("grant-base")) {
        grant.base = (grant.base + s_.fault->delta) % grant.modulus;
        if (grant.base == 0) grant.base = 1;
      }
      mpz_class expected = 0;
      for (std::size_t j = 0; j < c.messages.size(); ++j)
        expected = ctx.add(expected, ctx.mul(c.coefficients[j], c.messages[j]));
      solve_and_verify(ev.puzzle, {grant}, {RootOpening{ev.secrets.root, ev.secrets.tk}}, ctx,
                       solve_phase - 1, expected, false);
    } else {
      const Bytes rhat = s_.rhat.empty() ? sha256(seed_bytes) : s_.rhat;
      const LeaderConfig cfg = select_leaders(n, s_.tddot, s_.threshold, rhat);
      board_.publish("server", server_topic(5, "a"), codec::encode(cfg));
      std::vector<McClientInput> inputs;
      for (std::size_t u = 0; u < n; ++u)
        inputs.push_back({&published[u], &gens[u].master_keys, &keys[u],
                          s_.clients[u].puzzle_id, s_.clients[u].coefficient});
      McEvaluation ev = evaluate_mc(inputs, cfg, ctx, s_.delay, s_.maxss, proto_rng, eval_opts);
      for (const auto& share : ev.shares)
        board_.publish("client" + std::to_string(share.leader), client_topic(5, "c", share.leader),
                       codec::encode(share));
      for (const auto& env : ev.envelopes)
        board_.send("client" + std::to_string(env.from), "client" + std::to_string(env.to),
                    client_topic(5, "c.key", env.from), codec::encode(env));
      for (const auto& [leader, grant] : ev.grants)
        board_.publish("client" + std::to_string(leader), client_topic(5, "g", leader),
                       codec::encode(grant));
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t i = 0; i < tbar; ++i)
          board_.send("client" + std::to_string(u), "server", client_topic(5, "d", u),
                      codec::encode(ev.transcripts[u * tbar + i]));
      if (fault_is("g"))
        ev.puzzle.g.at(s_.fault->coordinate) =
            ctx.add(ev.puzzle.g.at(s_.fault->coordinate), ctx.reduce(s_.fault->delta));
      board_.publish("server", server_topic(5, "e"), codec::encode(ev.puzzle));

      std::vector<EvalGrant> grants = ordered_grants(ev, cfg);
      if (fault_is("grant-base")) {
        EvalGrant& grant = grants.at(s_.fault->participant);
        grant.base = (grant.base + s_.fault->delta) % grant.modulus;
        if (grant.base == 0) grant.base = 1;
      }
      std::vector<RootOpening> known;
      for (std::size_t u : cfg.leaders)
        known.push_back({ev.leader_secrets.at(u).root, ev.leader_secrets.at(u).tk});
      mpz_class expected = 0;
      for (const auto& c : s_.clients)
        expected = ctx.add(expected, ctx.mul(c.coefficient, c.messages.at(c.puzzle_id - 1)));
      solve_and_verify(ev.puzzle, grants, known, ctx, solve_phase - 1, expected, true);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kMisbehavior) throw;
    board_.publish("client", server_topic(eval_phase, "abort"), {{"symbol", "bottom"}, {"reason", e.what()}});
    add("evaluation", "abort (misbehavior)", false);
  }

  // Chain solving and client-side verification.
  Json chain_counts = Json::array();
  for (std::size_t u = 0; u < n; ++u) {
    const ChainSolveResult res = solve_chain(published[u], ctx);
    chain_counts.push_back(res.total_squarings);
    board_.publish("server", client_topic(solve_phase, "chain", u), codec::encode(res.bundle));
    const std::string who = "client " + std::to_string(u);
    bool all_match = true;
    for (std::size_t j = 0; j < res.bundle.solutions.size(); ++j) {
      const mpz_class& m = res.bundle.solutions[j].value;
      const mpz_class& mk = std::get<mpz_class>(res.bundle.proofs[j]);
      all_match = all_match && m == s_.clients[u].messages[j];
      const bool ok = verify_client_solution(m, mk, published[u].commitments[j]);
      add("client solution verification (" + who + ", puzzle " + std::to_string(j + 1) + ")",
          ok ? "accept" : "reject", ok);
      board_.publish("verifier", client_topic(7, "client.puzzle" + std::to_string(j + 1), u),
                     {{"puzzle", j + 1}, {"accepted", ok}});
    }
    add("chain recovery (" + who + ")", all_match ? "match" : "mismatch", all_match);
  }
  squarings_["chains"] = chain_counts;

  ScenarioResult out;
  out.verdicts = verdicts_;
  out.all_passed = true;
  Json lines = Json::array();
  for (const auto& v : verdicts_) {
    out.all_passed = out.all_passed && v.passed;
    lines.push_back(v.line());
  }
  out.transcript = {{"scenario", scenario_to_json(s_)},
                    {"board", board_.to_json()},
                    {"squarings", squarings_},
                    {"verdicts", lines},
                    {"outcome", out.all_passed ? "accept" : "reject"}};
  return out;
}

}  // namespace

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) malformed("scenario must be a JSON object");
  Scenario s;
  s.seed = read_u64(j, "seed", 0);
  s.prime_bits = read_u64(j, "prime_bits", s.prime_bits);
  s.unsafe_small_prime = read_bool(j, "unsafe_small_prime", false);
  s.rsa_bits = read_u64(j, "rsa_bits", s.rsa_bits);
  s.deterministic_rsa = read_bool(j, "deterministic_rsa", true);
  s.maxss = read_u64(j, "maxss", 1);
  s.delay = read_u64(j, "delay", 0);
  s.tddot = read_u64(j, "tddot", 1);
  s.threshold = read_u64(j, "threshold", 1);
  if (auto it = j.find("rhat"); it != j.end()) s.rhat = codec::decode_bytes(*it);

  auto clients = j.find("clients");
  if (clients == j.end() || !clients->is_array() || clients->empty())
    malformed("scenario needs a non-empty 'clients' array");
  for (const auto& cj : *clients) {
    if (!cj.is_object()) malformed("client entry must be an object");
    ScenarioClient c;
    c.messages = read_ints(cj, "messages");
    if (auto it = cj.find("intervals"); it != cj.end()) {
      if (!it->is_array()) malformed("'intervals' must be an array");
      for (const auto& d : *it) {
        if (!d.is_number_unsigned()) malformed("interval must be an unsigned integer");
        c.intervals.push_back(d.get<std::uint64_t>());
      }
    }
    if (c.intervals.size() != c.messages.size())
      malformed("each client needs one interval per message");
    c.coefficients = read_ints(cj, "coefficients");
    if (c.coefficients.empty()) c.coefficients.assign(c.messages.size(), 1);
    c.puzzle_id = read_u64(cj, "puzzle_id", 1);
    if (auto it = cj.find("coefficient"); it != cj.end()) c.coefficient = read_int(*it);
    s.clients.push_back(std::move(c));
  }
  if (s.clients.size() == 1 && s.clients[0].coefficients.size() != s.clients[0].messages.size())
    malformed("single-client scenarios need one coefficient per message");

  if (auto it = j.find("fault"); it != j.end() && !it->is_null()) {
    const Json& fj = *it;
    if (!fj.is_object() || !fj.contains("target") || !fj["target"].is_string())
      malformed("fault needs a string 'target'");
    ScenarioFault f;
    f.target = fj["target"].get<std::string>();
    if (std::find(kTargets.begin(), kTargets.end(), f.target) == kTargets.end())
      malformed("unknown fault target '" + f.target + "'");
    f.participant = read_u64(fj, "participant", 0);
    f.coordinate = read_u64(fj, "coordinate", 0);
    f.puzzle = read_u64(fj, "puzzle", 1);
    if (auto d = fj.find("delta"); d != fj.end()) f.delta = read_int(*d);
    f.verifying = read_bool(fj, "verifying", false);
    if (auto sl = fj.find("slot"); sl != fj.end()) {
      bool known = false;
      for (const auto& [name, slot] : kSlots)
        if (sl->is_string() && *sl == name) {
          f.slot = slot;
          known = true;
        }
      if (!known) malformed("unknown OLE fault slot");
    }
    s.fault = f;
  }
  return s;
}

Json scenario_to_json(const Scenario& s) {
  Json clients = Json::array();
  for (const auto& c : s.clients)
    clients.push_back({{"messages", codec::encode_ints(c.messages)},
                       {"intervals", c.intervals},
                       {"coefficients", codec::encode_ints(c.coefficients)},
                       {"puzzle_id", c.puzzle_id},
                       {"coefficient", codec::encode_int(c.coefficient)}});
  Json out = {{"seed", s.seed},
              {"prime_bits", s.prime_bits},
              {"unsafe_small_prime", s.unsafe_small_prime},
              {"rsa_bits", s.rsa_bits},
              {"deterministic_rsa", s.deterministic_rsa},
              {"maxss", s.maxss},
              {"delay", s.delay},
              {"tddot", s.tddot},
              {"threshold", s.threshold},
              {"rhat", codec::encode_bytes(s.rhat)},
              {"clients", clients}};
  if (s.fault) {
    out["fault"] = {{"target", s.fault->target},
                    {"participant", s.fault->participant},
                    {"coordinate", s.fault->coordinate},
                    {"puzzle", s.fault->puzzle},
                    {"delta", codec::encode_int(s.fault->delta)},
                    {"slot", slot_name(s.fault->slot)},
                    {"verifying", s.fault->verifying}};
  }
  return out;
}

ScenarioResult run_scenario(const Scenario& scenario) { return Runner(scenario).run(); }

}  // namespace mhtlp
