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

#include "mhtlp/mmh_tlp.hpp"

#include <algorithm>

#include "mhtlp/error.hpp"

namespace mhtlp {

bool LeaderConfig::is_leader(std::size_t client) const {
  return std::find(leaders.begin(), leaders.end(), client) != leaders.end();
}

std::size_t raw_leader_index(std::uint64_t j, ByteView rhat, std::uint8_t counter, std::size_t n) {
  Bytes input;
  append_u64_be(input, j);
  input.insert(input.end(), rhat.begin(), rhat.end());
  if (counter > 0) input.push_back(counter);
  const mpz_class digest = from_bytes(sha256(input));
  return mpz_class(digest % n).get_ui();
}

LeaderConfig select_leaders(std::size_t n, std::size_t tddot, std::size_t threshold,
                            ByteView rhat) {
  if (n == 0 || tddot == 0 || tddot > n)
    throw Error(ErrorCode::kInvalidArgument, "leader count must lie in [1, n]");
  LeaderConfig cfg{n, tddot, threshold, Bytes(rhat.begin(), rhat.end()), {}};
  for (std::uint64_t j = 1; j <= tddot; ++j) {
    for (int counter = 0;; ++counter) {
      if (counter > 255) {
        // Fall back to the smallest unused index; unreachable in practice.
        std::size_t idx = 0;
        while (cfg.is_leader(idx)) ++idx;
        cfg.leaders.push_back(idx);
        break;
      }
      const std::size_t idx = raw_leader_index(j, rhat, static_cast<std::uint8_t>(counter), n);
      if (!cfg.is_leader(idx)) {
        cfg.leaders.push_back(idx);
        break;
      }
    }
  }
  return cfg;
}

McEvaluation evaluate_mc(const std::vector<McClientInput>& clients, const LeaderConfig& config,
                         const FieldContext& ctx, std::uint64_t delay, std::uint64_t maxss,
                         Rng& rng, const EvalOptions& options) {
  const std::size_t n = clients.size();
  const std::size_t tbar = ctx.tbar();
  if (n != config.n || config.leaders.size() != config.tddot)
    throw Error(ErrorCode::kInvalidArgument, "leader configuration does not match client count");
  if (tbar != config.tddot + 2)
    throw Error(ErrorCode::kInvalidArgument, "tbar must equal the leader count plus two");
  for (const auto& c : clients) {
    if (!c.chain || !c.master_keys || !c.keys)
      throw Error(ErrorCode::kInvalidArgument, "incomplete client input");
    validate_chain(*c.chain, ctx);
    if (c.puzzle_id < 1 || c.puzzle_id > c.chain->size() ||
        c.master_keys->keys.size() != c.chain->size())
      throw Error(ErrorCode::kInvalidArgument, "selected puzzle index out of range");
    if (!ctx.is_reduced(c.coeff)) throw Error(ErrorCode::kInvalidArgument, "coefficient not reduced");
    if (c.keys->n != c.chain->modulus)
      throw Error(ErrorCode::kInvalidArgument, "keys do not belong to chain");
  }

  McEvaluation out;
  const std::uint64_t y_count = delay * maxss;

  // Leaders: temporary key, root, broadcast share, and zero-sum keys.
  std::vector<mpz_class> taken_roots;
  std::map<std::size_t, Blinding> temp_blinding;
  for (std::size_t u : config.leaders) {
    const RsaKeypair& keys = *clients[u].keys;
    EvalGrant grant;
    grant.modulus = keys.n;
    grant.base = sample_unit(keys.n, rng);
    grant.squarings = y_count;
    LeaderSecrets sec;
    sec.tk = trapdoor_power(grant.base, y_count, keys);
    sec.root = sample_root(ctx, rng, taken_roots);
    taken_roots.push_back(sec.root);
    grant.commitment = commit(sec.root, sec.tk);

    const Blinding temp = derive_blinding(sec.tk, ctx);
    RootShare share{u, {}};
    for (std::size_t i = 0; i < tbar; ++i)
      share.gamma_prime.push_back(ctx.mul(ctx.sub(ctx.xs()[i], sec.root), temp.multiplicative[i]));
    for (std::size_t l = 0; l < n; ++l)
      if (l != u) out.envelopes.push_back({u, l, rng.bytes(32)});

    temp_blinding.emplace(u, temp);
    out.grants.emplace(u, grant);
    out.leader_secrets.emplace(u, sec);
    out.shares.push_back(std::move(share));
  }

  // Every client ends up with the same product of shares.
  out.v.assign(tbar, 1);
  for (const auto& share : out.shares)
    for (std::size_t i = 0; i < tbar; ++i) out.v[i] = ctx.mul(out.v[i], share.gamma_prime[i]);

  // Senders subtract the keys they issued, recipients add what they received.
  out.y.assign(n, std::vector<mpz_class>(tbar, 0));
  for (const auto& env : out.envelopes) {
    const PrfKey f(env.key);
    for (std::size_t i = 0; i < tbar; ++i) {
      const mpz_class mask = prf(PrfLabel::kCoord, i + 1, f, ctx);
      out.y[env.from][i] = ctx.sub(out.y[env.from][i], mask);
      out.y[env.to][i] = ctx.add(out.y[env.to][i], mask);
    }
  }

  out.puzzle.g.assign(tbar, 0);
  out.outputs.assign(n, std::vector<mpz_class>(tbar));
  for (std::size_t u = 0; u < n; ++u) {
    const McClientInput& c = clients[u];
    const std::size_t j = c.puzzle_id - 1;
    const Blinding blind = derive_blinding(c.master_keys->keys[j], ctx);
    const auto temp = temp_blinding.find(u);
    for (std::size_t i = 0; i < tbar; ++i) {
      const mpz_class scale = ctx.mul(c.coeff, out.v[i]);
      OleSenderInput sender;
      sender.a = ctx.mul(scale, ctx.inv(blind.multiplicative[i]));
      sender.b = ctx.add(ctx.neg(ctx.mul(scale, blind.additive[i])), out.y[u][i]);
      if (temp != temp_blinding.end()) sender.b = ctx.add(sender.b, temp->second.additive[i]);

      OleOptions ole_opts;
      ole_opts.verifying = options.verifying;
      if (options.ole_fault && options.ole_fault->participant == u &&
          options.ole_fault->coordinate == i)
        ole_opts.fault = options.ole_fault->fault;
      OleResult res = ole_plus(sender, {c.chain->coords[j][i]}, ctx, rng, ole_opts);
      if (res.misbehavior_detected)
        throw Error(ErrorCode::kMisbehavior, "OLE+ misbehavior detected; evaluation aborted");
      out.outputs[u][i] = res.output;
      out.transcripts.push_back(std::move(res.transcript));
      out.puzzle.g[i] = ctx.add(out.puzzle.g[i], res.output);
    }
  }
  return out;
}

std::vector<EvalGrant> ordered_grants(const McEvaluation& eval, const LeaderConfig& config) {
  std::vector<EvalGrant> out;
  for (std::size_t u : config.leaders) out.push_back(eval.grants.at(u));
  return out;
}

EvalSolveResult solve_mc(const EvalPuzzle& puzzle, const std::vector<EvalGrant>& grants,
                         const FieldContext& ctx, std::stop_token cancel) {
  const int max_degree = static_cast<int>(ctx.tbar()) - 1;
  if (grants.size() + 2 != ctx.tbar())
    throw Error(ErrorCode::kMalformed, "grant count does not match tbar");
  return solve_combination(puzzle, grants, ctx, max_degree, cancel);
}

VerifyOutcome verify_mc(const mpz_class& m, const std::vector<RootOpening>& openings,
                        const EvalPuzzle& puzzle, const std::vector<EvalGrant>& grants,
                        const FieldContext& ctx) {
  if (grants.size() + 2 != ctx.tbar()) return {false, "grant count does not match tbar"};
  return verify_combination(m, openings, puzzle, grants, ctx, static_cast<int>(ctx.tbar()) - 1);
}

}  // namespace mhtlp
