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

#include "mhtlp/mh_tlp.hpp"

#include <future>

#include "mhtlp/error.hpp"

namespace mhtlp {
namespace {

constexpr int kSingleClientDegree = 2;

mpz_class root_denominator(const std::vector<mpz_class>& roots, const FieldContext& ctx) {
  mpz_class prod = 1;
  for (const auto& r : roots) prod = ctx.mul(prod, ctx.neg(r));
  return prod;
}

}  // namespace

mpz_class sample_root(const FieldContext& ctx, Rng& rng, const std::vector<mpz_class>& taken) {
  for (;;) {
    mpz_class root = rng.below(ctx.p());
    if (root == 0 || ctx.is_coordinate(root)) continue;
    bool clash = false;
    for (const auto& t : taken) clash = clash || t == root;
    if (!clash) return root;
  }
}

ScEvaluation evaluate_sc(const PuzzleChain& chain, const MasterKeyChain& master_keys,
                         const RsaKeypair& keys, const std::vector<mpz_class>& coeffs,
                         const FieldContext& ctx, std::uint64_t delay, Rng& rng,
                         const EvalOptions& options) {
  validate_chain(chain, ctx);
  const std::size_t z = chain.size();
  if (coeffs.size() != z || master_keys.keys.size() != z)
    throw Error(ErrorCode::kInvalidArgument, "one coefficient and master key per puzzle required");
  for (const auto& q : coeffs)
    if (!ctx.is_reduced(q)) throw Error(ErrorCode::kInvalidArgument, "coefficient not reduced mod p");
  if (keys.n != chain.modulus) throw Error(ErrorCode::kInvalidArgument, "keys do not belong to chain");
  if (delay >= chain.schedule.intervals.front())
    throw Error(ErrorCode::kInvalidArgument, "evaluation delay must precede the first release");

  ScEvaluation out;
  EvalSecrets& sec = out.secrets;
  const std::uint64_t y_count = delay * chain.schedule.maxss;
  out.grant.modulus = keys.n;
  out.grant.base = sample_unit(keys.n, rng);
  out.grant.squarings = y_count;
  sec.tk = trapdoor_power(out.grant.base, y_count, keys);
  sec.root = sample_root(ctx, rng);
  out.grant.commitment = commit(sec.root, sec.tk);
  const Blinding temp = derive_blinding(sec.tk, ctx);

  const std::size_t tbar = ctx.tbar();
  for (std::size_t i = 0; i < tbar; ++i) sec.gamma.push_back(ctx.sub(ctx.xs()[i], sec.root));

  // Zero-sum masks: puzzle 1 carries minus the sum of the others.
  sec.y.assign(z, std::vector<mpz_class>(tbar, 0));
  for (std::size_t j = 1; j < z; ++j) {
    sec.zero_sum_keys.push_back(rng.bytes(32));
    const PrfKey f(sec.zero_sum_keys.back());
    for (std::size_t i = 0; i < tbar; ++i) {
      sec.y[j][i] = prf(PrfLabel::kCoord, i + 1, f, ctx);
      sec.y[0][i] = ctx.sub(sec.y[0][i], sec.y[j][i]);
    }
  }

  out.puzzle.g.assign(tbar, 0);
  out.outputs.assign(z, std::vector<mpz_class>(tbar));
  for (std::size_t j = 0; j < z; ++j) {
    const Blinding blind = derive_blinding(master_keys.keys[j], ctx);
    for (std::size_t i = 0; i < tbar; ++i) {
      const mpz_class scale =
          ctx.mul(ctx.mul(sec.gamma[i], coeffs[j]), temp.multiplicative[i]);
      OleSenderInput sender;
      sender.a = ctx.mul(scale, ctx.inv(blind.multiplicative[i]));
      // z'_i enters once per coordinate so that the sum over puzzles carries
      // exactly one copy.
      sender.b = ctx.add(ctx.neg(ctx.mul(scale, blind.additive[i])), sec.y[j][i]);
      if (j == 0) sender.b = ctx.add(sender.b, temp.additive[i]);

      OleOptions ole_opts;
      ole_opts.verifying = options.verifying;
      if (options.ole_fault && options.ole_fault->participant == j &&
          options.ole_fault->coordinate == i)
        ole_opts.fault = options.ole_fault->fault;
      OleResult res = ole_plus(sender, {chain.coords[j][i]}, ctx, rng, ole_opts);
      if (res.misbehavior_detected)
        throw Error(ErrorCode::kMisbehavior, "OLE+ misbehavior detected; evaluation aborted");
      out.outputs[j][i] = res.output;
      out.transcripts.push_back(std::move(res.transcript));
      out.puzzle.g[i] = ctx.add(out.puzzle.g[i], res.output);
    }
  }
  return out;
}

DensePoly unblind_theta(const EvalPuzzle& puzzle, const std::vector<mpz_class>& temporary_keys,
                        const FieldContext& ctx) {
  if (puzzle.g.size() != ctx.tbar())
    throw Error(ErrorCode::kMalformed, "evaluation puzzle width does not match tbar");
  for (const auto& v : puzzle.g)
    if (!ctx.is_reduced(v)) throw Error(ErrorCode::kMalformed, "evaluation value not reduced mod p");
  std::vector<mpz_class> z_sum(ctx.tbar(), 0);
  std::vector<mpz_class> w_prod(ctx.tbar(), 1);
  for (const auto& tk : temporary_keys) {
    const Blinding b = derive_blinding(tk, ctx);
    for (std::size_t i = 0; i < ctx.tbar(); ++i) {
      z_sum[i] = ctx.add(z_sum[i], b.additive[i]);
      w_prod[i] = ctx.mul(w_prod[i], b.multiplicative[i]);
    }
  }
  PointValuePoly points;
  for (std::size_t i = 0; i < ctx.tbar(); ++i)
    points.push_back({ctx.xs()[i], ctx.mul(ctx.inv(w_prod[i]), ctx.sub(puzzle.g[i], z_sum[i]))});
  return interpolate(points, ctx);
}

EvalSolveResult solve_combination(const EvalPuzzle& puzzle, const std::vector<EvalGrant>& grants,
                                  const FieldContext& ctx, int max_degree,
                                  std::stop_token cancel) {
  if (grants.empty()) throw Error(ErrorCode::kMalformed, "no evaluation grants");
  for (const auto& gr : grants)
    if (gr.modulus < 2 || gr.base < 1 || gr.base >= gr.modulus)
      throw Error(ErrorCode::kMalformed, "grant base outside [1, N)");

  EvalSolveResult out;
  // Different moduli share no work, so the runs are independent.
  std::vector<std::future<SquaringReport>> runs;
  for (const auto& gr : grants) {
    runs.push_back(std::async(std::launch::async, [&gr, cancel] {
      return sequential_square(gr.base, gr.squarings, gr.modulus, cancel);
    }));
  }
  std::vector<mpz_class> tks;
  for (auto& run : runs) {
    out.reports.push_back(run.get());
    tks.push_back(out.reports.back().result);
  }

  out.theta = unblind_theta(puzzle, tks, ctx);
  if (out.theta.is_zero())
    throw Error(ErrorCode::kDegenerate, "combination polynomial is identically zero");
  if (out.theta.degree() > max_degree)
    throw Error(ErrorCode::kMalformed, "combination polynomial has degree " +
                                           std::to_string(out.theta.degree()));

  const std::vector<mpz_class> candidates = find_roots(out.theta, ctx);
  std::vector<mpz_class> roots;
  for (std::size_t u = 0; u < grants.size(); ++u) {
    const mpz_class* match = nullptr;
    for (const auto& c : candidates)
      if (verify_commit(grants[u].commitment, c, tks[u])) match = &c;
    if (match == nullptr)
      throw Error(ErrorCode::kIntegrity, "no root matches commitment of grant " + std::to_string(u));
    roots.push_back(*match);
  }
  const mpz_class m = ctx.mul(out.theta.constant_term(), ctx.inv(root_denominator(roots, ctx)));
  out.bundle.solutions.push_back({m, 0});
  for (std::size_t u = 0; u < grants.size(); ++u)
    out.bundle.proofs.emplace_back(RootOpening{roots[u], tks[u]});
  return out;
}

EvalSolveResult solve_eval_sc(const EvalPuzzle& puzzle, const EvalGrant& grant,
                              const FieldContext& ctx, std::stop_token cancel) {
  return solve_combination(puzzle, {grant}, ctx, kSingleClientDegree, cancel);
}

VerifyOutcome verify_combination(const mpz_class& m, const std::vector<RootOpening>& openings,
                                 const EvalPuzzle& puzzle, const std::vector<EvalGrant>& grants,
                                 const FieldContext& ctx, int max_degree) {
  auto reject = [](std::string why) { return VerifyOutcome{false, std::move(why)}; };
  if (grants.empty() || openings.size() != grants.size())
    return reject("one root opening per grant is required");
  std::vector<mpz_class> roots, tks;
  for (std::size_t u = 0; u < grants.size(); ++u) {
    const RootOpening& op = openings[u];
    if (!verify_commit(grants[u].commitment, op.root, op.tk))
      return reject("commitment opening failed for grant " + std::to_string(u));
    if (!ctx.is_reduced(op.root) || op.root == 0) return reject("root outside F_p^*");
    roots.push_back(op.root);
    tks.push_back(op.tk);
  }
  if (!ctx.is_reduced(m)) return reject("result not reduced mod p");

  DensePoly theta;
  try {
    theta = unblind_theta(puzzle, tks, ctx);
  } catch (const Error& e) {
    return reject(e.what());
  }
  if (theta.degree() > max_degree) return reject("combination polynomial degree too high");
  for (const auto& r : roots)
    if (poly_eval(theta, r, ctx) != 0) return reject("committed root is not a root of theta");
  const mpz_class res = ctx.mul(theta.constant_term(), ctx.inv(root_denominator(roots, ctx)));
  if (res != m) return reject("final result mismatch");
  return {true, {}};
}

VerifyOutcome verify_eval_sc(const mpz_class& m, const RootOpening& opening,
                             const EvalPuzzle& puzzle, const EvalGrant& grant,
                             const FieldContext& ctx) {
  return verify_combination(m, {opening}, puzzle, {grant}, ctx, kSingleClientDegree);
}

}  // namespace mhtlp
