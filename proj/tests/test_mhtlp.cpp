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

#include <gtest/gtest.h>

#include <thread>

#include "fixtures.hpp"
#include "mhtlp/error.hpp"
#include "mhtlp/mh_tlp.hpp"
#include "mhtlp/prf.hpp"
#include "oracles.hpp"

namespace mhtlp {
namespace {

using fixture::Client;
using fixture::make_client;

FieldContext field(std::uint64_t seed = 41, std::size_t bits = 128) {
  Rng rng = Rng::from_seed(seed);
  return FieldContext::generate(bits, 3, rng);
}

ScEvaluation evaluate(const Client& c, const std::vector<mpz_class>& q, const FieldContext& ctx,
                      Rng& rng, std::uint64_t delay = 2, const EvalOptions& opts = {}) {
  return evaluate_sc(c.generated.chain, c.generated.master_keys, c.keys, q, ctx, delay, rng, opts);
}

mpz_class combination(const std::vector<mpz_class>& q, const std::vector<mpz_class>& m,
                      const mpz_class& p) {
  mpz_class acc = 0;
  for (std::size_t j = 0; j < q.size(); ++j) acc += q[j] * m[j];
  return oracle::mod(acc, p);
}

TEST(GenPuzzle, SinglePuzzleSolvesWithExactCount) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(1);
  const Client c = make_client({5}, {4}, ctx, rng);
  const ChainSolveResult r = solve_chain(c.generated.chain, ctx);
  ASSERT_TRUE(r.complete);
  ASSERT_EQ(r.bundle.solutions.size(), 1u);
  EXPECT_EQ(r.bundle.solutions[0], (Solution{5, 1}));
  EXPECT_EQ(r.total_squarings, 4u);
  // The first master key is r_1^(2^T_1), computed independently.
  EXPECT_EQ(c.generated.master_keys.keys[0],
            oracle::naive_square(c.generated.chain.first_base, 4, c.keys.n));
  EXPECT_EQ(std::get<mpz_class>(r.bundle.proofs[0]), c.generated.master_keys.keys[0]);
}

TEST(GenPuzzle, CoordinatesFollowTheBlindingFormula) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(2);
  const Client c = make_client({1, 2, 3}, {3, 5, 2}, ctx, rng);
  const auto& chain = c.generated.chain;
  const auto& mks = c.generated.master_keys.keys;
  ASSERT_EQ(chain.size(), 3u);
  ASSERT_EQ(chain.commitments.size(), 3u);
  mpz_class base = chain.first_base;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j > 0) {
      base = derive_next_base(mks[j - 1], j + 1, c.keys.n);
      EXPECT_EQ(base, oracle::mod(prf_mod(PrfLabel::kBase, j + 1, PrfKey::from_element(mks[j - 1]),
                                          c.keys.n),
                                  c.keys.n))
          << "base was resampled; unlikely for a random modulus";
    }
    EXPECT_EQ(mks[j], oracle::naive_square(base, chain.schedule.squarings(j), c.keys.n));
    const PrfKey mk = PrfKey::from_element(mks[j]);
    const PrfKey k = PrfKey::from_element(prf(PrfLabel::kKdf, 1, mk, ctx));
    const PrfKey s = PrfKey::from_element(prf(PrfLabel::kKdf, 2, mk, ctx));
    for (std::size_t i = 0; i < 3; ++i) {
      const mpz_class z = prf(PrfLabel::kCoord, i + 1, k, ctx);
      const mpz_class w = prf_nonzero(PrfLabel::kCoord, i + 1, s, ctx);
      const mpz_class pi = ctx.xs()[i] + c.messages[j];
      EXPECT_EQ(chain.coords[j][i], oracle::mod(w * (pi + z), ctx.p()));
    }
    EXPECT_TRUE(verify_client_solution(c.messages[j], mks[j], chain.commitments[j]));
  }
}

TEST(GenPuzzle, DeterministicUnderFixedCoins) {
  const FieldContext ctx = field();
  Rng a = Rng::from_seed(3), b = Rng::from_seed(3);
  const Client x = make_client({10, 20}, {4, 4}, ctx, a);
  const Client y = make_client({10, 20}, {4, 4}, ctx, b);
  EXPECT_EQ(x.generated.chain, y.generated.chain);
  EXPECT_EQ(x.generated.master_keys.keys, y.generated.master_keys.keys);
}

TEST(GenPuzzle, RejectsBadInputs) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(4);
  const RsaKeypair keys = rsa_keygen(64, rng);
  EXPECT_THROW(gen_puzzle({ctx.universe_bound()}, keys, ctx, {{4}, 1}, rng), Error);
  EXPECT_THROW(gen_puzzle({mpz_class(-1)}, keys, ctx, {{4}, 1}, rng), Error);
  EXPECT_THROW(gen_puzzle({1}, keys, ctx, {{0}, 1}, rng), Error);
  EXPECT_THROW(gen_puzzle({}, keys, ctx, {{}, 1}, rng), Error);
  EXPECT_THROW(gen_puzzle({1, 2}, keys, ctx, {{4}, 1}, rng), Error);
}

TEST(SolveChain, SquaringsAreIncrementalNotCumulative) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(5);
  const Client c = make_client({7, 8, 9}, {4, 4, 4}, ctx, rng);
  const ChainSolveResult r = solve_chain(c.generated.chain, ctx);
  EXPECT_EQ(r.total_squarings, 12u);
  EXPECT_EQ(r.squarings, (std::vector<std::uint64_t>{4, 4, 4}));
}

TEST(SolveChain, SavesOverIndependentPuzzles) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(6);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t z = 1 + rng.next_u64() % 5;
    std::vector<std::uint64_t> gaps;
    for (std::size_t j = 0; j < z; ++j) gaps.push_back(1 + rng.next_u64() % 6);
    const std::uint64_t maxss = 1 + rng.next_u64() % 3;
    const Client c = make_client(fixture::random_messages(z, ctx, rng), gaps, ctx, rng, 64, maxss);
    const ChainSolveResult r = solve_chain(c.generated.chain, ctx);
    std::uint64_t traditional = 0, cumulative = 0, saved = 0;
    for (std::size_t j = 0; j < z; ++j) {
      cumulative += gaps[j];
      traditional += maxss * cumulative;
    }
    for (std::size_t j = 0; j + 1 < z; ++j) saved += maxss * gaps[j] * (z - 1 - j);
    EXPECT_EQ(traditional - r.total_squarings, saved);
    for (std::size_t j = 0; j < z; ++j) EXPECT_EQ(r.bundle.solutions[j].value, c.messages[j]);
  }
}

TEST(SolveChain, RandomRunsRecoverMessages) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Client c = make_client(fixture::random_messages(3, ctx, rng), {2, 3, 1}, ctx, rng);
    const ChainSolveResult r = solve_chain(c.generated.chain, ctx);
    ASSERT_TRUE(r.complete);
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(r.bundle.solutions[j], (Solution{c.messages[j], j + 1}));
      EXPECT_TRUE(verify_client_solution(r.bundle.solutions[j].value,
                                         std::get<mpz_class>(r.bundle.proofs[j]),
                                         c.generated.chain.commitments[j]));
    }
  }
}

TEST(SolveChain, CancellationReturnsPrefix) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(8);
  const Client c = make_client({1, 2}, {4, std::uint64_t{1} << 40}, ctx, rng, 256);
  std::stop_source source;
  std::thread stopper([&] {
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
    source.request_stop();
  });
  const ChainSolveResult r = solve_chain(c.generated.chain, ctx, source.get_token());
  stopper.join();
  EXPECT_FALSE(r.complete);
  ASSERT_EQ(r.bundle.solutions.size(), 1u);
  EXPECT_EQ(r.bundle.solutions[0].value, 1);
  EXPECT_GE(r.total_squarings, 4u);
}

TEST(ClientSolution, OpeningChecks) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(9);
  const Client c = make_client({11}, {3}, ctx, rng);
  const mpz_class& mk = c.generated.master_keys.keys[0];
  const Commitment& com = c.generated.chain.commitments[0];
  EXPECT_TRUE(verify_client_solution(11, mk, com));
  EXPECT_FALSE(verify_client_solution(12, mk, com));
  EXPECT_FALSE(verify_client_solution(11, mk + 1, com));
}

TEST(ChainBinding, AlteredCoordinateChangesMessageAndFailsOpening) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(10);
  for (int trial = 0; trial < 20; ++trial) {
    Client c = make_client({3, 4}, {2, 2}, ctx, rng);
    PuzzleChain chain = c.generated.chain;
    const std::size_t j = rng.next_u64() % 2, i = rng.next_u64() % 3;
    chain.coords[j][i] = ctx.add(chain.coords[j][i], rng.between(1, ctx.p()));
    const ChainSolveResult r = solve_chain(chain, ctx);
    EXPECT_EQ(std::get<mpz_class>(r.bundle.proofs[j]), c.generated.master_keys.keys[j]);
    EXPECT_NE(r.bundle.solutions[j].value, c.messages[j]);
    EXPECT_FALSE(verify_client_solution(r.bundle.solutions[j].value,
                                        std::get<mpz_class>(r.bundle.proofs[j]),
                                        chain.commitments[j]));
  }
}

TEST(EvaluateSc, SingleCoefficientDecodes) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(11);
  const Client c = make_client({9}, {4}, ctx, rng);
  const ScEvaluation ev = evaluate(c, {1}, ctx, rng);
  const EvalSolveResult r = solve_eval_sc(ev.puzzle, ev.grant, ctx);
  EXPECT_EQ(r.bundle.solutions[0].value, 9);
  EXPECT_EQ(std::get<RootOpening>(r.bundle.proofs[0]), (RootOpening{ev.secrets.root, ev.secrets.tk}));
  EXPECT_EQ(r.reports[0].squarings_performed, 2u);
  EXPECT_TRUE(verify_eval_sc(9, {ev.secrets.root, ev.secrets.tk}, ev.puzzle, ev.grant, ctx));
  // A single puzzle has no zero-sum keys and zero masks.
  EXPECT_TRUE(ev.secrets.zero_sum_keys.empty());
  for (const auto& v : ev.secrets.y[0]) EXPECT_EQ(v, 0);
}

TEST(EvaluateSc, TwoPuzzleExample) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(12);
  const Client c = make_client({5, 7}, {4, 4}, ctx, rng);
  const ScEvaluation ev = evaluate(c, {2, 3}, ctx, rng);
  const EvalSolveResult r = solve_eval_sc(ev.puzzle, ev.grant, ctx);
  EXPECT_EQ(r.bundle.solutions[0], (Solution{31, 0}));
  const RootOpening opening = std::get<RootOpening>(r.bundle.proofs[0]);
  EXPECT_TRUE(verify_eval_sc(31, opening, ev.puzzle, ev.grant, ctx));
  EXPECT_FALSE(verify_eval_sc(32, opening, ev.puzzle, ev.grant, ctx));
  EXPECT_FALSE(verify_eval_sc(31, {opening.root, opening.tk + 1}, ev.puzzle, ev.grant, ctx));
  EXPECT_FALSE(verify_eval_sc(31, {opening.root + 1, opening.tk}, ev.puzzle, ev.grant, ctx));
}

TEST(EvaluateSc, AllZeroCoefficientsAreDegenerate) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(13);
  const Client c = make_client({5, 7}, {4, 4}, ctx, rng);
  const ScEvaluation ev = evaluate(c, {0, 0}, ctx, rng);
  try {
    solve_eval_sc(ev.puzzle, ev.grant, ctx);
    FAIL() << "expected a degenerate-combination error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerate);
  }
  EXPECT_TRUE(verify_eval_sc(0, {ev.secrets.root, ev.secrets.tk}, ev.puzzle, ev.grant, ctx));
  EXPECT_FALSE(verify_eval_sc(1, {ev.secrets.root, ev.secrets.tk}, ev.puzzle, ev.grant, ctx));
}

TEST(EvaluateSc, CoefficientsSummingToZeroStillDecode) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(14);
  const Client c = make_client({5, 7}, {4, 4}, ctx, rng);
  const ScEvaluation ev = evaluate(c, {1, ctx.p() - 1}, ctx, rng);
  const EvalSolveResult r = solve_eval_sc(ev.puzzle, ev.grant, ctx);
  EXPECT_EQ(r.bundle.solutions[0].value, ctx.p() - 2);
  EXPECT_EQ(r.theta.degree(), 1);
}

TEST(EvaluateSc, ZeroDelayUsesBaseAsKey) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(15);
  const Client c = make_client({5}, {4}, ctx, rng);
  const ScEvaluation ev = evaluate(c, {3}, ctx, rng, 0);
  EXPECT_EQ(ev.grant.squarings, 0u);
  EXPECT_EQ(ev.secrets.tk, ev.grant.base);
  const EvalSolveResult r = solve_eval_sc(ev.puzzle, ev.grant, ctx);
  EXPECT_EQ(r.bundle.solutions[0].value, 15);
  EXPECT_EQ(r.reports[0].squarings_performed, 0u);
}

TEST(EvaluateSc, DelayMustPrecedeFirstRelease) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(16);
  const Client c = make_client({5, 6}, {4, 1}, ctx, rng);
  EXPECT_THROW(evaluate(c, {1, 1}, ctx, rng, 4), Error);
  EXPECT_NO_THROW(evaluate(c, {1, 1}, ctx, rng, 3));
  EXPECT_THROW(evaluate(c, {1}, ctx, rng, 1), Error);
  EXPECT_THROW(evaluate(c, {1, ctx.p()}, ctx, rng, 1), Error);
}

TEST(EvaluateSc, TemporaryKeyMatchesOracle) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(17);
  const Client c = make_client({5, 6}, {9, 1}, ctx, rng, 64, 3);
  const ScEvaluation ev = evaluate(c, {1, 1}, ctx, rng, 2);
  EXPECT_EQ(ev.grant.squarings, 6u);
  EXPECT_EQ(ev.secrets.tk, oracle::naive_square(ev.grant.base, 6, c.keys.n));
  EXPECT_EQ(ev.grant.commitment, commit(ev.secrets.root, ev.secrets.tk));
  EXPECT_NE(ev.secrets.root, 0);
  for (const auto& x : ctx.xs()) EXPECT_NE(ev.secrets.root, x);
}

TEST(EvaluateSc, OleMisbehavior) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(18);
  const Client c = make_client({5, 7}, {4, 4}, ctx, rng);
  EvalOptions opts;
  opts.ole_fault = OleFaultTarget{1, 2, OleFault{OleFaultSlot::kSecondB, 1}};
  try {
    evaluate(c, {2, 3}, ctx, rng, 2, opts);
    FAIL() << "expected abort";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMisbehavior);
  }
  // Unchecked, the shift lands in g and the root check catches it.
  opts.verifying = false;
  const ScEvaluation ev = evaluate(c, {2, 3}, ctx, rng, 2, opts);
  EXPECT_THROW(solve_eval_sc(ev.puzzle, ev.grant, ctx), Error);
  EXPECT_FALSE(verify_eval_sc(31, {ev.secrets.root, ev.secrets.tk}, ev.puzzle, ev.grant, ctx));
}

// Property tests over random chains.

TEST(Properties, ZeroSumMasks) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(19);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t z = 1 + rng.next_u64() % 5;
    const Client c = make_client(fixture::random_messages(z, ctx, rng),
                                 std::vector<std::uint64_t>(z, 2), ctx, rng);
    const ScEvaluation ev = evaluate(c, fixture::random_coeffs(z, ctx, rng), ctx, rng, 1);
    ASSERT_EQ(ev.secrets.y.size(), z);
    EXPECT_EQ(ev.secrets.zero_sum_keys.size(), z - 1);
    for (std::size_t i = 0; i < ctx.tbar(); ++i) {
      mpz_class sum = 0;
      for (std::size_t j = 0; j < z; ++j) sum += ev.secrets.y[j][i];
      EXPECT_EQ(oracle::mod(sum, ctx.p()), 0);
    }
  }
}

TEST(Properties, ThetaMatchesExpandedOracle) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(20);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t z = 1 + rng.next_u64() % 4;
    const Client c = make_client(fixture::random_messages(z, ctx, rng),
                                 std::vector<std::uint64_t>(z, 3), ctx, rng);
    const auto q = fixture::random_coeffs(z, ctx, rng);
    const ScEvaluation ev = evaluate(c, q, ctx, rng, 1);
    const DensePoly theta = unblind_theta(ev.puzzle, {ev.secrets.tk}, ctx);
    EXPECT_EQ(theta.coeffs, oracle::expanded_theta({ev.secrets.root}, q, c.messages, ctx.p()));
    const EvalSolveResult r = solve_eval_sc(ev.puzzle, ev.grant, ctx);
    EXPECT_EQ(r.bundle.solutions[0].value, combination(q, c.messages, ctx.p()));
    EXPECT_TRUE(verify_eval_sc(r.bundle.solutions[0].value,
                               std::get<RootOpening>(r.bundle.proofs[0]), ev.puzzle, ev.grant, ctx));
  }
}

TEST(Properties, TamperedPuzzleRejected) {
  const FieldContext ctx = field();
  Rng rng = Rng::from_seed(21);
  const Client c = make_client({5, 7, 11}, {2, 2, 2}, ctx, rng);
  const std::vector<mpz_class> q = {4, 5, 6};
  const ScEvaluation ev = evaluate(c, q, ctx, rng, 1);
  const mpz_class m = combination(q, c.messages, ctx.p());
  const RootOpening opening{ev.secrets.root, ev.secrets.tk};
  ASSERT_TRUE(verify_eval_sc(m, opening, ev.puzzle, ev.grant, ctx));
  for (int trial = 0; trial < 500; ++trial) {
    EvalPuzzle bad = ev.puzzle;
    const unsigned mask = 1 + static_cast<unsigned>(rng.next_u64() % 7);
    for (std::size_t i = 0; i < 3; ++i)
      if (mask & (1u << i)) bad.g[i] = ctx.add(bad.g[i], rng.between(1, ctx.p()));
    EXPECT_FALSE(verify_eval_sc(m, opening, bad, ev.grant, ctx));
  }
  EvalPuzzle plus_one = ev.puzzle;
  plus_one.g[0] = ctx.add(plus_one.g[0], 1);
  EXPECT_THROW(solve_eval_sc(plus_one, ev.grant, ctx), Error);
}

TEST(Properties, SameCoinsSameEvaluation) {
  const FieldContext ctx = field();
  Rng setup = Rng::from_seed(22);
  const Client c = make_client({5, 7}, {4, 4}, ctx, setup);
  Rng a = Rng::from_seed(23), b = Rng::from_seed(23);
  const ScEvaluation x = evaluate(c, {2, 3}, ctx, a);
  const ScEvaluation y = evaluate(c, {2, 3}, ctx, b);
  EXPECT_EQ(x.puzzle, y.puzzle);
  EXPECT_EQ(x.grant, y.grant);
}

}  // namespace
}  // namespace mhtlp
