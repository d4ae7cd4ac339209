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

#include "mhtlp/chain.hpp"

#include "mhtlp/error.hpp"
#include "mhtlp/poly.hpp"
#include "mhtlp/squaring.hpp"

namespace mhtlp {

std::uint64_t TimeSchedule::cumulative(std::size_t j) const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i <= j; ++i) total += intervals.at(i);
  return total;
}

void TimeSchedule::validate() const {
  if (intervals.empty()) throw Error(ErrorCode::kInvalidArgument, "schedule has no puzzles");
  if (maxss == 0) throw Error(ErrorCode::kInvalidArgument, "maxss must be positive");
  for (auto d : intervals)
    if (d == 0) throw Error(ErrorCode::kInvalidArgument, "release intervals must be positive");
}

Blinding derive_blinding(const mpz_class& master_key, const FieldContext& ctx) {
  const PrfKey mk = PrfKey::from_element(master_key);
  const PrfKey k = PrfKey::from_element(prf(PrfLabel::kKdf, 1, mk, ctx));
  const PrfKey s = PrfKey::from_element(prf(PrfLabel::kKdf, 2, mk, ctx));
  Blinding out;
  for (std::size_t i = 1; i <= ctx.tbar(); ++i) {
    out.additive.push_back(prf(PrfLabel::kCoord, i, k, ctx));
    out.multiplicative.push_back(prf_nonzero(PrfLabel::kCoord, i, s, ctx));
  }
  return out;
}

mpz_class derive_next_base(const mpz_class& previous_key, std::uint64_t j, const mpz_class& n) {
  const PrfKey key = PrfKey::from_element(previous_key);
  return first_nonzero([&](std::uint8_t retry) -> mpz_class {
    mpz_class r = prf_mod(PrfLabel::kBase, j, key, n, retry);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return g == 1 ? r : mpz_class(0);
  });
}

GeneratedChain gen_puzzle(const std::vector<mpz_class>& messages, const RsaKeypair& keys,
                          const FieldContext& ctx, const TimeSchedule& schedule, Rng& rng) {
  schedule.validate();
  if (messages.size() != schedule.size())
    throw Error(ErrorCode::kInvalidArgument, "one release interval is needed per message");
  for (const auto& m : messages)
    if (!ctx.in_universe(m)) throw Error(ErrorCode::kInvalidArgument, "message outside the universe");
  validate_keypair(keys);

  GeneratedChain out;
  PuzzleChain& chain = out.chain;
  chain.modulus = keys.n;
  chain.schedule = schedule;
  chain.first_base = sample_unit(keys.n, rng);

  mpz_class base = chain.first_base;
  for (std::size_t j = 0; j < messages.size(); ++j) {
    if (j > 0) base = derive_next_base(out.master_keys.keys.back(), j + 1, keys.n);
    const mpz_class mk = trapdoor_power(base, schedule.squarings(j), keys);
    out.master_keys.keys.push_back(mk);

    const Blinding blind = derive_blinding(mk, ctx);
    std::vector<mpz_class> coords(ctx.tbar());
    for (std::size_t i = 0; i < ctx.tbar(); ++i) {
      const mpz_class pi = ctx.add(ctx.xs()[i], messages[j]);  // pi_j(x) = x + m_j
      coords[i] = ctx.mul(blind.multiplicative[i], ctx.add(pi, blind.additive[i]));
    }
    chain.coords.push_back(std::move(coords));
    chain.commitments.push_back(commit(messages[j], mk));
  }
  return out;
}

void validate_chain(const PuzzleChain& chain, const FieldContext& ctx) {
  if (chain.coords.empty() || chain.coords.size() != chain.commitments.size() ||
      chain.coords.size() != chain.schedule.size())
    throw Error(ErrorCode::kMalformed, "chain sizes are inconsistent");
  for (const auto& row : chain.coords) {
    if (row.size() != ctx.tbar()) throw Error(ErrorCode::kMalformed, "puzzle width does not match tbar");
    for (const auto& v : row)
      if (!ctx.is_reduced(v)) throw Error(ErrorCode::kMalformed, "coordinate not reduced mod p");
  }
  if (chain.modulus < 2 || chain.first_base < 1 || chain.first_base >= chain.modulus)
    throw Error(ErrorCode::kMalformed, "invalid modulus or first base");
  try {
    chain.schedule.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kMalformed, e.what());
  }
}

mpz_class decode_puzzle(const std::vector<mpz_class>& coords, const mpz_class& master_key,
                        const FieldContext& ctx) {
  const Blinding blind = derive_blinding(master_key, ctx);
  PointValuePoly points;
  for (std::size_t i = 0; i < ctx.tbar(); ++i) {
    const mpz_class pi =
        ctx.sub(ctx.mul(ctx.inv(blind.multiplicative[i]), coords[i]), blind.additive[i]);
    points.push_back({ctx.xs()[i], pi});
  }
  return interpolate(points, ctx).constant_term();
}

ChainSolveResult solve_chain(const PuzzleChain& chain, const FieldContext& ctx,
                             std::stop_token cancel) {
  validate_chain(chain, ctx);
  ChainSolveResult out;
  mpz_class base = chain.first_base;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    if (j > 0) {
      const mpz_class& prev = std::get<mpz_class>(out.bundle.proofs.back());
      base = derive_next_base(prev, j + 1, chain.modulus);
    }
    SquaringReport report;
    try {
      report = sequential_square(base, chain.schedule.squarings(j), chain.modulus, cancel);
    } catch (const CancelledError& e) {
      out.total_squarings += e.squarings_completed();
      return out;
    }
    out.squarings.push_back(report.squarings_performed);
    out.total_squarings += report.squarings_performed;
    const mpz_class m = decode_puzzle(chain.coords[j], report.result, ctx);
    out.bundle.solutions.push_back({m, j + 1});
    out.bundle.proofs.emplace_back(report.result);
  }
  out.complete = true;
  return out;
}

bool verify_client_solution(const mpz_class& message, const mpz_class& master_key,
                            const Commitment& com) {
  return verify_commit(com, message, master_key);
}

}  // namespace mhtlp
