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

#include "mhtlp/error.hpp"
#include "mhtlp/poly.hpp"
#include "oracles.hpp"

namespace mhtlp {
namespace {

FieldOptions small() {
  FieldOptions o;
  o.allow_small_prime = true;
  return o;
}

FieldContext f97(std::size_t tbar = 3) { return FieldContext::create(97, tbar, {}, small()); }

std::vector<mpz_class> random_coeffs(Rng& rng, const mpz_class& p, std::size_t count) {
  std::vector<mpz_class> c;
  for (std::size_t i = 0; i < count; ++i) c.push_back(rng.below(p));
  return c;
}

TEST(FieldContext, SmallPrimeCoordinatesAreOutsideUniverse) {
  const FieldContext ctx = f97();
  ASSERT_EQ(ctx.xs().size(), 3u);
  EXPECT_EQ(ctx.universe_bound(), 48);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NE(ctx.xs()[i], 0);
    EXPECT_FALSE(ctx.in_universe(ctx.xs()[i]));
    for (std::size_t j = i + 1; j < 3; ++j) EXPECT_NE(ctx.xs()[i], ctx.xs()[j]);
  }
}

TEST(FieldContext, RealisticPrimeUsesTwoToThe64Bound) {
  Rng rng = Rng::from_seed(1);
  const FieldContext ctx = FieldContext::generate(128, 4, rng);
  const mpz_class two64 = mpz_class(1) << 64;
  EXPECT_EQ(ctx.universe_bound(), two64);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(ctx.xs()[i], two64 + 1 + i);
  EXPECT_TRUE(ctx.in_universe(two64 - 1));
  EXPECT_FALSE(ctx.in_universe(two64));
}

TEST(FieldContext, RejectsBadParameters) {
  const mpz_class mersenne127 = (mpz_class(1) << 127) - 1;
  try {
    FieldContext::create(mersenne127, 3);
    FAIL() << "127-bit prime accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  EXPECT_THROW(FieldContext::create(91, 3, {}, small()), Error);  // 7 * 13
  EXPECT_THROW(FieldContext::create(97, 2, {}, small()), Error);
  EXPECT_THROW(FieldContext::create(5, 3, {}, small()), Error);   // no room for coordinates
  const mpz_class mersenne521 = (mpz_class(1) << 521) - 1;
  EXPECT_NO_THROW(FieldContext::create(mersenne521, 3));
}

TEST(FieldContext, DeterministicForSameInputs) {
  const Bytes seed = {0};
  EXPECT_EQ(FieldContext::create(97, 3, seed, small()).xs(),
            FieldContext::create(97, 3, seed, small()).xs());
}

TEST(FieldContext, ArithmeticBasics) {
  const FieldContext ctx = f97();
  EXPECT_EQ(ctx.add(90, 10), 3);
  EXPECT_EQ(ctx.sub(3, 10), 90);
  EXPECT_EQ(ctx.mul(ctx.inv(5), 5), 1);
  EXPECT_EQ(ctx.neg(0), 0);
  EXPECT_THROW(ctx.inv(0), Error);
  EXPECT_EQ(ctx.reduce(-1), 96);
}

TEST(PolyEval, Examples) {
  const FieldContext ctx = f97();
  EXPECT_EQ(poly_eval(DensePoly({3, 1}), 1, ctx), 4);
  EXPECT_EQ(poly_eval(DensePoly(), 55, ctx), 0);
}

TEST(PolyEval, MatchesPowerSumOracle) {
  Rng rng = Rng::from_seed(2);
  const FieldContext ctx = FieldContext::generate(128, 3, rng);
  const auto coeffs = random_coeffs(rng, ctx.p(), 5);
  for (int k = 0; k < 10; ++k) {
    const mpz_class x = rng.below(ctx.p());
    EXPECT_EQ(poly_eval(DensePoly(coeffs), x, ctx), oracle::power_sum(coeffs, x, ctx.p()));
  }
}

TEST(Interpolate, Examples) {
  const FieldContext ctx = f97();
  EXPECT_EQ(interpolate({{1, 4}, {2, 5}, {3, 6}}, ctx), DensePoly({3, 1}));
  EXPECT_EQ(interpolate({{1, 5}, {2, 5}, {3, 5}}, ctx), DensePoly({5}));
  EXPECT_THROW(interpolate({{1, 5}, {1, 6}}, ctx), Error);
  EXPECT_THROW(interpolate({}, ctx), Error);
}

TEST(Interpolate, RoundTripAndVandermondeOracle) {
  Rng rng = Rng::from_seed(3);
  for (std::size_t tbar : {3u, 4u, 6u}) {
    const FieldContext ctx = FieldContext::generate(130, tbar, rng);
    for (int trial = 0; trial < 25; ++trial) {
      const DensePoly q(random_coeffs(rng, ctx.p(), tbar));
      const PointValuePoly pts = eval_at_xs(q, ctx);
      EXPECT_EQ(interpolate(pts, ctx), q);
      std::vector<mpz_class> ys;
      for (const auto& pt : pts) ys.push_back(pt.y);
      EXPECT_EQ(oracle::vandermonde_solve(ctx.xs(), ys, ctx.p()), q.coeffs);
    }
  }
}

TEST(FindRoots, Examples) {
  const FieldContext ctx = f97();
  const DensePoly two_roots = poly_mul(DensePoly({ctx.neg(10), 1}), DensePoly({ctx.neg(20), 1}), ctx);
  EXPECT_EQ(find_roots(two_roots, ctx), (std::vector<mpz_class>{10, 20}));
  EXPECT_EQ(find_roots(DensePoly({3, 1}), ctx), (std::vector<mpz_class>{94}));
  // x^2 - 5 has no root: 5 is a non-residue mod 97.
  const DensePoly irreducible({ctx.neg(5), 0, 1});
  EXPECT_TRUE(oracle::exhaustive_roots(irreducible.coeffs, 97).empty());
  EXPECT_TRUE(find_roots(irreducible, ctx).empty());
  EXPECT_THROW(find_roots(DensePoly(), ctx), Error);
  EXPECT_TRUE(find_roots(DensePoly({7}), ctx).empty());
}

TEST(FindRoots, RepeatedRootsReportedOnce) {
  const FieldContext ctx = f97();
  const DensePoly p = poly_from_roots({5, 5, 5, 9}, ctx);
  EXPECT_EQ(find_roots(p, ctx), (std::vector<mpz_class>{5, 9}));
}

TEST(FindRoots, ExhaustiveAgreementOverSmallFields) {
  Rng rng = Rng::from_seed(4);
  for (unsigned long p : {97ul, 101ul, 7919ul}) {
    const FieldContext ctx = FieldContext::create(p, 3, {}, small());
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t degree = 1 + rng.next_u64() % 6;
      std::vector<mpz_class> c = random_coeffs(rng, p, degree + 1);
      if (c.back() == 0) c.back() = 1;
      const DensePoly poly(c);
      const auto roots = find_roots(poly, ctx);
      EXPECT_EQ(roots, oracle::exhaustive_roots(poly.coeffs, p)) << "p=" << p;
      // The product of (x - r) over the returned set divides the polynomial.
      EXPECT_TRUE(poly_divmod(poly, poly_from_roots(roots, ctx), ctx).remainder.is_zero());
    }
  }
}

TEST(FindRoots, LargeFieldPlantedRoots) {
  Rng rng = Rng::from_seed(5);
  const FieldContext ctx = FieldContext::generate(256, 3, rng);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<mpz_class> planted = {rng.below(ctx.p()), rng.below(ctx.p()), rng.below(ctx.p())};
    DensePoly poly = poly_from_roots(planted, ctx);
    poly = poly_mul(poly, DensePoly({1, 0, 1}), ctx);  // may add roots only if -1 is a square
    const auto roots = find_roots(poly, ctx);
    for (const auto& r : planted) EXPECT_NE(std::find(roots.begin(), roots.end(), r), roots.end());
    for (const auto& r : roots) EXPECT_EQ(poly_eval(poly, r, ctx), 0);
  }
}

TEST(ScalePoints, Examples) {
  Rng rng = Rng::from_seed(6);
  const FieldContext ctx = FieldContext::generate(128, 3, rng);
  const DensePoly q(random_coeffs(rng, ctx.p(), 3));
  const PointValuePoly pts = eval_at_xs(q, ctx);
  for (const auto& pt : scale_points(pts, 0, ctx)) EXPECT_EQ(pt.y, 0);
  EXPECT_EQ(scale_points(pts, 1, ctx), pts);
  EXPECT_EQ(interpolate(scale_points(pts, 7, ctx), ctx), poly_scale(q, 7, ctx));
}

TEST(ProductOfRoots, ConstantTermStructure) {
  Rng rng = Rng::from_seed(7);
  const FieldContext ctx = FieldContext::generate(128, 3, rng);
  for (int trial = 0; trial < 50; ++trial) {
    const mpz_class rho = rng.below(ctx.p());
    const std::size_t z = 1 + trial % 4;
    DensePoly sum;
    mpz_class weighted = 0;
    for (std::size_t j = 0; j < z; ++j) {
      const mpz_class q = rng.below(ctx.p());
      const mpz_class m = rng.below(ctx.universe_bound());
      sum = poly_add(sum, poly_scale(DensePoly({m, 1}), q, ctx), ctx);
      weighted = ctx.add(weighted, ctx.mul(q, m));
    }
    const DensePoly theta = poly_mul(DensePoly({ctx.neg(rho), 1}), sum, ctx);
    const DensePoly back = interpolate(eval_at_xs(theta, ctx), ctx);
    EXPECT_EQ(back.constant_term(), ctx.mul(ctx.neg(rho), weighted));
  }
}

TEST(PolyDivision, QuotientTimesDivisorPlusRemainder) {
  Rng rng = Rng::from_seed(8);
  const FieldContext ctx = FieldContext::generate(128, 3, rng);
  for (int trial = 0; trial < 30; ++trial) {
    const DensePoly a(random_coeffs(rng, ctx.p(), 7));
    DensePoly b(random_coeffs(rng, ctx.p(), 3));
    if (b.is_zero()) continue;
    const DivResult d = poly_divmod(a, b, ctx);
    EXPECT_LT(d.remainder.degree(), b.degree());
    EXPECT_EQ(poly_add(poly_mul(d.quotient, b, ctx), d.remainder, ctx), a);
  }
  EXPECT_THROW(poly_divmod(DensePoly({1}), DensePoly(), ctx), Error);
}

}  // namespace
}  // namespace mhtlp
