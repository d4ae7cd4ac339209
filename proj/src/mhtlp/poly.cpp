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

#include "mhtlp/poly.hpp"

#include <algorithm>

#include "mhtlp/error.hpp"

namespace mhtlp {
namespace {

void trim(std::vector<mpz_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

DensePoly make_monic(const DensePoly& a, const FieldContext& ctx) {
  if (a.is_zero()) return a;
  return poly_scale(a, ctx.inv(a.leading()), ctx);
}

DensePoly x_poly() { return DensePoly({0, 1}); }

void split_roots(const DensePoly& g, const FieldContext& ctx, std::vector<mpz_class>& out) {
  // g is monic, squarefree and a product of distinct linear factors.
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(ctx.neg(g.coeffs[0]));
    return;
  }
  const mpz_class half = (ctx.p() - 1) / 2;
  for (mpz_class shift = 0; shift < ctx.p(); ++shift) {
    const DensePoly base({ctx.reduce(shift), 1});
    DensePoly h = poly_powmod(base, half, g, ctx);
    h = poly_sub(h, DensePoly({1}), ctx);
    const DensePoly d = poly_gcd(h, g, ctx);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_roots(d, ctx, out);
      split_roots(poly_divmod(g, d, ctx).quotient, ctx, out);
      return;
    }
  }
  throw Error(ErrorCode::kInternal, "equal-degree splitting did not converge");
}

}  // namespace

DensePoly::DensePoly(std::vector<mpz_class> c) : coeffs(std::move(c)) { trim(coeffs); }

DensePoly poly_from_roots(const std::vector<mpz_class>& roots, const FieldContext& ctx) {
  DensePoly out({1});
  for (const auto& r : roots) out = poly_mul(out, DensePoly({ctx.neg(r), 1}), ctx);
  return out;
}

mpz_class poly_eval(const DensePoly& poly, const mpz_class& x, const FieldContext& ctx) {
  mpz_class acc = 0;
  for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it)
    acc = ctx.reduce(acc * x + *it);
  return acc;
}

DensePoly poly_add(const DensePoly& a, const DensePoly& b, const FieldContext& ctx) {
  std::vector<mpz_class> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_class v = 0;
    if (i < a.coeffs.size()) v += a.coeffs[i];
    if (i < b.coeffs.size()) v += b.coeffs[i];
    c[i] = ctx.reduce(v);
  }
  return DensePoly(std::move(c));
}

DensePoly poly_sub(const DensePoly& a, const DensePoly& b, const FieldContext& ctx) {
  return poly_add(a, poly_scale(b, ctx.p() - 1, ctx), ctx);
}

DensePoly poly_mul(const DensePoly& a, const DensePoly& b, const FieldContext& ctx) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  for (auto& v : c) v = ctx.reduce(v);
  return DensePoly(std::move(c));
}

DensePoly poly_scale(const DensePoly& a, const mpz_class& s, const FieldContext& ctx) {
  std::vector<mpz_class> c(a.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ctx.mul(a.coeffs[i], s);
  return DensePoly(std::move(c));
}

DivResult poly_divmod(const DensePoly& a, const DensePoly& b, const FieldContext& ctx) {
  if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {DensePoly(), a};
  std::vector<mpz_class> rem = a.coeffs;
  std::vector<mpz_class> quo(a.coeffs.size() - b.coeffs.size() + 1);
  const mpz_class lead_inv = ctx.inv(b.leading());
  const std::size_t db = b.coeffs.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const mpz_class factor = ctx.mul(rem[k + db], lead_inv);
    quo[k] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= db; ++j)
      rem[k + j] = ctx.reduce(rem[k + j] - factor * b.coeffs[j]);
  }
  rem.resize(db);
  return {DensePoly(std::move(quo)), DensePoly(std::move(rem))};
}

DensePoly poly_gcd(DensePoly a, DensePoly b, const FieldContext& ctx) {
  while (!b.is_zero()) {
    DensePoly r = poly_divmod(a, b, ctx).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, ctx);
}

DensePoly poly_powmod(const DensePoly& base, const mpz_class& e, const DensePoly& modulus,
                      const FieldContext& ctx) {
  if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative polynomial exponent");
  DensePoly result = poly_divmod(DensePoly({1}), modulus, ctx).remainder;
  const DensePoly b = poly_divmod(base, modulus, ctx).remainder;
  for (std::size_t bit = bit_length(e); bit-- > 0;) {
    result = poly_divmod(poly_mul(result, result, ctx), modulus, ctx).remainder;
    if (mpz_tstbit(e.get_mpz_t(), bit))
      result = poly_divmod(poly_mul(result, b, ctx), modulus, ctx).remainder;
  }
  return result;
}

PointValuePoly eval_at_xs(const DensePoly& poly, const FieldContext& ctx) {
  PointValuePoly out;
  out.reserve(ctx.tbar());
  for (const auto& x : ctx.xs()) out.push_back({x, poly_eval(poly, x, ctx)});
  return out;
}

DensePoly interpolate(const PointValuePoly& points, const FieldContext& ctx) {
  if (points.empty()) throw Error(ErrorCode::kInvalidArgument, "interpolation needs a point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (ctx.reduce(points[i].x) == ctx.reduce(points[j].x))
        throw Error(ErrorCode::kInvalidArgument, "duplicate x value in interpolation");

  DensePoly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    DensePoly basis({1});
    mpz_class denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = poly_mul(basis, DensePoly({ctx.neg(points[j].x), 1}), ctx);
      denom = ctx.mul(denom, ctx.sub(points[i].x, points[j].x));
    }
    result = poly_add(result, poly_scale(basis, ctx.mul(points[i].y, ctx.inv(denom)), ctx), ctx);
  }
  return result;
}

std::vector<mpz_class> find_roots(const DensePoly& poly, const FieldContext& ctx) {
  if (poly.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial has every root");
  std::vector<mpz_class> roots;
  if (poly.degree() == 0) return roots;

  const DensePoly f = make_monic(poly, ctx);
  if (ctx.p() == 2) {
    for (int v = 0; v < 2; ++v)
      if (poly_eval(f, v, ctx) == 0) roots.emplace_back(v);
    return roots;
  }
  // gcd(x^p - x, f) is the product of the distinct linear factors of f.
  const DensePoly xp = poly_powmod(x_poly(), ctx.p(), f, ctx);
  const DensePoly g = poly_gcd(poly_sub(xp, x_poly(), ctx), f, ctx);
  split_roots(g, ctx, roots);

  std::sort(roots.begin(), roots.end());
  for (const auto& r : roots) {
    if (poly_eval(poly, r, ctx) != 0)
      throw Error(ErrorCode::kInternal, "root finder produced a non-root");
  }
  return roots;
}

PointValuePoly scale_points(const PointValuePoly& points, const mpz_class& a,
                            const FieldContext& ctx) {
  PointValuePoly out = points;
  for (auto& pt : out) pt.y = ctx.mul(pt.y, a);
  return out;
}

}  // namespace mhtlp
