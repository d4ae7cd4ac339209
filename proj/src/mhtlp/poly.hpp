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

#ifndef MHTLP_POLY_HPP_
#define MHTLP_POLY_HPP_

#include <gmpxx.h>

#include <vector>

#include "mhtlp/field.hpp"

namespace mhtlp {

/// Dense polynomial, lowest degree first. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
struct DensePoly {
  std::vector<mpz_class> coeffs;

  DensePoly() = default;
  explicit DensePoly(std::vector<mpz_class> c);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  mpz_class constant_term() const { return coeffs.empty() ? mpz_class(0) : coeffs[0]; }
  const mpz_class& leading() const { return coeffs.back(); }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;
};

struct Point {
  mpz_class x;
  mpz_class y;

  friend bool operator==(const Point&, const Point&) = default;
};
using PointValuePoly = std::vector<Point>;

DensePoly poly_from_roots(const std::vector<mpz_class>& roots, const FieldContext& ctx);
mpz_class poly_eval(const DensePoly& poly, const mpz_class& x, const FieldContext& ctx);
DensePoly poly_add(const DensePoly& a, const DensePoly& b, const FieldContext& ctx);
DensePoly poly_sub(const DensePoly& a, const DensePoly& b, const FieldContext& ctx);
DensePoly poly_mul(const DensePoly& a, const DensePoly& b, const FieldContext& ctx);
DensePoly poly_scale(const DensePoly& a, const mpz_class& s, const FieldContext& ctx);

struct DivResult {
  DensePoly quotient;
  DensePoly remainder;
};
// Throws kInvalidArgument when dividing by the zero polynomial.
DivResult poly_divmod(const DensePoly& a, const DensePoly& b, const FieldContext& ctx);
// Monic gcd; gcd(0, 0) = 0.
DensePoly poly_gcd(DensePoly a, DensePoly b, const FieldContext& ctx);
// base^e mod modulus.
DensePoly poly_powmod(const DensePoly& base, const mpz_class& e, const DensePoly& modulus,
                      const FieldContext& ctx);

// Evaluations at the context coordinates.
PointValuePoly eval_at_xs(const DensePoly& poly, const FieldContext& ctx);

// Lagrange interpolation. Throws kInvalidArgument on an empty input or a
// repeated x value.
DensePoly interpolate(const PointValuePoly& points, const FieldContext& ctx);

// All roots in F_p, ascending and without repetition. Uses x^p - x gcd and
// equal-degree splitting; every returned root is checked by evaluation.
// Throws kInvalidArgument for the zero polynomial.
std::vector<mpz_class> find_roots(const DensePoly& poly, const FieldContext& ctx);

PointValuePoly scale_points(const PointValuePoly& points, const mpz_class& a,
                            const FieldContext& ctx);

}  // namespace mhtlp

#endif  // MHTLP_POLY_HPP_
