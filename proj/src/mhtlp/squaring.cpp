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

#include "mhtlp/squaring.hpp"

#include "mhtlp/error.hpp"

namespace mhtlp {

SquaringReport sequential_square(const mpz_class& base, std::uint64_t squarings,
                                 const mpz_class& n, std::stop_token cancel) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "modulus must exceed 1");
  if (base < 1 || base >= n) throw Error(ErrorCode::kInvalidArgument, "base must lie in [1, N)");
  SquaringReport report;
  report.result = base;
  mpz_ptr x = report.result.get_mpz_t();
  mpz_srcptr mod = n.get_mpz_t();
  for (std::uint64_t i = 0; i < squarings; ++i) {
    if (i % kCancelStride == 0 && cancel.stop_requested()) throw CancelledError(i);
    mpz_mul(x, x, x);
    mpz_mod(x, x, mod);
  }
  report.squarings_performed = squarings;
  return report;
}

}  // namespace mhtlp
