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

#ifndef MHTLP_SQUARING_HPP_
#define MHTLP_SQUARING_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <stop_token>

namespace mhtlp {

inline constexpr std::uint64_t kCancelStride = std::uint64_t{1} << 16;

struct SquaringReport {
  mpz_class result;
  std::uint64_t squarings_performed = 0;
};

// base^(2^T) mod n by T sequential squarings. The stop token is polled every
// kCancelStride squarings; a stop request raises CancelledError.
SquaringReport sequential_square(const mpz_class& base, std::uint64_t squarings,
                                 const mpz_class& n, std::stop_token cancel = {});

}  // namespace mhtlp

#endif  // MHTLP_SQUARING_HPP_
