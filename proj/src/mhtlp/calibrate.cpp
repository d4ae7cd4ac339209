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

#include "mhtlp/calibrate.hpp"

#include <algorithm>
#include <chrono>

#include "mhtlp/bytes.hpp"
#include "mhtlp/error.hpp"

namespace mhtlp {

Calibration calibrate_maxss(const mpz_class& n, double duration) {
  if (!(duration > 0)) throw Error(ErrorCode::kInvalidArgument, "duration must be positive");
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "modulus too small");
  constexpr std::uint64_t kBatch = 1024;
  using Clock = std::chrono::steady_clock;

  mpz_class x = 2;
  std::uint64_t done = 0;
  const auto start = Clock::now();
  double elapsed = 0;
  while (elapsed < duration) {
    for (std::uint64_t i = 0; i < kBatch; ++i) {
      mpz_mul(x.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
      mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    }
    done += kBatch;
    elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  }
  Calibration out;
  out.squarings = done;
  out.seconds = elapsed;
  out.modulus_bits = bit_length(n);
  out.squarings_per_second = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(done / elapsed));
  return out;
}

}  // namespace mhtlp
