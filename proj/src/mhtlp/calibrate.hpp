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

#ifndef MHTLP_CALIBRATE_HPP_
#define MHTLP_CALIBRATE_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>

namespace mhtlp {

struct Calibration {
  std::uint64_t squarings_per_second = 0;
  std::size_t modulus_bits = 0;
  std::uint64_t squarings = 0;
  double seconds = 0;
};

// Measures sequential squaring throughput modulo n for roughly `duration`
// seconds. Throws kInvalidArgument when duration is not positive.
Calibration calibrate_maxss(const mpz_class& n, double duration);

}  // namespace mhtlp

#endif  // MHTLP_CALIBRATE_HPP_
