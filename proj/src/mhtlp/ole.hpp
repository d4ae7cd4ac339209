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

#ifndef MHTLP_OLE_HPP_
#define MHTLP_OLE_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "mhtlp/field.hpp"
#include "mhtlp/rng.hpp"

namespace mhtlp {

struct OleSenderInput {
  mpz_class a;
  mpz_class b;
};

struct OleReceiverInput {
  mpz_class c;
};

// One inner call of the ideal functionality.
struct OleTranscriptEntry {
  std::string functionality;  // "ole.first" or "ole.second"
  std::string sender_role;    // which OLE+ party plays the inner sender
  mpz_class a;
  mpz_class b;
  mpz_class c;
  mpz_class output;
};
using OleTranscript = std::vector<OleTranscriptEntry>;

enum class OleFaultSlot { kFirstA, kFirstB, kSecondA, kSecondB };

// Adds `delta` to one inner input before it reaches the functionality.
struct OleFault {
  OleFaultSlot slot = OleFaultSlot::kSecondB;
  mpz_class delta;
};

struct OleOptions {
  std::optional<OleFault> fault;
  // Models a session in which the parties run their misbehavior checks.
  bool verifying = false;
};

struct OleResult {
  mpz_class output;
  OleTranscript transcript;
  bool misbehavior_detected = false;
};

// Receiver learns a*c + b.
mpz_class ideal_ole(const OleSenderInput& sender, const OleReceiverInput& receiver,
                    const FieldContext& ctx);

// Two-call OLE+ wrapper; `coins` supplies r (receiver) and u (sender).
// Throws kInvalidArgument when c = 0.
OleResult ole_plus(const OleSenderInput& sender, const OleReceiverInput& receiver,
                   const FieldContext& ctx, Rng& coins, const OleOptions& options = {});

}  // namespace mhtlp

#endif  // MHTLP_OLE_HPP_
