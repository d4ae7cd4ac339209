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

#include "mhtlp/ole.hpp"

#include "mhtlp/error.hpp"

namespace mhtlp {

mpz_class ideal_ole(const OleSenderInput& sender, const OleReceiverInput& receiver,
                    const FieldContext& ctx) {
  return ctx.add(ctx.mul(sender.a, receiver.c), ctx.reduce(sender.b));
}

OleResult ole_plus(const OleSenderInput& sender, const OleReceiverInput& receiver,
                   const FieldContext& ctx, Rng& coins, const OleOptions& options) {
  const mpz_class c = ctx.reduce(receiver.c);
  if (c == 0) throw Error(ErrorCode::kInvalidArgument, "OLE+ receiver input must be nonzero");
  const mpz_class a = ctx.reduce(sender.a);
  const mpz_class b = ctx.reduce(sender.b);

  auto perturb = [&](OleFaultSlot slot, const mpz_class& v) {
    if (options.fault && options.fault->slot == slot) return ctx.add(v, ctx.reduce(options.fault->delta));
    return v;
  };

  OleResult result;
  const mpz_class r = coins.below(ctx.p());
  const mpz_class u = coins.below(ctx.p());

  // First call: the OLE+ receiver sends (c^-1, r), the OLE+ sender inputs u.
  OleSenderInput first{perturb(OleFaultSlot::kFirstA, ctx.inv(c)),
                       perturb(OleFaultSlot::kFirstB, r)};
  const mpz_class t = ideal_ole(first, {u}, ctx);
  result.transcript.push_back({"ole.first", "receiver", first.a, first.b, u, t});

  // Second call: the OLE+ sender sends (t + a, b - u), the receiver inputs c.
  OleSenderInput second{perturb(OleFaultSlot::kSecondA, ctx.add(t, a)),
                        perturb(OleFaultSlot::kSecondB, ctx.sub(b, u))};
  const mpz_class k = ideal_ole(second, {c}, ctx);
  result.transcript.push_back({"ole.second", "sender", second.a, second.b, c, k});

  result.output = ctx.sub(k, ctx.mul(r, c));
  result.misbehavior_detected = options.fault.has_value() && options.verifying;
  return result;
}

}  // namespace mhtlp
