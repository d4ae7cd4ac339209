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

#ifndef MHTLP_ERROR_HPP_
#define MHTLP_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mhtlp {

enum class ErrorCode {
  kInvalidArgument,  // precondition violated by the caller
  kMalformed,        // artifact does not have the expected shape
  kIntegrity,        // a commitment or root check failed while solving
  kDegenerate,       // combination polynomial is identically zero
  kMisbehavior,      // OLE+ detected a misbehaving counterpart
  kCancelled,        // cooperative cancellation observed
  kInternal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by long-running squaring loops when the stop token fires.
class CancelledError : public Error {
 public:
  explicit CancelledError(std::uint64_t completed)
      : Error(ErrorCode::kCancelled,
              "sequential squaring cancelled after " +
                  std::to_string(completed) + " squarings"),
        completed_(completed) {}

  std::uint64_t squarings_completed() const noexcept { return completed_; }

 private:
  std::uint64_t completed_;
};

}  // namespace mhtlp

#endif  // MHTLP_ERROR_HPP_
