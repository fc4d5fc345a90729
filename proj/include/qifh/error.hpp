/*
 * Copyright 2026 The qifh Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qifh {

// Numeric values are shared with the C API status codes in qifh.h.
enum class ErrorCode : int {
  kParse = 1,
  kInvalidArgument = 2,
  kZeroOrdinal = 3,
  kSingletonTerm = 4,
  kNotAutomorphism = 5,
  kNotOpenSurjection = 6,
  kDifferentSpaces = 7,
  kDifferentQ = 8,
  kNoReduct = 9,
  kNodeNotInTree = 10,
  kInvalidFamily = 11,
  kUnknownSuite = 12,
  kIo = 13,
  kBudgetExceeded = 14,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qifh
