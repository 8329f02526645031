// Copyright 2026 The ltc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ltc {

enum class ErrorKind {
  kNotPrime,
  kTooLarge,
  kDivideByZero,
  kFieldMismatch,
  kRankDeficient,
  kTooLong,
  kLengthMismatch,
  kTooLargeToEnumerate,
  kEmptyProjection,
  kIndexOutOfRange,
  kShapeMismatch,
  kNotACodeword,
  kUnderdetermined,
  kRaggedLists,
  kEntryOutOfRange,
  kDegreeMismatch,
  kInapplicable,
  kInvalidArgument,
  kParse,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is an ltc::Error carrying a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ltc
