// Copyright 2026 The tcompact Authors. All Rights Reserved.
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

#pragma once

#include <stdexcept>
#include <string>

namespace tcompact {

enum class ErrorKind {
  Incompatible,
  BackendMismatch,
  OutOfRange,
  DepthExceeded,
  InsufficientInput,
  DepthTooSmall,
  Unresolved,
  EmptySetName,
  BudgetExhausted,
  BadLayerLength,
  JoinNotCoded,
  LayerExhausted,
  NotFound,
  NotStabilized,
  Parse,
  InvalidArgument,
  PropertyViolation,
};

const char* to_string(ErrorKind kind);

/// The single exception type thrown by the library. `kind()` lets callers
/// (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tcompact
