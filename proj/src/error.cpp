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

#include "tcompact/error.hpp"

namespace tcompact {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::BackendMismatch: return "BackendMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::InsufficientInput: return "InsufficientInput";
    case ErrorKind::DepthTooSmall: return "DepthTooSmall";
    case ErrorKind::Unresolved: return "Unresolved";
    case ErrorKind::EmptySetName: return "EmptySetName";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::BadLayerLength: return "BadLayerLength";
    case ErrorKind::JoinNotCoded: return "JoinNotCoded";
    case ErrorKind::LayerExhausted: return "LayerExhausted";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PropertyViolation: return "PropertyViolation";
  }
  return "Unknown";
}

}  // namespace tcompact
