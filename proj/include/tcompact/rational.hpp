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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tcompact {

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
/// Accepts "p/q" or "p"; the result is canonicalized.
Rat parse_rat(std::string_view text);
/// "p/q", or "p" for integers.
std::string format_rat(const Rat& r);

}  // namespace tcompact
