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

#include <string>
#include <string_view>
#include <vector>

#include "tcompact/backend.hpp"

namespace tcompact {

/// One interval item: `[a,b]`, `(a,b)`, `[a,b)`, `(a,b]`, or a bare point.
Interval parse_interval(std::string_view text);
IntervalSet parse_interval_set(std::string_view text);
/// Whitespace separated binary words, `-` for the whole space.
CylSet parse_cylinder_set(std::string_view text);
/// Whitespace separated rectangles `X x Y` written without spaces, e.g.
/// `[0,1/2]x(1/4,3/4)`.
ProductSet parse_product_set(std::string_view text);

/// Parses in the format of the backend's sets; `{}` is the empty set and
/// `#` starts a comment.
SymSet parse_sym_set(const Backend& b, std::string_view text);
std::vector<Point> parse_points(const Backend& b, std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tcompact
