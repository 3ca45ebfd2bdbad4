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

#include <cstddef>
#include <string>

#include "tcompact/backend.hpp"

namespace tcompact {

/// A standalone SVG document showing the nonempty sets S_ex^n(e),
/// e ∈ {0,1,B}^n, which partition the space. Intervals and cylinders are
/// drawn on a horizontal strip, rectangles on the unit square.
std::string svg_tiling(const Backend& b, std::size_t n);

}  // namespace tcompact
