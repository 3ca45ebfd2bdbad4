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
#include <variant>

#include "tcompact/cylinder_set.hpp"
#include "tcompact/interval_set.hpp"
#include "tcompact/product_set.hpp"

namespace tcompact {

using SymSet = std::variant<IntervalSet, CylSet, ProductSet>;
using Point = std::variant<Rat, CantorPoint, SquarePoint>;

enum class SetOp { Intersect, Union, Complement, Closure, Interior };

/// Applies `op`; binary operations throw BackendMismatch when the operands
/// live in different spaces. `b` is ignored for the unary operations.
SymSet sym_algebra(SetOp op, const SymSet& a, const SymSet& b = SymSet{});

SymSet sym_intersect(const SymSet& a, const SymSet& b);
SymSet sym_union(const SymSet& a, const SymSet& b);
SymSet sym_complement(const SymSet& a);
SymSet sym_closure(const SymSet& a);
SymSet sym_interior(const SymSet& a);
bool sym_is_empty(const SymSet& a);
bool sym_contains(const SymSet& a, const Point& x);
bool sym_subset(const SymSet& a, const SymSet& b);
/// An empty set of the same kind as `like`.
SymSet sym_empty_like(const SymSet& like);

std::string sym_str(const SymSet& a);
std::string point_str(const Point& x);

}  // namespace tcompact
