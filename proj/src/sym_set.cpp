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

#include "tcompact/sym_set.hpp"

#include "tcompact/error.hpp"

namespace tcompact {

namespace {

template <class Fn>
SymSet binary(const SymSet& a, const SymSet& b, Fn fn) {
  if (a.index() != b.index()) throw Error(ErrorKind::BackendMismatch, "operands belong to different spaces");
  return std::visit(
      [&](const auto& x) -> SymSet {
        using T = std::decay_t<decltype(x)>;
        return fn(x, std::get<T>(b));
      },
      a);
}

}  // namespace

SymSet sym_intersect(const SymSet& a, const SymSet& b) {
  return binary(a, b, [](const auto& x, const auto& y) -> SymSet { return intersect(x, y); });
}

SymSet sym_union(const SymSet& a, const SymSet& b) {
  return binary(a, b, [](const auto& x, const auto& y) -> SymSet { return unite(x, y); });
}

SymSet sym_complement(const SymSet& a) {
  return std::visit([](const auto& x) -> SymSet { return complement(x); }, a);
}

SymSet sym_closure(const SymSet& a) {
  return std::visit(
      [](const auto& x) -> SymSet {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CylSet>) {
          return x;
        } else {
          return closure(x);
        }
      },
      a);
}

SymSet sym_interior(const SymSet& a) {
  return std::visit(
      [](const auto& x) -> SymSet {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CylSet>) {
          return x;
        } else {
          return interior(x);
        }
      },
      a);
}

SymSet sym_algebra(SetOp op, const SymSet& a, const SymSet& b) {
  switch (op) {
    case SetOp::Intersect:
      return sym_intersect(a, b);
    case SetOp::Union:
      return sym_union(a, b);
    case SetOp::Complement:
      return sym_complement(a);
    case SetOp::Closure:
      return sym_closure(a);
    case SetOp::Interior:
      return sym_interior(a);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown set operation");
}

bool sym_is_empty(const SymSet& a) {
  return std::visit([](const auto& x) { return x.empty(); }, a);
}

bool sym_contains(const SymSet& a, const Point& x) {
  if (a.index() != x.index()) throw Error(ErrorKind::BackendMismatch, "point and set belong to different spaces");
  return std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IntervalSet>) {
          return s.contains(std::get<Rat>(x));
        } else if constexpr (std::is_same_v<T, CylSet>) {
          return s.contains(std::get<CantorPoint>(x));
        } else {
          return s.contains(std::get<SquarePoint>(x));
        }
      },
      a);
}

bool sym_subset(const SymSet& a, const SymSet& b) { return sym_is_empty(sym_intersect(a, sym_complement(b))); }

SymSet sym_empty_like(const SymSet& like) {
  return std::visit([](const auto& x) -> SymSet { return std::decay_t<decltype(x)>{}; }, like);
}

std::string sym_str(const SymSet& a) {
  return std::visit([](const auto& x) { return x.str(); }, a);
}

std::string point_str(const Point& x) {
  if (const auto* r = std::get_if<Rat>(&x)) return format_rat(*r);
  if (const auto* c = std::get_if<CantorPoint>(&x)) return c->str();
  const auto& p = std::get<SquarePoint>(x);
  return "(" + format_rat(p.first) + "," + format_rat(p.second) + ")";
}

}  // namespace tcompact
