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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcompact/sym_set.hpp"
#include "tcompact/tomega.hpp"

namespace tcompact {

enum class SpaceKind { Cantor, GrayUnit, GraySquare };

/// "cantor", "gray-unit", "gray-square".
SpaceKind parse_space(std::string_view name);
const char* to_string(SpaceKind kind);

/// n-fold iterate of the tent map t(x) = 1 - |2x - 1|. Throws OutOfRange
/// unless 0 <= x <= 1.
Rat tent_iter(const Rat& x, std::size_t n);

/// A space together with its dyadic subbase S(n, i).
class Backend {
 public:
  explicit Backend(SpaceKind kind) : kind_(kind) {}

  SpaceKind kind() const noexcept { return kind_; }
  std::string name() const { return to_string(kind_); }

  SymSet whole() const;
  SymSet empty_set() const;

  /// S(n, i); S(n, Bot) is the complement of S(n, 0) and S(n, 1).
  SymSet subbase_set(std::size_t n, Tri i) const;
  /// a ∩ S(n, i), generating the subbase only where a lives.
  SymSet meet_subbase(const SymSet& a, std::size_t n, Tri i) const;
  /// a ∩ cl S(n, i).
  SymSet meet_subbase_closure(const SymSet& a, std::size_t n, Tri i) const;
  /// a \ S(n, i).
  SymSet meet_subbase_complement(const SymSet& a, std::size_t n, Tri i) const;

  Tri phi_digit(const Point& x, std::size_t n) const;
  TWord phi_prefix(const Point& x, std::size_t m) const;

  /// `p/q` (GrayUnit), `u+v` (Cantor), `x,y` (GraySquare).
  Point parse_point(std::string_view text) const;
  bool owns(const Point& x) const;
  bool owns(const SymSet& a) const;

 private:
  SpaceKind kind_;
};

struct PropernessReport {
  bool ok = true;
  std::size_t words_checked = 0;
  std::optional<TWord> counterexample;
  std::string detail;
  /// One line per checked word of length at most 1.
  std::vector<std::string> witnesses;
};

/// Checks cl S(e) = S̄(e) for all T-words e with |e| <= max_len, and
/// S(n,0) ∩ S(n,1) = ∅ for n < max_len. Stops at the first failure.
PropernessReport properness_check(const Backend& b, std::size_t max_len);

}  // namespace tcompact
