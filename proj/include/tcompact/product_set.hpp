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
#include <utility>
#include <vector>

#include "tcompact/interval_set.hpp"

namespace tcompact {

using SquarePoint = std::pair<Rat, Rat>;

/// A finite union of rectangles in [0,1]^2. Canonical form: pairs (X, Y) with
/// X nonempty and pairwise distinct, Y nonempty, where Y is exactly the set
/// of heights y whose horizontal section equals X. Equal sets have equal
/// canonical forms.
class ProductSet {
 public:
  struct Slab {
    IntervalSet x;
    IntervalSet y;
    friend bool operator==(const Slab&, const Slab&) = default;
  };

  ProductSet() = default;
  static ProductSet whole();
  static ProductSet rect(const IntervalSet& x, const IntervalSet& y);
  /// Normalizes an arbitrary union of products.
  static ProductSet from(const std::vector<Slab>& products);

  const std::vector<Slab>& slabs() const noexcept { return slabs_; }
  bool empty() const noexcept { return slabs_.empty(); }
  bool contains(const SquarePoint& p) const;
  IntervalSet section(const Rat& y) const;
  /// Rectangles such as "[0,1/2]x(1/4,3/4)"; "{}" when empty.
  std::string str() const;

  friend bool operator==(const ProductSet&, const ProductSet&) = default;

 private:
  std::vector<Slab> slabs_;
};

ProductSet unite(const ProductSet& a, const ProductSet& b);
ProductSet intersect(const ProductSet& a, const ProductSet& b);
ProductSet complement(const ProductSet& a);
ProductSet closure(const ProductSet& a);
ProductSet interior(const ProductSet& a);

}  // namespace tcompact
