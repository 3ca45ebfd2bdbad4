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
#include <vector>

#include "tcompact/rational.hpp"

namespace tcompact {

/// A rational interval with independent open/closed endpoints.
struct Interval {
  Rat lo;
  Rat hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
  bool contains(const Rat& x) const {
    return (lo < x || (lo_closed && lo == x)) && (x < hi || (hi_closed && hi == x));
  }
  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A subset of [0,1] that is a finite union of intervals, held in normal
/// form: sorted, pairwise disjoint, and maximal (no two pieces whose union
/// is an interval). Equal sets have equal representations.
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet whole();
  static IntervalSet point(const Rat& x);
  static IntervalSet closed(const Rat& lo, const Rat& hi);
  static IntervalSet open(const Rat& lo, const Rat& hi);
  /// Clips every piece to [0,1] and normalizes.
  static IntervalSet from(std::vector<Interval> pieces);

  const std::vector<Interval>& intervals() const noexcept { return pieces_; }
  bool empty() const noexcept { return pieces_.empty(); }
  bool contains(const Rat& x) const;
  /// Whitespace separated items such as "[0,1/4] (1/2,3/4)"; "{}" when empty.
  std::string str() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> pieces_;
};

/// Total order on normal forms; used to key product-set sections.
int compare(const IntervalSet& a, const IntervalSet& b);

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
/// Complement relative to [0,1].
IntervalSet complement(const IntervalSet& a);
IntervalSet closure(const IntervalSet& a);
/// Interior relative to the subspace [0,1]: 0 and 1 stay interior when present.
IntervalSet interior(const IntervalSet& a);
bool is_subset(const IntervalSet& a, const IntervalSet& b);
/// Closed eps-neighbourhood, clipped to [0,1].
IntervalSet fatten(const IntervalSet& a, const Rat& eps);

}  // namespace tcompact
