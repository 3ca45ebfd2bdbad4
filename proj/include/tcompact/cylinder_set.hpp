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

#include "tcompact/bin_word.hpp"

namespace tcompact {

/// An eventually periodic point of Cantor space, written `u+v` for u v v v ...
/// Stored with the shortest period and shortest preperiod, so equal points
/// compare equal.
class CantorPoint {
 public:
  CantorPoint(BinWord preperiod, BinWord period);
  static CantorPoint parse(std::string_view text);

  int bit(std::size_t i) const;
  BinWord prefix(std::size_t n) const;
  const BinWord& preperiod() const noexcept { return pre_; }
  const BinWord& period() const noexcept { return period_; }
  std::string str() const;

  friend bool operator==(const CantorPoint&, const CantorPoint&) = default;
  friend auto operator<=>(const CantorPoint&, const CantorPoint&) = default;

 private:
  BinWord pre_;
  BinWord period_;
};

/// Index of the first bit where two points differ; nullopt-free because the
/// points are distinct by precondition (throws InvalidArgument otherwise).
std::size_t first_difference(const CantorPoint& a, const CantorPoint& b);

/// A clopen subset of Cantor space: the union of the cylinders [w] for w in a
/// finite antichain. Normal form: sorted, no word extends another, and no
/// pair of siblings w0, w1 (those are merged into w). The normal form is the
/// set of minimal words w with [w] contained in the set, hence unique.
class CylSet {
 public:
  CylSet() = default;
  static CylSet whole() { return from({BinWord{}}); }
  static CylSet from(std::vector<BinWord> words);

  const std::vector<BinWord>& words() const noexcept { return words_; }
  bool empty() const noexcept { return words_.empty(); }
  bool contains(const CantorPoint& p) const;
  /// True when some cylinder of the set contains [w].
  bool covers(const BinWord& w) const;
  /// Whitespace separated words ("-" for the empty word); "{}" when empty.
  std::string str() const;

  friend bool operator==(const CylSet&, const CylSet&) = default;

 private:
  std::vector<BinWord> words_;
};

CylSet unite(const CylSet& a, const CylSet& b);
CylSet intersect(const CylSet& a, const CylSet& b);
CylSet complement(const CylSet& a);

}  // namespace tcompact
