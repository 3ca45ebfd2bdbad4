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

#include "tcompact/cylinder_set.hpp"

#include <algorithm>

#include "tcompact/error.hpp"

namespace tcompact {

namespace {

// Smallest root r with period == r^k.
BinWord primitive_root(const BinWord& period) {
  const std::size_t n = period.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = period[i] == period[i - d];
    if (ok) return period.prefix(d);
  }
  return period;
}

BinWord rotate_right(const BinWord& w) {
  const std::size_t n = w.size();
  BinWord out = BinWord{}.pushed(w[n - 1]);
  return out.concat(w.prefix(n - 1));
}

}  // namespace

CantorPoint::CantorPoint(BinWord preperiod, BinWord period) : pre_(preperiod), period_(primitive_root(period)) {
  if (period_.empty()) throw Error(ErrorKind::InvalidArgument, "Cantor point needs a nonempty period");
  // Absorb the tail of the preperiod into the period while it repeats.
  while (!pre_.empty() && pre_[pre_.size() - 1] == period_[period_.size() - 1]) {
    pre_ = pre_.parent();
    period_ = rotate_right(period_);
  }
}

CantorPoint CantorPoint::parse(std::string_view text) {
  const auto plus = text.find('+');
  if (plus == std::string_view::npos) throw Error(ErrorKind::Parse, "Cantor point must look like u+v");
  const auto u = text.substr(0, plus);
  const auto v = text.substr(plus + 1);
  if (v.empty()) throw Error(ErrorKind::Parse, "Cantor point period is empty");
  return CantorPoint(BinWord::parse(u), BinWord::parse(v));
}

int CantorPoint::bit(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return period_[(i - pre_.size()) % period_.size()];
}

BinWord CantorPoint::prefix(std::size_t n) const {
  BinWord w;
  for (std::size_t i = 0; i < n; ++i) w = w.pushed(bit(i));
  return w;
}

std::string CantorPoint::str() const { return pre_.str() + "+" + period_.str(); }

std::size_t first_difference(const CantorPoint& a, const CantorPoint& b) {
  const std::size_t bound = std::max(a.preperiod().size(), b.preperiod().size()) +
                            a.period().size() * b.period().size() + 1;
  for (std::size_t i = 0; i < bound; ++i) {
    if (a.bit(i) != b.bit(i)) return i;
  }
  throw Error(ErrorKind::InvalidArgument, "points " + a.str() + " and " + b.str() + " are equal");
}

CylSet CylSet::from(std::vector<BinWord> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<BinWord> stack;
  stack.reserve(words.size());
  for (const auto& w : words) {
    // In sorted order, every extension of a kept word follows it directly.
    if (!stack.empty() && stack.back().is_prefix_of(w)) continue;
    stack.push_back(w);
    while (stack.size() >= 2) {
      const BinWord& b = stack[stack.size() - 1];
      const BinWord& a = stack[stack.size() - 2];
      if (a.size() != b.size() || a.empty() || a.parent() != b.parent() || a == b) break;
      const BinWord p = a.parent();
      stack.pop_back();
      stack.back() = p;
    }
  }
  CylSet out;
  out.words_ = std::move(stack);
  return out;
}

bool CylSet::contains(const CantorPoint& p) const {
  std::size_t max_len = 0;
  for (const auto& w : words_) max_len = std::max(max_len, w.size());
  return covers(p.prefix(max_len));
}

bool CylSet::covers(const BinWord& w) const {
  // Some prefix of w is a member; the candidate is the last word <= w.
  auto it = std::upper_bound(words_.begin(), words_.end(), w);
  if (it == words_.begin()) return false;
  --it;
  return it->is_prefix_of(w);
}

std::string CylSet::str() const {
  if (words_.empty()) return "{}";
  std::string s;
  for (const auto& w : words_) {
    if (!s.empty()) s.push_back(' ');
    s += w.str(true);
  }
  return s;
}

CylSet unite(const CylSet& a, const CylSet& b) {
  std::vector<BinWord> all = a.words();
  all.insert(all.end(), b.words().begin(), b.words().end());
  return CylSet::from(std::move(all));
}

CylSet intersect(const CylSet& a, const CylSet& b) {
  const CylSet& small = a.words().size() <= b.words().size() ? a : b;
  const CylSet& large = &small == &a ? b : a;
  const auto& big = large.words();
  std::vector<BinWord> out;
  for (const auto& w : small.words()) {
    if (large.covers(w)) {
      out.push_back(w);
      continue;
    }
    for (auto it = std::lower_bound(big.begin(), big.end(), w); it != big.end() && w.is_prefix_of(*it); ++it) {
      out.push_back(*it);
    }
  }
  return CylSet::from(std::move(out));
}

namespace {

void complement_below(const BinWord& node, std::vector<BinWord>::const_iterator first,
                      std::vector<BinWord>::const_iterator last, std::vector<BinWord>& out) {
  if (first == last) {
    out.push_back(node);
    return;
  }
  if (*first == node) return;  // the whole cylinder is in the set
  const BinWord left = node.pushed(0);
  const BinWord right = node.pushed(1);
  auto mid = std::lower_bound(first, last, right);
  complement_below(left, first, mid, out);
  complement_below(right, mid, last, out);
}

}  // namespace

CylSet complement(const CylSet& a) {
  std::vector<BinWord> out;
  complement_below(BinWord{}, a.words().begin(), a.words().end(), out);
  return CylSet::from(std::move(out));
}

}  // namespace tcompact
