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

#include "tcompact/interval_set.hpp"

#include <algorithm>

namespace tcompact {

namespace {

const Rat& zero() {
  static const Rat z(0);
  return z;
}

const Rat& one() {
  static const Rat o(1);
  return o;
}

}  // namespace

std::string Interval::str() const {
  return std::string(lo_closed ? "[" : "(") + format_rat(lo) + "," + format_rat(hi) + (hi_closed ? "]" : ")");
}

IntervalSet IntervalSet::whole() { return from({Interval{zero(), one(), true, true}}); }

IntervalSet IntervalSet::point(const Rat& x) { return from({Interval{x, x, true, true}}); }

IntervalSet IntervalSet::closed(const Rat& lo, const Rat& hi) { return from({Interval{lo, hi, true, true}}); }

IntervalSet IntervalSet::open(const Rat& lo, const Rat& hi) { return from({Interval{lo, hi, false, false}}); }

IntervalSet IntervalSet::from(std::vector<Interval> pieces) {
  for (auto& p : pieces) {
    if (p.lo < zero()) {
      p.lo = zero();
      p.lo_closed = true;
    }
    if (p.hi > one()) {
      p.hi = one();
      p.hi_closed = true;
    }
  }
  std::erase_if(pieces, [](const Interval& p) { return p.empty(); });
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });

  IntervalSet out;
  for (auto& p : pieces) {
    if (out.pieces_.empty()) {
      out.pieces_.push_back(std::move(p));
      continue;
    }
    Interval& cur = out.pieces_.back();
    const bool joins = p.lo < cur.hi || (p.lo == cur.hi && (cur.hi_closed || p.lo_closed));
    if (!joins) {
      out.pieces_.push_back(std::move(p));
      continue;
    }
    if (p.hi > cur.hi) {
      cur.hi = p.hi;
      cur.hi_closed = p.hi_closed;
    } else if (p.hi == cur.hi) {
      cur.hi_closed = cur.hi_closed || p.hi_closed;
    }
  }
  return out;
}

bool IntervalSet::contains(const Rat& x) const {
  // First piece whose upper end is not below x.
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Interval& p, const Rat& v) { return p.hi < v; });
  for (; it != pieces_.end() && it->lo <= x; ++it) {
    if (it->contains(x)) return true;
  }
  return false;
}

std::string IntervalSet::str() const {
  if (pieces_.empty()) return "{}";
  std::string s;
  for (const auto& p : pieces_) {
    if (!s.empty()) s.push_back(' ');
    s += p.str();
  }
  return s;
}

int compare(const IntervalSet& a, const IntervalSet& b) {
  const auto& x = a.intervals();
  const auto& y = b.intervals();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = cmp(x[i].lo, y[i].lo); c != 0) return c < 0 ? -1 : 1;
    if (x[i].lo_closed != y[i].lo_closed) return x[i].lo_closed ? -1 : 1;
    if (int c = cmp(x[i].hi, y[i].hi); c != 0) return c < 0 ? -1 : 1;
    if (x[i].hi_closed != y[i].hi_closed) return x[i].hi_closed ? 1 : -1;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet::from(std::move(all));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  const auto& x = a.intervals();
  const auto& y = b.intervals();
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const Interval& p = x[i];
    const Interval& q = y[j];
    Interval r;
    if (p.lo > q.lo) {
      r.lo = p.lo;
      r.lo_closed = p.lo_closed;
    } else if (p.lo < q.lo) {
      r.lo = q.lo;
      r.lo_closed = q.lo_closed;
    } else {
      r.lo = p.lo;
      r.lo_closed = p.lo_closed && q.lo_closed;
    }
    const int c = cmp(p.hi, q.hi);
    if (c < 0) {
      r.hi = p.hi;
      r.hi_closed = p.hi_closed;
    } else if (c > 0) {
      r.hi = q.hi;
      r.hi_closed = q.hi_closed;
    } else {
      r.hi = p.hi;
      r.hi_closed = p.hi_closed && q.hi_closed;
    }
    if (!r.empty()) out.push_back(std::move(r));
    // Advance whichever piece ends first.
    const bool p_first = c < 0 || (c == 0 && !p.hi_closed && q.hi_closed);
    const bool q_first = c > 0 || (c == 0 && p.hi_closed && !q.hi_closed);
    if (p_first) {
      ++i;
    } else if (q_first) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return IntervalSet::from(std::move(out));
}

IntervalSet complement(const IntervalSet& a) {
  std::vector<Interval> out;
  Rat pos = zero();
  bool pos_closed = true;
  for (const auto& p : a.intervals()) {
    out.push_back(Interval{pos, p.lo, pos_closed, !p.lo_closed});
    pos = p.hi;
    pos_closed = !p.hi_closed;
  }
  out.push_back(Interval{pos, one(), pos_closed, true});
  return IntervalSet::from(std::move(out));
}

IntervalSet closure(const IntervalSet& a) {
  std::vector<Interval> out = a.intervals();
  for (auto& p : out) {
    p.lo_closed = true;
    p.hi_closed = true;
  }
  return IntervalSet::from(std::move(out));
}

IntervalSet interior(const IntervalSet& a) {
  std::vector<Interval> out = a.intervals();
  for (auto& p : out) {
    if (!(p.lo == zero() && p.lo_closed)) p.lo_closed = false;
    if (!(p.hi == one() && p.hi_closed)) p.hi_closed = false;
  }
  return IntervalSet::from(std::move(out));
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) { return intersect(a, complement(b)).empty(); }

IntervalSet fatten(const IntervalSet& a, const Rat& eps) {
  std::vector<Interval> out;
  for (const auto& p : a.intervals()) out.push_back(Interval{p.lo - eps, p.hi + eps, true, true});
  return IntervalSet::from(std::move(out));
}

}  // namespace tcompact
