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

#include "tcompact/product_set.hpp"

#include <algorithm>
#include <functional>

namespace tcompact {

namespace {

void add_breakpoints(const std::vector<ProductSet::Slab>& slabs, std::vector<Rat>& out) {
  for (const auto& s : slabs) {
    for (const auto& iv : s.y.intervals()) {
      out.push_back(iv.lo);
      out.push_back(iv.hi);
    }
  }
}

IntervalSet section_of(const std::vector<ProductSet::Slab>& slabs, const Rat& y) {
  IntervalSet out;
  for (const auto& s : slabs) {
    if (s.y.contains(y)) out = unite(out, s.x);
  }
  return out;
}

// Cuts [0,1] at the heights where either operand's section may change and
// rebuilds the canonical form from op applied to the two sections per cell.
ProductSet combine(const std::vector<ProductSet::Slab>& a, const std::vector<ProductSet::Slab>& b,
                   const std::function<IntervalSet(const IntervalSet&, const IntervalSet&)>& op) {
  std::vector<Rat> cuts{Rat(0), Rat(1)};
  add_breakpoints(a, cuts);
  add_breakpoints(b, cuts);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<ProductSet::Slab> cells;
  auto emit = [&](const Rat& probe, Interval cell) {
    IntervalSet x = op(section_of(a, probe), section_of(b, probe));
    if (!x.empty()) cells.push_back({std::move(x), IntervalSet::from({std::move(cell)})});
  };
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    emit(cuts[i], Interval{cuts[i], cuts[i], true, true});
    if (i + 1 < cuts.size()) {
      Rat mid = (cuts[i] + cuts[i + 1]) / 2;
      emit(mid, Interval{cuts[i], cuts[i + 1], false, false});
    }
  }
  return ProductSet::from(cells);
}

}  // namespace

ProductSet ProductSet::whole() { return rect(IntervalSet::whole(), IntervalSet::whole()); }

ProductSet ProductSet::rect(const IntervalSet& x, const IntervalSet& y) { return from({Slab{x, y}}); }

ProductSet ProductSet::from(const std::vector<Slab>& products) {
  // Cells from `combine` are disjoint in y, so grouping by section suffices;
  // for general input, route through a cell decomposition first.
  bool disjoint = true;
  for (std::size_t i = 0; i < products.size() && disjoint; ++i) {
    for (std::size_t j = i + 1; j < products.size() && disjoint; ++j) {
      disjoint = intersect(products[i].y, products[j].y).empty();
    }
  }
  if (!disjoint) {
    return combine(products, {}, [](const IntervalSet& x, const IntervalSet&) { return x; });
  }
  ProductSet out;
  for (const auto& p : products) {
    if (p.x.empty() || p.y.empty()) continue;
    auto it = std::find_if(out.slabs_.begin(), out.slabs_.end(), [&](const Slab& s) { return s.x == p.x; });
    if (it == out.slabs_.end()) {
      out.slabs_.push_back(p);
    } else {
      it->y = unite(it->y, p.y);
    }
  }
  std::sort(out.slabs_.begin(), out.slabs_.end(),
            [](const Slab& s, const Slab& t) { return compare(s.x, t.x) < 0; });
  return out;
}

bool ProductSet::contains(const SquarePoint& p) const {
  for (const auto& s : slabs_) {
    if (s.y.contains(p.second) && s.x.contains(p.first)) return true;
  }
  return false;
}

IntervalSet ProductSet::section(const Rat& y) const { return section_of(slabs_, y); }

std::string ProductSet::str() const {
  if (slabs_.empty()) return "{}";
  std::string s;
  for (const auto& slab : slabs_) {
    for (const auto& yi : slab.y.intervals()) {
      for (const auto& xi : slab.x.intervals()) {
        if (!s.empty()) s.push_back(' ');
        s += xi.str() + "x" + yi.str();
      }
    }
  }
  return s;
}

ProductSet unite(const ProductSet& a, const ProductSet& b) {
  return combine(a.slabs(), b.slabs(), [](const IntervalSet& x, const IntervalSet& y) { return unite(x, y); });
}

ProductSet intersect(const ProductSet& a, const ProductSet& b) {
  return combine(a.slabs(), b.slabs(),
                 [](const IntervalSet& x, const IntervalSet& y) { return intersect(x, y); });
}

ProductSet complement(const ProductSet& a) {
  return combine(a.slabs(), {}, [](const IntervalSet& x, const IntervalSet&) { return complement(x); });
}

ProductSet closure(const ProductSet& a) {
  std::vector<ProductSet::Slab> pieces;
  for (const auto& s : a.slabs()) {
    const IntervalSet cx = closure(s.x);
    for (const auto& yi : s.y.intervals()) {
      pieces.push_back({cx, closure(IntervalSet::from({yi}))});
    }
  }
  return ProductSet::from(pieces);
}

ProductSet interior(const ProductSet& a) { return complement(closure(complement(a))); }

}  // namespace tcompact
