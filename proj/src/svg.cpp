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

#include "tcompact/svg.hpp"

#include <cstdio>
#include <functional>

#include "tcompact/error.hpp"

namespace tcompact {

namespace {

constexpr double kWidth = 800.0;
constexpr double kStrip = 60.0;
constexpr double kMargin = 20.0;
constexpr std::size_t kMaxLevel = 10;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Same word, same colour.
std::string colour(const TWord& e) {
  std::uint32_t h = 2166136261u;
  for (Tri t : e.entries()) h = (h ^ static_cast<std::uint32_t>(t)) * 16777619u;
  const int hue = static_cast<int>(h % 360);
  return "hsl(" + std::to_string(hue) + ",60%,60%)";
}

std::string rect(double x, double y, double w, double h, const TWord& e) {
  // Degenerate pieces (points, segments) still get a visible stroke.
  if (w < 1.0) {
    x -= 0.5;
    w = 1.0;
  }
  if (h < 1.0) {
    y -= 0.5;
    h = 1.0;
  }
  return "  <rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" fill=\"" + colour(e) + "\" stroke=\"black\" stroke-width=\"0.3\"><title>" + e.str(true) +
         "</title></rect>\n";
}

void draw(const SymSet& s, const TWord& e, std::string& out) {
  if (const auto* iv = std::get_if<IntervalSet>(&s)) {
    for (const auto& p : iv->intervals()) {
      const double lo = p.lo.get_d() * kWidth;
      const double hi = p.hi.get_d() * kWidth;
      out += rect(kMargin + lo, kMargin, hi - lo, kStrip, e);
    }
  } else if (const auto* cs = std::get_if<CylSet>(&s)) {
    for (const auto& w : cs->words()) {
      const double scale = kWidth / static_cast<double>(std::uint64_t{1} << w.size());
      out += rect(kMargin + static_cast<double>(w.value()) * scale, kMargin, scale, kStrip, e);
    }
  } else {
    for (const auto& slab : std::get<ProductSet>(s).slabs()) {
      for (const auto& yi : slab.y.intervals()) {
        for (const auto& xi : slab.x.intervals()) {
          const double x0 = xi.lo.get_d() * kWidth;
          const double x1 = xi.hi.get_d() * kWidth;
          // SVG y grows downwards.
          const double y0 = (1.0 - yi.hi.get_d()) * kWidth;
          const double y1 = (1.0 - yi.lo.get_d()) * kWidth;
          out += rect(kMargin + x0, kMargin + y0, x1 - x0, y1 - y0, e);
        }
      }
    }
  }
}

}  // namespace

std::string svg_tiling(const Backend& b, std::size_t n) {
  if (n > kMaxLevel) throw Error(ErrorKind::OutOfRange, "tiling level above " + std::to_string(kMaxLevel));
  const bool square = b.kind() == SpaceKind::GraySquare;
  const double h = (square ? kWidth : kStrip) + 2 * kMargin;
  std::string body;
  std::vector<Tri> word;
  std::function<void(const SymSet&)> grow = [&](const SymSet& s) {
    if (sym_is_empty(s)) return;
    if (word.size() == n) {
      draw(s, TWord(word), body);
      return;
    }
    const std::size_t k = word.size();
    for (Tri t : {Tri::Zero, Tri::One, Tri::Bot}) {
      word.push_back(t);
      grow(b.meet_subbase(s, k, t));
      word.pop_back();
    }
  };
  grow(b.whole());
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         num(kWidth + 2 * kMargin) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(kWidth + 2 * kMargin) + " " +
         num(h) + "\">\n  <desc>" + b.name() + " level " + std::to_string(n) + "</desc>\n" + body + "</svg>\n";
}

}  // namespace tcompact
