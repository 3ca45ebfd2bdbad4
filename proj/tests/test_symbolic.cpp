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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tcompact/backend.hpp"
#include "tcompact/error.hpp"
#include "tcompact/text_io.hpp"

using namespace tcompact;

namespace {

IntervalSet iv(const char* text) { return parse_interval_set(text); }

// A random union of intervals, as raw pieces (possibly overlapping).
std::vector<Interval> random_pieces(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<long> num(0, 12);
  std::bernoulli_distribution coin(0.5);
  std::vector<Interval> out;
  for (int i = count(rng); i > 0; --i) {
    Rat a = make_rat(num(rng), 12);
    Rat b = make_rat(num(rng), 12);
    if (b < a) std::swap(a, b);
    out.push_back(Interval{a, b, coin(rng), coin(rng)});
  }
  return out;
}

bool in_pieces(const std::vector<Interval>& ps, const Rat& x) {
  for (const auto& p : ps) {
    const bool lo = p.lo < x || (p.lo_closed && p.lo == x);
    const bool hi = x < p.hi || (p.hi_closed && p.hi == x);
    if (lo && hi) return true;
  }
  return false;
}

// Midpoints between grid points catch open/closed mistakes at endpoints.
std::vector<Rat> fine_samples() { return oracle::grid({24, 48}); }

}  // namespace

TEST_CASE("interval algebra examples") {
  CHECK(closure(iv("(1/4,3/4)")) == iv("[1/4,3/4]"));
  CHECK(intersect(iv("[0,1/2)"), iv("(1/4,3/4)")) == iv("(1/4,1/2)"));
  CHECK(iv("(1/4,3/4)").contains(make_rat(1, 2)));
  CHECK_FALSE(iv("[0,1/4)").contains(make_rat(1, 4)));
  CHECK(iv("{}").empty());
  CHECK(complement(iv("[0,1/2)")) == iv("[1/2,1]"));
  CHECK(interior(iv("[0,1/2] [1/2,1]")) == iv("[0,1]"));
  CHECK(iv("[0,1/4) [1/4,1/2]") == iv("[0,1/2]"));
  CHECK(iv("[0,1/4) (1/4,1/2]").intervals().size() == 2);
  CHECK(fatten(iv("[1/4,1/4]"), make_rat(1, 8)) == iv("[1/8,3/8]"));
}

TEST_CASE("interval normal form is extensional") {
  std::mt19937_64 rng(3);
  const auto xs = fine_samples();
  for (int trial = 0; trial < 300; ++trial) {
    const auto pa = random_pieces(rng);
    const auto pb = random_pieces(rng);
    const IntervalSet a = IntervalSet::from(pa);
    const IntervalSet b = IntervalSet::from(pb);
    bool same = true;
    for (const auto& x : xs) {
      CHECK(a.contains(x) == in_pieces(pa, x));
      CHECK(unite(a, b).contains(x) == (in_pieces(pa, x) || in_pieces(pb, x)));
      CHECK(intersect(a, b).contains(x) == (in_pieces(pa, x) && in_pieces(pb, x)));
      CHECK(complement(a).contains(x) == !in_pieces(pa, x));
      same = same && in_pieces(pa, x) == in_pieces(pb, x);
    }
    // Endpoints are multiples of 1/12, so the 1/24 grid separates distinct sets.
    CHECK((a == b) == same);
    CHECK(complement(unite(a, b)) == intersect(complement(a), complement(b)));
    CHECK(complement(intersect(a, b)) == unite(complement(a), complement(b)));
    CHECK(complement(complement(a)) == a);
    CHECK(is_subset(interior(a), a));
    CHECK(is_subset(a, closure(a)));
  }
}

TEST_CASE("cylinder sets") {
  CHECK(complement(parse_cylinder_set("0")) == parse_cylinder_set("1"));
  CHECK(parse_cylinder_set("00 01") == parse_cylinder_set("0"));
  CHECK(parse_cylinder_set("0 01 00") == parse_cylinder_set("0"));
  CHECK(parse_cylinder_set("0 1") == CylSet::whole());
  CHECK(parse_cylinder_set("-").words().size() == 1);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<int> bit(0, 1);
  auto random_words = [&] {
    std::vector<BinWord> ws;
    for (int i = count(rng); i > 0; --i) {
      BinWord w;
      for (int k = len(rng); k > 0; --k) w = w.pushed(bit(rng));
      ws.push_back(w);
    }
    return ws;
  };
  auto member = [](const std::vector<BinWord>& ws, const BinWord& x) {
    for (const auto& w : ws) {
      if (w.is_prefix_of(x)) return true;
    }
    return false;
  };
  const auto probes = oracle::bin_words(6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto wa = random_words();
    const auto wb = random_words();
    const CylSet a = CylSet::from(wa);
    const CylSet b = CylSet::from(wb);
    bool same = true;
    for (const auto& s : probes) {
      const BinWord x = BinWord::parse(s);
      CHECK(a.covers(x) == member(wa, x));
      CHECK(unite(a, b).covers(x) == (member(wa, x) || member(wb, x)));
      CHECK(intersect(a, b).covers(x) == (member(wa, x) && member(wb, x)));
      CHECK(complement(a).covers(x) == !member(wa, x));
      same = same && member(wa, x) == member(wb, x);
    }
    CHECK((a == b) == same);
  }
}

TEST_CASE("Cantor points") {
  const CantorPoint p = CantorPoint::parse("01+01");
  CHECK(p == CantorPoint::parse("-+01"));
  CHECK(p.str() == "+01");
  CHECK(CantorPoint::parse("0+00") == CantorPoint::parse("+0"));
  CHECK(first_difference(CantorPoint::parse("+0"), CantorPoint::parse("000+1")) == 3);
  CHECK(parse_cylinder_set("01").contains(CantorPoint::parse("+01")));
  CHECK_FALSE(parse_cylinder_set("00").contains(CantorPoint::parse("+01")));
  CHECK_THROWS_AS(CantorPoint::parse("01"), Error);
}

TEST_CASE("product sets") {
  const ProductSet a = parse_product_set("[0,1/2]x[0,1/2]");
  const ProductSet b = parse_product_set("[1/4,1]x[1/4,1]");
  CHECK(intersect(a, b) == parse_product_set("[1/4,1/2]x[1/4,1/2]"));
  CHECK(unite(parse_product_set("[0,1/2]x[0,1]"), parse_product_set("[1/2,1]x[0,1]")) == ProductSet::whole());
  CHECK(closure(parse_product_set("(0,1/2)x(0,1/2)")) == a);
  CHECK(complement(ProductSet::whole()).empty());

  std::mt19937_64 rng(9);
  const auto xs = oracle::grid({8});
  for (int trial = 0; trial < 60; ++trial) {
    const auto px = random_pieces(rng);
    const auto py = random_pieces(rng);
    const auto qx = random_pieces(rng);
    const auto qy = random_pieces(rng);
    const ProductSet p = ProductSet::rect(IntervalSet::from(px), IntervalSet::from(py));
    const ProductSet q = ProductSet::rect(IntervalSet::from(qx), IntervalSet::from(qy));
    const ProductSet u = unite(p, q);
    const ProductSet m = intersect(p, q);
    const ProductSet c = complement(u);
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        const bool in_p = in_pieces(px, x) && in_pieces(py, y);
        const bool in_q = in_pieces(qx, x) && in_pieces(qy, y);
        CHECK(u.contains({x, y}) == (in_p || in_q));
        CHECK(m.contains({x, y}) == (in_p && in_q));
        CHECK(c.contains({x, y}) == !(in_p || in_q));
      }
    }
    CHECK(complement(c) == u);
    CHECK(interior(u) == complement(closure(c)));
  }
}

TEST_CASE("sym_algebra dispatch") {
  const SymSet a = iv("[0,1/2)");
  const SymSet b = iv("(1/4,3/4)");
  CHECK(sym_algebra(SetOp::Intersect, a, b) == SymSet(iv("(1/4,1/2)")));
  CHECK(sym_algebra(SetOp::Closure, b) == SymSet(iv("[1/4,3/4]")));
  CHECK(sym_algebra(SetOp::Complement, SymSet(parse_cylinder_set("0"))) == SymSet(parse_cylinder_set("1")));
  CHECK_THROWS_AS(sym_algebra(SetOp::Union, a, SymSet(CylSet::whole())), Error);
  CHECK_THROWS_AS(sym_contains(a, Point(CantorPoint::parse("+0"))), Error);
  CHECK(sym_is_empty(SymSet(IntervalSet{})));
}

TEST_CASE("tent map") {
  CHECK(tent_iter(make_rat(1, 2), 1) == 1);
  CHECK(tent_iter(make_rat(1, 3), 2) == make_rat(2, 3));
  CHECK(tent_iter(Rat(0), 9) == 0);
  CHECK_THROWS_AS(tent_iter(make_rat(3, 2), 1), Error);
  for (const auto& x : oracle::samples()) {
    for (std::size_t n = 0; n < 6; ++n) CHECK(tent_iter(x, n) == oracle::tent(x, n));
  }
}

TEST_CASE("subbase sets") {
  const Backend gray(SpaceKind::GrayUnit);
  const Backend cantor(SpaceKind::Cantor);
  CHECK(gray.subbase_set(0, Tri::One) == SymSet(iv("(1/2,1]")));
  CHECK(gray.subbase_set(1, Tri::Bot) == SymSet(iv("[1/4,1/4] [3/4,3/4]")));
  CHECK(cantor.subbase_set(2, Tri::Zero) == SymSet(parse_cylinder_set("000 010 100 110")));
  CHECK(sym_is_empty(cantor.subbase_set(5, Tri::Bot)));

  // Membership against the tent map, computed independently.
  for (std::size_t n = 0; n < 6; ++n) {
    for (Tri t : {Tri::Zero, Tri::One, Tri::Bot}) {
      const SymSet s = gray.subbase_set(n, t);
      for (const auto& x : oracle::samples()) CHECK(sym_contains(s, x) == (oracle::gray_digit(x, n) == to_char(t)));
    }
    CHECK(sym_is_empty(sym_intersect(gray.subbase_set(n, Tri::Zero), gray.subbase_set(n, Tri::One))));
    CHECK(sym_is_empty(sym_intersect(cantor.subbase_set(n, Tri::Zero), cantor.subbase_set(n, Tri::One))));
  }
}

TEST_CASE("phi digits") {
  const Backend gray(SpaceKind::GrayUnit);
  CHECK(gray.phi_prefix(make_rat(1, 2), 4) == TWord::parse("B100"));
  CHECK(gray.phi_prefix(make_rat(1, 3), 3) == TWord::parse("011"));
  const Backend cantor(SpaceKind::Cantor);
  CHECK(cantor.phi_digit(CantorPoint::parse("01+0"), 1) == Tri::One);
}

TEST_CASE("phi agrees with subbase membership") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> den(1, 200);
  for (SpaceKind kind : {SpaceKind::GrayUnit, SpaceKind::GraySquare}) {
    const Backend b(kind);
    for (int trial = 0; trial < 60; ++trial) {
      const long q1 = den(rng);
      const long q2 = den(rng);
      const Rat x = make_rat(std::uniform_int_distribution<long>(0, q1)(rng), q1);
      const Rat y = make_rat(std::uniform_int_distribution<long>(0, q2)(rng), q2);
      const Point p = kind == SpaceKind::GrayUnit ? Point(x) : Point(SquarePoint{x, y});
      for (std::size_t n = 0; n < 8; ++n) {
        const Tri d = b.phi_digit(p, n);
        for (Tri t : {Tri::Zero, Tri::One, Tri::Bot}) CHECK(sym_contains(b.subbase_set(n, t), p) == (d == t));
      }
    }
  }
  const Backend cantor(SpaceKind::Cantor);
  for (const char* text : {"+0", "01+1", "110+01", "+011"}) {
    const Point p = CantorPoint::parse(text);
    for (std::size_t n = 0; n < 8; ++n) {
      const Tri d = cantor.phi_digit(p, n);
      for (Tri t : {Tri::Zero, Tri::One, Tri::Bot}) CHECK(sym_contains(cantor.subbase_set(n, t), p) == (d == t));
    }
  }
}

TEST_CASE("Gray subbase sets are regular open") {
  for (SpaceKind kind : {SpaceKind::GrayUnit, SpaceKind::GraySquare}) {
    const Backend b(kind);
    for (std::size_t n = 0; n < 6; ++n) {
      for (Tri t : {Tri::Zero, Tri::One}) {
        const SymSet s = b.subbase_set(n, t);
        CHECK(sym_interior(sym_closure(s)) == s);
      }
      // The two halves share the boundary S(n, B).
      CHECK(sym_intersect(sym_closure(b.subbase_set(n, Tri::Zero)), sym_closure(b.subbase_set(n, Tri::One))) ==
            b.subbase_set(n, Tri::Bot));
    }
  }
}

TEST_CASE("properness") {
  const auto gray = properness_check(Backend(SpaceKind::GrayUnit), 8);
  CHECK(gray.ok);
  CHECK(gray.words_checked == 6561);
  bool saw_one = false;
  for (const auto& line : gray.witnesses) {
    if (line.rfind("e=1 ", 0) == 0) {
      saw_one = true;
      CHECK(line == "e=1 S=(1/2,1] cl S=[1/2,1] Sbar=[1/2,1] ok");
    }
  }
  CHECK(saw_one);
  CHECK(properness_check(Backend(SpaceKind::Cantor), 10).ok);
  CHECK(properness_check(Backend(SpaceKind::GraySquare), 5).ok);
}

TEST_CASE("local subbase evaluation matches the global set") {
  const Backend gray(SpaceKind::GrayUnit);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const SymSet a = IntervalSet::from(random_pieces(rng));
    for (std::size_t n = 0; n < 6; ++n) {
      for (Tri t : {Tri::Zero, Tri::One, Tri::Bot}) {
        const SymSet s = gray.subbase_set(n, t);
        CHECK(gray.meet_subbase(a, n, t) == sym_intersect(a, s));
        CHECK(gray.meet_subbase_closure(a, n, t) == sym_intersect(a, sym_closure(s)));
        CHECK(gray.meet_subbase_complement(a, n, t) == sym_intersect(a, sym_complement(s)));
      }
    }
  }
}
