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

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "tcompact/error.hpp"
#include "tcompact/subbase_codes.hpp"
#include "tcompact/text_io.hpp"

using namespace tcompact;

namespace {

TWord tw(const std::string& s) { return TWord::parse(s.empty() ? "-" : s); }
BinWord bw(const std::string& s) { return BinWord::parse(s.empty() ? "-" : s); }
SymSet iv(const char* text) { return parse_interval_set(text); }

const CodeSystem& gray_codes() {
  static const CodeSystem cs = build_code_system(Backend(SpaceKind::GrayUnit), 6);
  return cs;
}

const CodeSystem& cantor_codes() {
  static const CodeSystem cs = build_code_system(Backend(SpaceKind::Cantor), 5);
  return cs;
}

std::set<std::string> strs(const std::vector<TWord>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(w.str());
  return out;
}

// cl S(k,0) is where the tent digit is 0 or B. Boundaries of words of
// length <= 5 sit on the 1/64 grid, so a nonempty closed set meets it.
bool gray_khat(const std::string& e) {
  for (const auto& x : oracle::grid({64})) {
    bool ok = true;
    for (std::size_t k = 0; k < e.size() && ok; ++k) {
      const char d = oracle::gray_digit(x, k);
      ok = d == e[k] || (e[k] != 'B' && d == 'B');
    }
    if (ok) return true;
  }
  return false;
}

bool cantor_khat(const std::string& e) { return e.find('B') == std::string::npos; }

std::size_t level_of(const std::string& e) { return static_cast<std::size_t>(std::count_if(e.begin(), e.end(), [](char c) { return c != 'B'; })); }

std::set<std::string> oracle_khat(bool gray, std::size_t n, std::size_t bound) {
  std::set<std::string> out;
  for (std::size_t len = 0; len <= bound; ++len) {
    for (const auto& e : oracle::tri_words(len)) {
      if (!e.empty() && e.back() == 'B') continue;
      if (level_of(e) != n) continue;
      if (gray ? gray_khat(e) : cantor_khat(e)) out.insert(e);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("S and Sbar") {
  const Backend gray(SpaceKind::GrayUnit);
  CHECK(S_of(gray, tw("0")) == iv("[0,1/2)"));
  CHECK(Sbar_of(gray, tw("1")) == iv("[1/2,1]"));
  CHECK(S_of(gray, tw("")) == gray.whole());
  CHECK(Sbar_of(gray, tw("")) == gray.whole());
  CHECK(S_of(gray, tw("01")) == iv("(1/4,1/2)"));
  CHECK(Sbar_of(gray, tw("01")) == iv("[1/4,1/2]"));
  const Backend cantor(SpaceKind::Cantor);
  CHECK(S_of(cantor, tw("01")) == SymSet(parse_cylinder_set("01")));
}

TEST_CASE("extended subbase sets") {
  const Backend gray(SpaceKind::GrayUnit);
  CHECK(Sbarex_n(gray, tw("B1"), 2) == iv("[1/2,1/2]"));
  CHECK(sym_is_empty(Sbarex_n(gray, tw(""), 2)));
  CHECK(Sex_n(gray, tw("0"), 1) == iv("[0,1/2)"));
  CHECK(Sbarex_n(gray, tw(""), 1) == iv("[1/2,1/2]"));
  const Backend cantor(SpaceKind::Cantor);
  CHECK(sym_is_empty(Sbarex_n(cantor, tw("0B1"), 3)));
  CHECK(sym_is_empty(Sbarex_n(cantor, tw("01"), 3)));
  CHECK(Sbarex_n(cantor, tw("01"), 2) == SymSet(parse_cylinder_set("01")));
}

TEST_CASE("khat examples") {
  const Backend gray(SpaceKind::GrayUnit);
  CHECK(strs(khat_level(gray, 1, 4)) == std::set<std::string>{"0", "1", "B1"});
  CHECK(khat_member(gray, tw("0B1")));
  CHECK_FALSE(khat_member(gray, tw("B0")));
  const Backend cantor(SpaceKind::Cantor);
  CHECK(strs(khat_level(cantor, 2, 5)) == std::set<std::string>{"00", "01", "10", "11"});
}

TEST_CASE("khat agrees with the grid oracle") {
  const Backend gray(SpaceKind::GrayUnit);
  const Backend cantor(SpaceKind::Cantor);
  for (std::size_t len = 0; len <= 5; ++len) {
    for (const auto& e : oracle::tri_words(len)) {
      CHECK(khat_member(gray, tw(e)) == gray_khat(e));
      CHECK(khat_member(cantor, tw(e)) == cantor_khat(e));
    }
  }
}

TEST_CASE("find_kd") {
  const Backend gray(SpaceKind::GrayUnit);
  CHECK(find_kd(gray, tw(""), 16) == 2);
  CHECK(find_kd(gray, tw("0"), 16) == 3);
  CHECK(find_kd(Backend(SpaceKind::Cantor), tw(""), 16) == 1);
  CHECK_THROWS_AS(find_kd(gray, tw("0"), 2), Error);
}

TEST_CASE("finite branching") {
  const Backend gray(SpaceKind::GrayUnit);
  for (std::size_t n = 0; n <= 2; ++n) {
    for (const auto& e : oracle_khat(true, n, 5)) {
      const std::size_t kd = find_kd(gray, tw(e), 32);
      for (const auto& x : oracle_khat(true, n + 1, 7)) {
        if (!word_leq(tw(e), tw(x))) continue;
        CHECK_MESSAGE(x.size() <= kd, e << " -> " << x);
      }
    }
  }
}

TEST_CASE("levels") {
  const CodeSystem& g = gray_codes();
  CHECK(g.g(0) == 0);
  CHECK(g.g(1) == 2);
  CHECK(strs(g.H(1)) == std::set<std::string>{"0", "1", "B0", "B1"});
  CHECK(strs(g.Hhat(1)) == std::set<std::string>{"0", "1", "B1"});
  const CodeSystem& c = cantor_codes();
  for (std::size_t n = 0; n <= c.levels(); ++n) {
    CHECK(c.g(n) == n);
    std::set<std::string> all;
    for (const auto& s : oracle::bin_words(n)) all.insert(s.empty() ? "" : s);
    CHECK(strs(c.Hhat(n)) == all);
  }
}

TEST_CASE("oracle inclusion") {
  for (bool gray : {true, false}) {
    const CodeSystem& cs = gray ? gray_codes() : cantor_codes();
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto hat = strs(cs.Hhat(n));
      for (const auto& e : oracle_khat(gray, n, 8)) CHECK_MESSAGE(hat.count(e) == 1, e);
    }
  }
}

TEST_CASE("codes") {
  const CodeSystem& c = cantor_codes();
  for (std::size_t n = 0; n <= c.layers(); ++n) {
    CHECK(c.f(n) == n);
    for (const auto& w : c.codes(n)) CHECK(c.r(w).str() == w.str());
  }
  const CodeSystem& g = gray_codes();
  CHECK(g.f(1) == 2);
  std::map<std::string, int> hits;
  for (const auto& w : g.codes(1)) ++hits[g.r(w).str()];
  CHECK(hits.size() == 3);
  CHECK(hits["0"] + hits["1"] + hits["B1"] == 4);
  CHECK_THROWS_AS(g.layer_of_length(3), Error);
  CHECK(g.layer_of_length(2) == 1);
}

TEST_CASE("r is monotone and surjective") {
  for (const CodeSystem* cs : {&gray_codes(), &cantor_codes()}) {
    for (std::size_t n = 1; n <= cs->layers(); ++n) {
      CHECK(cs->f(n) > cs->f(n - 1));
      std::set<std::string> image;
      for (const auto& w : cs->codes(n)) {
        CHECK(level(cs->r(w)) == n);
        CHECK(word_leq(cs->r(w.prefix(cs->f(n - 1))), cs->r(w)));
        image.insert(cs->r(w).str());
      }
      CHECK(image == strs(cs->Hhat(n)));
    }
  }
}

TEST_CASE("R and Rbar") {
  const CodeSystem& g = gray_codes();
  CHECK(R_of(g, BinWord{}) == g.backend().whole());
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& w : g.codes(n)) CHECK(sym_closure(R_of(g, w)) == Rbar_of(g, w));
  }
  const CodeSystem& c = cantor_codes();
  CHECK(R_of(c, bw("011")) == SymSet(parse_cylinder_set("011")));
  CHECK_THROWS_AS(R_of(g, bw("011")), Error);
}

TEST_CASE("layer covering") {
  for (const CodeSystem* cs : {&gray_codes(), &cantor_codes()}) {
    for (std::size_t n = 0; n + 1 <= std::min<std::size_t>(cs->layers(), 4); ++n) {
      for (const auto& w : cs->codes(n)) {
        SymSet u = cs->backend().empty_set();
        for (const auto& v : cs->codes(n + 1)) {
          if (w.is_prefix_of(v)) u = sym_union(u, R_of(*cs, v));
        }
        CHECK(u == R_of(*cs, w));
      }
    }
  }
}

TEST_CASE("I and E") {
  const CodeSystem& c = cantor_codes();
  CHECK_FALSE(I_op(c, bw("0"), bw("1")).has_value());
  CHECK(I_op(c, bw("01"), bw("01")) == bw("01"));

  const CodeSystem& g = gray_codes();
  BinWord zero;
  BinWord bot_one;
  for (const auto& w : g.codes(1)) {
    if (g.r(w).str() == "0") zero = w;
    if (g.r(w).str() == "B1") bot_one = w;
  }
  const auto i = I_op(g, zero, bot_one);
  REQUIRE(i.has_value());
  CHECK(g.r(*i).str() == "01");
  CHECK(zero.is_prefix_of(*i));
  CHECK(R_of(g, *i) == iv("(1/4,1/2)"));
  CHECK(sym_intersect(S_of(g.backend(), tw("0")), S_of(g.backend(), tw("B1"))) == S_of(g.backend(), tw("01")));

  std::map<std::string, std::vector<BinWord>> by_r;
  for (const auto& w : g.codes(1)) by_r[g.r(w).str()].push_back(w);
  for (const auto& [r, ws] : by_r) {
    for (const auto& a : ws) {
      for (const auto& b : ws) CHECK(E_op(g, a, b));
    }
  }
  CHECK_FALSE(E_op(g, zero, bot_one));
}

TEST_CASE("intersection law") {
  for (const CodeSystem* cs : {&gray_codes(), &cantor_codes()}) {
    for (std::size_t n = 0; n <= 2; ++n) {
      const auto ws = cs->codes(n);
      for (const auto& w : ws) {
        for (const auto& v : ws) {
          const auto i = I_op(*cs, w, v);
          const SymSet meet = sym_intersect(R_of(*cs, w), R_of(*cs, v));
          if (!i) {
            CHECK(sym_is_empty(meet));
          } else {
            CHECK(w.is_prefix_of(*i));
            CHECK(R_of(*cs, *i) == meet);
          }
        }
      }
    }
  }
}

TEST_CASE("distinct points are separated at a deep layer") {
  const CodeSystem& g = gray_codes();
  const auto xs = oracle::grid({5, 7});
  const auto codes = g.codes(6);
  std::vector<std::vector<std::size_t>> holders(codes.size());
  for (std::size_t c = 0; c < codes.size(); ++c) {
    const SymSet rb = Rbar_of(g, codes[c]);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (sym_contains(rb, xs[i])) holders[c].push_back(i);
    }
  }
  for (std::size_t a = 0; a < codes.size(); ++a) {
    if (holders[a].size() < 2) continue;
    for (std::size_t b = 0; b < codes.size(); ++b) {
      std::vector<std::size_t> shared;
      std::set_intersection(holders[a].begin(), holders[a].end(), holders[b].begin(), holders[b].end(),
                            std::back_inserter(shared));
      std::set<std::string> distinct;
      for (auto i : shared) distinct.insert(format_rat(xs[i]));
      if (distinct.size() >= 2) CHECK(E_op(g, codes[a], codes[b]));
    }
  }
}

TEST_CASE("dump formats") {
  const CodeSystem& c = cantor_codes();
  const std::string codes = format_codes(c);
  CHECK(codes.rfind("layer 0 f 0\n- -> -\nlayer 1 f 1\n0 -> 0\n1 -> 1\n", 0) == 0);
  const std::string levels = format_levels(gray_codes());
  CHECK(levels.find("level 1 g 2\nH 0 1 B0 B1\nHhat 0 1 B1\n") != std::string::npos);
}
