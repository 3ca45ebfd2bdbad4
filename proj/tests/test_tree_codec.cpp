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
#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "tcompact/error.hpp"
#include "tcompact/tree_codec.hpp"

using namespace tcompact;

namespace {

using WordSet = std::set<std::string>;

BinWord bw(const std::string& s) { return BinWord::parse(s.empty() ? "-" : s); }

WordSet closure_of(const std::vector<std::string>& words) {
  WordSet out;
  for (const auto& w : words) {
    for (std::size_t n = 0; n <= w.size(); ++n) out.insert(w.substr(0, n));
  }
  return out;
}

TreeApprox to_tree(std::size_t depth, const WordSet& words) {
  std::vector<BinWord> ws;
  for (const auto& w : words) ws.push_back(bw(w));
  return TreeApprox::from_words(depth, ws);
}

WordSet to_set(const std::vector<BinWord>& ws) {
  WordSet out;
  for (const auto& w : ws) out.insert(w.str());
  return out;
}

// Brute force: keep w iff some depth-d extension is in the set.
WordSet pruned(const WordSet& t, std::size_t d) {
  WordSet out;
  for (const auto& w : t) {
    if (w.size() != d) continue;
    for (std::size_t n = 0; n <= d; ++n) out.insert(w.substr(0, n));
  }
  return out;
}

WordSet paths(const WordSet& t, std::size_t k) {
  WordSet out;
  for (const auto& w : t) {
    if (w.size() == k) out.insert(w);
  }
  return out;
}

WordSet random_tree(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<std::size_t> len(0, d);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<std::string> ws;
  for (int i = count(rng); i > 0; --i) {
    std::string w;
    for (std::size_t k = len(rng); k > 0; --k) w += static_cast<char>('0' + bit(rng));
    ws.push_back(w);
  }
  return closure_of(ws);
}

std::size_t pending_in(const NameApprox& a, std::size_t lo, std::size_t hi) {
  std::size_t n = 0;
  for (std::size_t i = lo; i < hi; ++i) n += a.at(i) == Cell::Pending;
  return n;
}

TreeApprox one_path_tree() { return to_tree(4, closure_of({"0000", "1"})); }

}  // namespace

TEST_CASE("nu numbering") {
  CHECK(nu(0).str() == "");
  CHECK(nu(3).str() == "00");
  CHECK(nu_inv(bw("10")) == 5);
  std::uint64_t n = 0;
  for (std::size_t len = 0; len <= 6; ++len) {
    for (const auto& s : oracle::bin_words(len)) {
      CHECK(nu_inv(bw(s)) == n);
      CHECK(nu(n) == bw(s));
      ++n;
    }
  }
}

TEST_CASE("tree construction and paths") {
  CHECK(to_set(tree_paths(TreeApprox::full(3), 2)) == WordSet{"00", "01", "10", "11"});
  CHECK(tree_paths(TreeApprox(3), 2).empty());
  CHECK(to_set(tree_paths(to_tree(4, closure_of({"0000"})), 3)) == WordSet{"000"});
  CHECK_THROWS_AS(tree_paths(TreeApprox::full(2), 3), Error);
  CHECK_THROWS_AS(TreeApprox::from_words(3, {bw("01")}), Error);
  CHECK_THROWS_AS(TreeApprox::from_words(2, {bw(""), bw("0"), bw("00"), bw("000")}), Error);
  const TreeApprox t = TreeApprox::prefix_closure(3, {bw("01"), bw("1")});
  CHECK(to_set(t.members()) == WordSet{"", "0", "01", "1"});
}

TEST_CASE("prune_oracle") {
  CHECK(prune_oracle(TreeApprox::full(4)) == TreeApprox::full(4));
  CHECK(prune_oracle(TreeApprox(4)) == TreeApprox(4));
  CHECK(prune_oracle(to_tree(2, closure_of({"00", "01", "1"}))) == to_tree(2, closure_of({"00", "01"})));
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 8;
    const WordSet t = random_tree(rng, d);
    CHECK(to_set(prune_oracle(to_tree(d, t)).members()) == pruned(t, d));
  }
}

TEST_CASE("prune examples") {
  const NameApprox full = prune(TreeApprox::full(4));
  CHECK(full.horizon() == 32);
  CHECK(pending_in(full, 0, full.horizon()) == full.horizon());

  const NameApprox p = prune(one_path_tree());
  CHECK(p.at(0) == Cell::Pending);
  CHECK(p.at(nu_inv(bw("")) + 1) == Cell::Resolved0);
  CHECK(p.at(nu_inv(bw("0")) + 1) == Cell::Resolved0);
  CHECK(p.at(nu_inv(bw("1")) + 1) == Cell::Resolved1);
  CHECK(pending_in(p, 0, settled_window(4)) == 1);

  CHECK(prune(TreeApprox(3)).at(0) == Cell::Resolved0);
}

TEST_CASE("pt_expand examples") {
  CHECK(pt_expand(NameApprox(64), 4) == TreeApprox::full(4));
  NameApprox dead(8);
  dead.set(0, Cell::Resolved0);
  CHECK(pt_expand(dead, 2).empty());
  NameApprox left(8);
  left.set(1, Cell::Resolved0);
  CHECK(to_set(pt_expand(left, 2).members()) == WordSet{"", "0", "00", "01"});
}

TEST_CASE("prune is correct against the brute-force pruned tree") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + trial % 10;
    const WordSet t = random_tree(rng, d);
    const TreeApprox tree = to_tree(d, t);
    const TreeApprox expanded = pt_expand(prune(tree), d);
    const WordSet ref = pruned(t, d);
    for (std::size_t k = 0; k + 2 <= d; ++k) CHECK(to_set(tree_paths(expanded, k)) == paths(ref, k));
    // At full depth the least tree is already exact.
    CHECK(to_set(tree_paths(expanded, d)) == paths(ref, d));
  }
}

TEST_CASE("prune output is monotone in depth") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 9;
    const TreeApprox tree = to_tree(d, random_tree(rng, d));
    const NameApprox deep = prune(tree);
    for (std::size_t k = 0; k < d; ++k) CHECK(word_leq(prune(truncate_tree(tree, k)), deep));
  }
}

TEST_CASE("prune_inverse") {
  const NameApprox p = prune(one_path_tree());
  const TreeApprox back = prune_inverse(name_encode(p, prune_inverse_min_length(3)), 3);
  CHECK(to_set(back.members()) == WordSet{"", "0", "00", "000"});

  NameApprox dead(8);
  dead.set(0, Cell::Resolved0);
  CHECK(prune_inverse(name_encode(dead, prune_inverse_min_length(2)), 2).empty());

  const Bits zeros(prune_inverse_min_length(2), 0);
  CHECK(prune_inverse(zeros, 2) == TreeApprox::full(2));
  CHECK_THROWS_AS(prune_inverse(Bits(3, 0), 2), Error);
}

TEST_CASE("prune_inverse roundtrip") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 8;
    const TreeApprox tree = to_tree(d, random_tree(rng, d));
    const Bits flat = name_encode(prune(tree), prune_inverse_min_length(d));
    CHECK(prune_inverse(flat, d) == prune_oracle(tree));
  }
}

TEST_CASE("pending cells count separated paths") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 5;
    const std::size_t d = k + trial % 4;
    std::uniform_int_distribution<std::size_t> pick(1, std::size_t{1} << k);
    const std::size_t m = pick(rng);
    auto heads = oracle::bin_words(k);
    std::shuffle(heads.begin(), heads.end(), rng);
    std::vector<std::string> ws;
    for (std::size_t i = 0; i < m; ++i) {
      std::string w = heads[i];
      while (w.size() < d) w += static_cast<char>('0' + bit(rng));
      ws.push_back(w);
    }
    // Dead branches hanging off the paths must not add pending cells.
    for (std::size_t i = 0; i < m && d > 1; ++i) ws.push_back(ws[i].substr(0, 1) + std::string(d - 2, '1'));
    const WordSet t = closure_of(ws);
    REQUIRE(paths(pruned(t, d), d).size() == m);
    CHECK(pending_in(prune(to_tree(d, t)), 0, settled_window(k)) == m);
  }
}

TEST_CASE("tree text format") {
  const TreeApprox t = to_tree(2, closure_of({"01", "1"}));
  const std::string text = format_tree(t);
  CHECK(text.rfind("depth 2\n-\n", 0) == 0);
  CHECK(parse_tree(text) == t);
  CHECK_THROWS_AS(parse_tree("depth 2\n-\n01\n"), Error);
  CHECK_THROWS_AS(parse_tree("deep 2\n"), Error);
}

TEST_CASE("tree text comments") {
  CHECK(parse_tree("# header\ndepth 1 # one level\n-\n1\n") == TreeApprox::prefix_closure(1, {BinWord::parse("1")}));
}
