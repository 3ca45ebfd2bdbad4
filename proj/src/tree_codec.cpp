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

#include "tcompact/tree_codec.hpp"

#include <algorithm>
#include <sstream>

#include "tcompact/error.hpp"

namespace tcompact {

namespace {

std::size_t vertex_count(std::size_t depth) { return (std::size_t{1} << (depth + 1)) - 1; }

void check_depth(std::size_t depth) {
  if (depth > TreeApprox::kMaxDepth) {
    throw Error(ErrorKind::OutOfRange, "tree depth " + std::to_string(depth) + " exceeds " +
                                           std::to_string(TreeApprox::kMaxDepth));
  }
}

}  // namespace

BinWord nu(std::uint64_t n) {
  std::size_t len = 0;
  while (((std::uint64_t{1} << (len + 1)) - 1) <= n) ++len;
  return BinWord::from_value(n + 1 - (std::uint64_t{1} << len), len);
}

std::uint64_t nu_inv(const BinWord& w) { return (std::uint64_t{1} << w.size()) - 1 + w.value(); }

TreeApprox::TreeApprox(std::size_t depth) : depth_(depth) {
  check_depth(depth);
  member_.assign(vertex_count(depth), 0);
}

TreeApprox TreeApprox::full(std::size_t depth) {
  TreeApprox t(depth);
  std::fill(t.member_.begin(), t.member_.end(), 1);
  return t;
}

TreeApprox TreeApprox::from_words(std::size_t depth, const std::vector<BinWord>& words) {
  TreeApprox t(depth);
  for (const auto& w : words) {
    if (w.size() > depth) throw Error(ErrorKind::DepthExceeded, "word " + w.str(true) + " deeper than tree");
    t.member_[nu_inv(w)] = 1;
  }
  for (const auto& w : words) {
    if (!w.empty() && !t.member(w.parent())) {
      throw Error(ErrorKind::InvalidArgument, "tree is not prefix-closed: " + w.str(true) + " lacks its parent");
    }
  }
  return t;
}

TreeApprox TreeApprox::prefix_closure(std::size_t depth, const std::vector<BinWord>& words) {
  TreeApprox t(depth);
  for (const auto& w : words) {
    if (w.size() > depth) throw Error(ErrorKind::DepthExceeded, "word " + w.str(true) + " deeper than tree");
    for (std::size_t k = 0; k <= w.size(); ++k) t.member_[nu_inv(w.prefix(k))] = 1;
  }
  return t;
}

bool TreeApprox::member(const BinWord& w) const {
  if (w.size() > depth_) throw Error(ErrorKind::DepthExceeded, "word " + w.str(true) + " deeper than tree");
  return member_[nu_inv(w)] != 0;
}

std::vector<BinWord> TreeApprox::members() const {
  std::vector<BinWord> out;
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) out.push_back(nu(i));
  }
  return out;
}

TreeApprox truncate_tree(const TreeApprox& t, std::size_t k) {
  if (k > t.depth()) throw Error(ErrorKind::DepthExceeded, "cannot truncate below the tree depth");
  TreeApprox out(k);
  std::copy_n(t.member_.begin(), out.member_.size(), out.member_.begin());
  return out;
}

std::vector<BinWord> tree_paths(const TreeApprox& t, std::size_t k) {
  if (k > t.depth()) {
    throw Error(ErrorKind::DepthExceeded,
                "paths of length " + std::to_string(k) + " requested from depth " + std::to_string(t.depth()));
  }
  std::vector<BinWord> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
    BinWord w = BinWord::from_value(v, k);
    if (t.member(w)) out.push_back(w);
  }
  return out;
}

TreeApprox prune_oracle(const TreeApprox& t) {
  // Every prefix of a full-depth member survives, nothing else does.
  return TreeApprox::prefix_closure(t.depth(), tree_paths(t, t.depth()));
}

std::size_t settled_window(std::size_t d) { return std::size_t{1} << d; }

NameApprox prune(const TreeApprox& t) {
  const std::size_t d = t.depth();
  const std::size_t n = vertex_count(d);
  // reach[i]: deepest member below vertex nu(i), or -1 when nu(i) is absent.
  std::vector<int> reach(n, -1);
  for (std::size_t i = n; i-- > 0;) {
    const BinWord w = nu(i);
    if (!t.member(w)) continue;
    int r = static_cast<int>(w.size());
    if (w.size() < d) r = std::max({r, reach[2 * i + 1], reach[2 * i + 2]});
    reach[i] = r;
  }
  // Depth at which the subtree above vertex i has no members left.
  auto death = [&](std::size_t i, std::size_t len) {
    return reach[i] < 0 ? static_cast<int>(len) : reach[i] + 1;
  };
  const int full = static_cast<int>(d);

  NameApprox name(std::size_t{1} << (d + 1));
  if (reach[0] < full) name.set(0, Cell::Resolved0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t len = nu(i).size();
    Cell c = Cell::Pending;
    if (len == d) {
      if (reach[i] < 0) c = Cell::Resolved1;
    } else {
      const std::size_t l = 2 * i + 1;
      const std::size_t r = 2 * i + 2;
      const bool left_dead = reach[l] < full;
      const bool right_dead = reach[r] < full;
      if (left_dead && right_dead) {
        c = death(l, len + 1) <= death(r, len + 1) ? Cell::Resolved1 : Cell::Resolved0;
      } else if (left_dead) {
        c = Cell::Resolved1;
      } else if (right_dead) {
        c = Cell::Resolved0;
      }
    }
    if (c != Cell::Pending) name.set(i + 1, c);
  }
  return name;
}

TreeApprox pt_expand(const NameApprox& name, std::size_t d) {
  TreeApprox out(d);
  if (name.at(0) != Cell::Pending) return out;
  std::vector<BinWord> words;
  std::vector<std::uint8_t> present(vertex_count(d), 0);
  present[0] = 1;
  for (std::size_t i = 0; i < present.size(); ++i) {
    if (!present[i]) continue;
    words.push_back(nu(i));
    if (2 * i + 2 >= present.size()) continue;
    const Cell c = name.at(i + 1);
    if (c != Cell::Resolved1) present[2 * i + 1] = 1;
    if (c != Cell::Resolved0) present[2 * i + 2] = 1;
  }
  return TreeApprox::from_words(d, words);
}

std::size_t prune_inverse_min_length(std::size_t d) {
  const std::uint64_t last = settled_window(d) - 1;
  return track_pos(last, 1) + 1;
}

TreeApprox prune_inverse(const Bits& prefix, std::size_t d) {
  check_depth(d);
  const std::size_t need = prune_inverse_min_length(d);
  if (prefix.size() < need) {
    throw Error(ErrorKind::InsufficientInput, "depth " + std::to_string(d) + " needs " + std::to_string(need) +
                                                  " bits, got " + std::to_string(prefix.size()));
  }
  const NameApprox q = name_decode(prefix, settled_window(d));
  TreeApprox out(d);
  if (q.at(0) != Cell::Pending) return out;
  std::vector<BinWord> members;
  for (std::size_t i = 0; i < vertex_count(d); ++i) {
    const BinWord v = nu(i);
    bool ok = true;
    for (std::size_t k = 0; k < v.size() && ok; ++k) {
      const Cell t = q.at(nu_inv(v.prefix(k)) + 1);
      ok = t == Cell::Pending || t == digit_cell(v[k]);
    }
    if (ok) members.push_back(v);
  }
  return TreeApprox::from_words(d, members);
}

std::string format_tree(const TreeApprox& t) {
  std::string s = "depth " + std::to_string(t.depth()) + "\n";
  for (const auto& w : t.members()) s += w.str(true) + "\n";
  return s;
}

TreeApprox parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t depth = 0;
  bool have_header = false;
  std::vector<BinWord> words;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t") - first + 1);
    if (!have_header) {
      std::istringstream h(line);
      std::string key;
      long long value = -1;
      if (!(h >> key >> value) || key != "depth" || value < 0) {
        throw Error(ErrorKind::Parse, "tree must start with 'depth d'");
      }
      depth = static_cast<std::size_t>(value);
      have_header = true;
      continue;
    }
    words.push_back(BinWord::parse(line));
  }
  if (!have_header) throw Error(ErrorKind::Parse, "tree must start with 'depth d'");
  check_depth(depth);
  return TreeApprox::from_words(depth, words);
}

}  // namespace tcompact
