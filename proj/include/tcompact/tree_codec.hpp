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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tcompact/bin_word.hpp"
#include "tcompact/tomega.hpp"

namespace tcompact {

/// Length-lexicographic numbering of binary words: ε, 0, 1, 00, 01, ...
BinWord nu(std::uint64_t n);
std::uint64_t nu_inv(const BinWord& w);

/// A prefix-closed set of binary words of length at most `depth`.
class TreeApprox {
 public:
  static constexpr std::size_t kMaxDepth = 24;

  TreeApprox() : TreeApprox(0) {}
  /// The empty tree of the given depth.
  explicit TreeApprox(std::size_t depth);

  static TreeApprox full(std::size_t depth);
  /// Throws InvalidArgument unless `words` is prefix-closed.
  static TreeApprox from_words(std::size_t depth, const std::vector<BinWord>& words);
  /// The least tree containing `words`.
  static TreeApprox prefix_closure(std::size_t depth, const std::vector<BinWord>& words);

  std::size_t depth() const noexcept { return depth_; }
  bool member(const BinWord& w) const;
  bool empty() const noexcept { return !member_[0]; }
  /// Members in ν order.
  std::vector<BinWord> members() const;

  friend bool operator==(const TreeApprox&, const TreeApprox&) = default;

 private:
  friend TreeApprox truncate_tree(const TreeApprox& t, std::size_t k);

  std::size_t depth_;
  std::vector<std::uint8_t> member_;  // indexed by nu_inv
};

/// The members of length at most k, as a depth-k tree.
TreeApprox truncate_tree(const TreeApprox& t, std::size_t k);

/// Members of length k. Throws DepthExceeded when k > T.depth().
std::vector<BinWord> tree_paths(const TreeApprox& t, std::size_t k);

/// Brute force: keeps w iff some member of full depth extends it.
TreeApprox prune_oracle(const TreeApprox& t);

/// The δ_PT name approximation determined by T, with horizon 2^(d+1).
/// Cell 0 is the emptiness flag, cell nu_inv(w)+1 the child indicator of w.
NameApprox prune(const TreeApprox& t);

/// Number of leading cells (flag plus vertices of depth < d) whose value
/// prune() settles from depth-d information.
std::size_t settled_window(std::size_t d);

/// The least tree generated by the name to depth d.
TreeApprox pt_expand(const NameApprox& name, std::size_t d);

/// Shortest flat prefix prune_inverse accepts for depth d.
std::size_t prune_inverse_min_length(std::size_t d);

/// Reads a δ_PT name from a flat prefix and returns its tree to depth d.
/// Throws InsufficientInput when the prefix is shorter than
/// prune_inverse_min_length(d).
TreeApprox prune_inverse(const Bits& prefix, std::size_t d);

/// "depth d" then one member per line, "-" for the empty word.
std::string format_tree(const TreeApprox& t);
TreeApprox parse_tree(std::string_view text);

}  // namespace tcompact
