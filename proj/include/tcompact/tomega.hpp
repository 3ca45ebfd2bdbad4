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

// Plotkin's T and the three-point space 3, finite bottomed words, and
// finite-precision approximations of T^omega names read through the
// binary representation of T.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tcompact {

/// A symbol of 3: Bot is a definite third value here.
enum class Tri : std::uint8_t { Zero, One, Bot };

/// A cell of a T^omega name seen through a finite prefix. Pending is the
/// T-reading of bottom: nothing resolved yet, may still become 0 or 1.
enum class Cell : std::uint8_t { Resolved0, Resolved1, Pending };

char to_char(Tri t);   // '0', '1', 'B'
char to_char(Cell c);  // '0', '1', '?'
Tri digit_tri(int bit);
Cell digit_cell(int bit);

/// Finite bottomed word (an element of 3^*). Positions past the end read as Bot.
class TWord {
 public:
  TWord() = default;
  explicit TWord(std::vector<Tri> entries) : entries_(std::move(entries)) {}

  /// Parses the text format over {0,1,B}; "-" is the empty word.
  static TWord parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Tri at(std::size_t i) const noexcept { return i < entries_.size() ? entries_[i] : Tri::Bot; }
  const std::vector<Tri>& entries() const noexcept { return entries_; }

  bool is_canonical() const noexcept { return entries_.empty() || entries_.back() != Tri::Bot; }
  TWord canonical() const;
  TWord pushed(Tri t) const;
  TWord prefix(std::size_t n) const;
  /// Shortest prefix carrying `digits` digits; canonical by construction.
  TWord truncate_to_level(std::size_t digits) const;

  std::string str(bool dash_for_empty = false) const;

  friend bool operator==(const TWord&, const TWord&) = default;
  friend auto operator<=>(const TWord&, const TWord&) = default;

 private:
  std::vector<Tri> entries_;
};

/// Length first, then position-wise with 0 < 1 < Bot. The enumeration
/// order used for code assignment.
bool canonical_less(const TWord& a, const TWord& b);

/// What a finite prefix of a flat name determines: `horizon()` cells, each
/// resolved or still pending. Cells at or past the horizon are unknown and
/// read as Pending.
class NameApprox {
 public:
  NameApprox() = default;
  explicit NameApprox(std::size_t horizon) : cells_(horizon, Cell::Pending) {}
  explicit NameApprox(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  std::size_t horizon() const noexcept { return cells_.size(); }
  Cell at(std::size_t i) const noexcept { return i < cells_.size() ? cells_[i] : Cell::Pending; }
  void set(std::size_t i, Cell c);
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  friend bool operator==(const NameApprox&, const NameApprox&) = default;

 private:
  std::vector<Cell> cells_;
};

using Bits = std::vector<std::uint8_t>;

/// Reads T from a finite prefix of its binary name: the parity of the first 1.
Cell tri_decode(const Bits& prefix);

/// An infinite bit sequence `head` followed by zeros.
struct StreamDescriptor {
  Bits head;
  std::uint8_t bit(std::size_t i) const { return i < head.size() ? head[i] : 0; }
  std::string str() const;  // e.g. "10^w"
};

StreamDescriptor tri_encode(Tri t);

/// Diagonal pairing of (track, step) onto flat positions.
std::uint64_t track_pos(std::uint64_t track, std::uint64_t step);

/// Decodes the first `window` tracks of a flat prefix.
NameApprox name_decode(const Bits& prefix, std::size_t window);

/// Canonical flat encoding of a name: Resolved0 as 10^w on its track,
/// Resolved1 as 010^w, Pending as 0^w. The result is the shortest prefix
/// covering every witness, zero-padded to at least `min_length`.
Bits name_encode(const NameApprox& name, std::size_t min_length = 0);

bool word_leq(const TWord& p, const TWord& q);
bool word_leq(const NameApprox& p, const NameApprox& q);
bool compatible(const TWord& p, const TWord& q);

/// Least upper bound of compatible words, canonicalized; throws Incompatible.
TWord word_join(const TWord& p, const TWord& q);

std::size_t level(const TWord& w);
std::size_t bot_count_in_window(const NameApprox& a);
/// Pending cells among the first `window` cells.
std::size_t bot_count_in_window(const NameApprox& a, std::size_t window);

/// Text format: line "horizon m", then the m cells over {0,1,?}.
std::string format_name(const NameApprox& a);
NameApprox parse_name(std::string_view text);

}  // namespace tcompact
