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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace tcompact {

/// A finite binary word of length at most 64, stored left-aligned in a
/// machine word so that `(bits, length)` ordering is the lexicographic order
/// with prefixes first.
class BinWord {
 public:
  static constexpr std::size_t kMaxLength = 64;

  constexpr BinWord() = default;

  /// Parses "0110"; "" and "-" both denote the empty word.
  static BinWord parse(std::string_view text);
  /// The word of length `length` spelling `value` in binary, most significant bit first.
  static BinWord from_value(std::uint64_t value, std::size_t length);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  int operator[](std::size_t i) const noexcept {
    return static_cast<int>((bits_ >> (63 - i)) & 1u);
  }

  /// Integer value of the word read most significant bit first (0 for ε).
  std::uint64_t value() const noexcept { return length_ == 0 ? 0 : bits_ >> (64 - length_); }

  BinWord pushed(int bit) const;
  BinWord concat(BinWord suffix) const;
  BinWord prefix(std::size_t n) const noexcept;
  BinWord parent() const noexcept { return prefix(length_ == 0 ? 0 : length_ - 1); }
  bool is_prefix_of(const BinWord& other) const noexcept;

  /// "-" for the empty word when `dash_for_empty` is set.
  std::string str(bool dash_for_empty = false) const;

  friend bool operator==(const BinWord&, const BinWord&) = default;
  friend std::strong_ordering operator<=>(const BinWord& a, const BinWord& b) noexcept {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.length_ <=> b.length_;
  }

 private:
  std::uint64_t bits_ = 0;
  std::uint32_t length_ = 0;
};

}  // namespace tcompact
