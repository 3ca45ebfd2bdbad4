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

#include "tcompact/bin_word.hpp"

#include "tcompact/error.hpp"

namespace tcompact {

namespace {

constexpr std::uint64_t top_mask(std::size_t n) {
  return n == 0 ? 0 : (n >= 64 ? ~std::uint64_t{0} : ~std::uint64_t{0} << (64 - n));
}

}  // namespace

BinWord BinWord::parse(std::string_view text) {
  BinWord w;
  if (text == "-") return w;
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(ErrorKind::Parse, "bad binary word '" + std::string(text) + "'");
    w = w.pushed(c - '0');
  }
  return w;
}

BinWord BinWord::from_value(std::uint64_t value, std::size_t length) {
  if (length > kMaxLength) throw Error(ErrorKind::OutOfRange, "binary word longer than 64");
  BinWord w;
  w.length_ = static_cast<std::uint32_t>(length);
  w.bits_ = length == 0 ? 0 : value << (64 - length);
  return w;
}

BinWord BinWord::pushed(int bit) const {
  if (length_ >= kMaxLength) throw Error(ErrorKind::OutOfRange, "binary word longer than 64");
  BinWord w = *this;
  if (bit) w.bits_ |= std::uint64_t{1} << (63 - length_);
  ++w.length_;
  return w;
}

BinWord BinWord::concat(BinWord suffix) const {
  if (length_ + suffix.length_ > kMaxLength) throw Error(ErrorKind::OutOfRange, "binary word longer than 64");
  BinWord w = *this;
  if (suffix.length_ > 0) w.bits_ |= suffix.bits_ >> length_;
  w.length_ += suffix.length_;
  return w;
}

BinWord BinWord::prefix(std::size_t n) const noexcept {
  BinWord w;
  w.length_ = static_cast<std::uint32_t>(n < length_ ? n : length_);
  w.bits_ = bits_ & top_mask(w.length_);
  return w;
}

bool BinWord::is_prefix_of(const BinWord& other) const noexcept {
  return length_ <= other.length_ && (other.bits_ & top_mask(length_)) == bits_;
}

std::string BinWord::str(bool dash_for_empty) const {
  if (length_ == 0) return dash_for_empty ? "-" : "";
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) s[i] = static_cast<char>('0' + (*this)[i]);
  return s;
}

}  // namespace tcompact
