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

// Independent reference implementations used only by the tests.

#pragma once

#include <string>
#include <vector>

#include "tcompact/rational.hpp"
#include "tcompact/tomega.hpp"

namespace oracle {

using tcompact::Rat;

inline Rat tent(Rat x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x = x <= Rat(1, 2) ? Rat(2 * x) : Rat(2 - 2 * x);
  return x;
}

// Digit n of the Gray name of x, straight from the tent map.
inline char gray_digit(const Rat& x, std::size_t n) {
  const Rat y = tent(x, n);
  if (y < Rat(1, 2)) return '0';
  if (y > Rat(1, 2)) return '1';
  return 'B';
}

// Rationals k/q in [0,1] for every q in `dens`.
inline std::vector<Rat> grid(const std::vector<long>& dens) {
  std::vector<Rat> out;
  for (long q : dens) {
    for (long k = 0; k <= q; ++k) out.push_back(tcompact::make_rat(k, q));
  }
  return out;
}

// Dyadic and triadic sample points plus a few odd ones.
inline std::vector<Rat> samples() { return grid({1, 2, 3, 5, 7, 12, 64, 96, 256}); }

// Every word over {0,1,B} of length exactly n.
inline std::vector<std::string> tri_words(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      for (char c : {'0', '1', 'B'}) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<std::string> bin_words(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      for (char c : {'0', '1'}) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
