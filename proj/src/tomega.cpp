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

#include "tcompact/tomega.hpp"

#include <algorithm>
#include <sstream>

#include "tcompact/error.hpp"

namespace tcompact {

char to_char(Tri t) {
  switch (t) {
    case Tri::Zero: return '0';
    case Tri::One: return '1';
    case Tri::Bot: return 'B';
  }
  return '?';
}

char to_char(Cell c) {
  switch (c) {
    case Cell::Resolved0: return '0';
    case Cell::Resolved1: return '1';
    case Cell::Pending: return '?';
  }
  return '?';
}

Tri digit_tri(int bit) { return bit ? Tri::One : Tri::Zero; }
Cell digit_cell(int bit) { return bit ? Cell::Resolved1 : Cell::Resolved0; }

TWord TWord::parse(std::string_view text) {
  std::vector<Tri> entries;
  if (text == "-") return TWord{};
  for (char c : text) {
    switch (c) {
      case '0': entries.push_back(Tri::Zero); break;
      case '1': entries.push_back(Tri::One); break;
      case 'B': entries.push_back(Tri::Bot); break;
      default: throw Error(ErrorKind::Parse, "bad T-word '" + std::string(text) + "'");
    }
  }
  return TWord(std::move(entries));
}

TWord TWord::canonical() const {
  auto e = entries_;
  while (!e.empty() && e.back() == Tri::Bot) e.pop_back();
  return TWord(std::move(e));
}

TWord TWord::pushed(Tri t) const {
  auto e = entries_;
  e.push_back(t);
  return TWord(std::move(e));
}

TWord TWord::prefix(std::size_t n) const {
  n = std::min(n, entries_.size());
  return TWord(std::vector<Tri>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(n)));
}

TWord TWord::truncate_to_level(std::size_t digits) const {
  std::size_t seen = 0;
  std::size_t i = 0;
  while (seen < digits && i < entries_.size()) {
    if (entries_[i] != Tri::Bot) ++seen;
    ++i;
  }
  return prefix(i).canonical();
}

std::string TWord::str(bool dash_for_empty) const {
  if (entries_.empty()) return dash_for_empty ? "-" : "";
  std::string s;
  s.reserve(entries_.size());
  for (Tri t : entries_) s.push_back(to_char(t));
  return s;
}

bool canonical_less(const TWord& a, const TWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.entries() < b.entries();
}

void NameApprox::set(std::size_t i, Cell c) {
  if (i >= cells_.size()) throw Error(ErrorKind::OutOfRange, "cell index past horizon");
  cells_[i] = c;
}

Cell tri_decode(const Bits& prefix) {
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i]) return i % 2 == 0 ? Cell::Resolved0 : Cell::Resolved1;
  }
  return Cell::Pending;
}

std::string StreamDescriptor::str() const {
  std::string s;
  for (auto b : head) s.push_back(static_cast<char>('0' + b));
  return s + "0^w";
}

StreamDescriptor tri_encode(Tri t) {
  switch (t) {
    case Tri::Zero: return {{1}};
    case Tri::One: return {{0, 1}};
    case Tri::Bot: return {{}};
  }
  return {};
}

std::uint64_t track_pos(std::uint64_t track, std::uint64_t step) {
  const std::uint64_t s = track + step;
  return s * (s + 1) / 2 + step;
}

NameApprox name_decode(const Bits& prefix, std::size_t window) {
  std::vector<Cell> cells(window, Cell::Pending);
  for (std::size_t i = 0; i < window; ++i) {
    for (std::uint64_t j = 0;; ++j) {
      const auto pos = track_pos(i, j);
      if (pos >= prefix.size()) break;
      if (prefix[pos]) {
        cells[i] = j % 2 == 0 ? Cell::Resolved0 : Cell::Resolved1;
        break;
      }
    }
  }
  return NameApprox(std::move(cells));
}

Bits name_encode(const NameApprox& name, std::size_t min_length) {
  std::size_t length = min_length;
  for (std::size_t i = 0; i < name.horizon(); ++i) {
    const Cell c = name.at(i);
    if (c == Cell::Pending) continue;
    length = std::max<std::size_t>(length, track_pos(i, c == Cell::Resolved0 ? 0 : 1) + 1);
  }
  Bits bits(length, 0);
  for (std::size_t i = 0; i < name.horizon(); ++i) {
    const Cell c = name.at(i);
    if (c != Cell::Pending) bits[track_pos(i, c == Cell::Resolved0 ? 0 : 1)] = 1;
  }
  return bits;
}

bool word_leq(const TWord& p, const TWord& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.at(i) != Tri::Bot && p.at(i) != q.at(i)) return false;
  }
  return true;
}

bool word_leq(const NameApprox& p, const NameApprox& q) {
  for (std::size_t i = 0; i < p.horizon(); ++i) {
    if (p.at(i) != Cell::Pending && p.at(i) != q.at(i)) return false;
  }
  return true;
}

bool compatible(const TWord& p, const TWord& q) {
  const std::size_t n = std::min(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (p.at(i) != Tri::Bot && q.at(i) != Tri::Bot && p.at(i) != q.at(i)) return false;
  }
  return true;
}

TWord word_join(const TWord& p, const TWord& q) {
  const std::size_t n = std::max(p.size(), q.size());
  std::vector<Tri> out(n, Tri::Bot);
  for (std::size_t i = 0; i < n; ++i) {
    const Tri a = p.at(i);
    const Tri b = q.at(i);
    if (a != Tri::Bot && b != Tri::Bot && a != b) {
      throw Error(ErrorKind::Incompatible, p.str() + " and " + q.str() + " clash at " + std::to_string(i));
    }
    out[i] = a != Tri::Bot ? a : b;
  }
  return TWord(std::move(out)).canonical();
}

std::size_t level(const TWord& w) {
  return static_cast<std::size_t>(
      std::count_if(w.entries().begin(), w.entries().end(), [](Tri t) { return t != Tri::Bot; }));
}

std::size_t bot_count_in_window(const NameApprox& a) { return bot_count_in_window(a, a.horizon()); }

std::size_t bot_count_in_window(const NameApprox& a, std::size_t window) {
  window = std::min(window, a.horizon());
  return static_cast<std::size_t>(std::count(a.cells().begin(), a.cells().begin() + static_cast<std::ptrdiff_t>(window),
                                             Cell::Pending));
}

std::string format_name(const NameApprox& a) {
  std::string s = "horizon " + std::to_string(a.horizon()) + "\n";
  for (Cell c : a.cells()) s.push_back(to_char(c));
  s.push_back('\n');
  return s;
}

NameApprox parse_name(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string keyword;
  std::size_t horizon = 0;
  if (!(in >> keyword >> horizon) || keyword != "horizon") {
    throw Error(ErrorKind::Parse, "name must start with 'horizon m'");
  }
  std::string body;
  std::string chunk;
  while (in >> chunk) body += chunk;
  if (body.size() != horizon) {
    throw Error(ErrorKind::Parse, "name has " + std::to_string(body.size()) + " cells, horizon says " +
                                      std::to_string(horizon));
  }
  std::vector<Cell> cells;
  cells.reserve(horizon);
  for (char c : body) {
    switch (c) {
      case '0': cells.push_back(Cell::Resolved0); break;
      case '1': cells.push_back(Cell::Resolved1); break;
      case '?': cells.push_back(Cell::Pending); break;
      default: throw Error(ErrorKind::Parse, std::string("bad name cell '") + c + "'");
    }
  }
  return NameApprox(std::move(cells));
}

}  // namespace tcompact
