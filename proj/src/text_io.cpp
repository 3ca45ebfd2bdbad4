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

#include "tcompact/text_io.hpp"

#include <fstream>
#include <sstream>

#include "tcompact/error.hpp"

namespace tcompact {

namespace {

std::vector<std::string> tokens(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream l(line);
    std::string tok;
    while (l >> tok) {
      if (tok != "{}") out.push_back(tok);
    }
  }
  return out;
}

}  // namespace

Interval parse_interval(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty interval");
  const char open = text.front();
  if (open != '[' && open != '(') {
    const Rat x = parse_rat(text);
    return Interval{x, x, true, true};
  }
  const char close = text.back();
  if (close != ']' && close != ')') throw Error(ErrorKind::Parse, "interval '" + std::string(text) + "' is not closed");
  const auto body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw Error(ErrorKind::Parse, "interval '" + std::string(text) + "' lacks ','");
  return Interval{parse_rat(body.substr(0, comma)), parse_rat(body.substr(comma + 1)), open == '[', close == ']'};
}

IntervalSet parse_interval_set(std::string_view text) {
  std::vector<Interval> pieces;
  for (const auto& tok : tokens(text)) {
    Interval iv = parse_interval(tok);
    if (iv.lo < 0 || iv.hi > 1) throw Error(ErrorKind::Parse, "interval " + tok + " leaves [0,1]");
    pieces.push_back(std::move(iv));
  }
  return IntervalSet::from(std::move(pieces));
}

CylSet parse_cylinder_set(std::string_view text) {
  std::vector<BinWord> words;
  for (const auto& tok : tokens(text)) words.push_back(BinWord::parse(tok));
  return CylSet::from(std::move(words));
}

ProductSet parse_product_set(std::string_view text) {
  std::vector<ProductSet::Slab> pieces;
  for (const auto& tok : tokens(text)) {
    const auto x = tok.find_first_of("])");
    if (x == std::string::npos || x + 2 >= tok.size() || tok[x + 1] != 'x') {
      throw Error(ErrorKind::Parse, "rectangle '" + tok + "' must look like [a,b]x[c,d]");
    }
    pieces.push_back({parse_interval_set(tok.substr(0, x + 1)), parse_interval_set(tok.substr(x + 2))});
  }
  return ProductSet::from(pieces);
}

SymSet parse_sym_set(const Backend& b, std::string_view text) {
  switch (b.kind()) {
    case SpaceKind::Cantor:
      return parse_cylinder_set(text);
    case SpaceKind::GrayUnit:
      return parse_interval_set(text);
    case SpaceKind::GraySquare:
      return parse_product_set(text);
  }
  throw Error(ErrorKind::Parse, "unknown space");
}

std::vector<Point> parse_points(const Backend& b, std::string_view text) {
  std::vector<Point> out;
  for (const auto& tok : tokens(text)) out.push_back(b.parse_point(tok));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << content;
}

}  // namespace tcompact
