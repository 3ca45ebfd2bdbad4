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

#include "tcompact/cantor_compacts.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "tcompact/error.hpp"

namespace tcompact {

namespace {

const std::vector<CantorPoint>* points_of(const ClosedCantorSpec& a) {
  return std::get_if<std::vector<CantorPoint>>(&a);
}

bool is_empty_set(const ClosedCantorSpec& a) {
  if (const auto* pts = points_of(a)) return pts->empty();
  const auto& t = std::get<TreeApprox>(a);
  return tree_paths(t, t.depth()).empty();
}

}  // namespace

void validate(const ClosedCantorSpec& a) {
  const auto* pts = points_of(a);
  if (pts == nullptr) return;
  std::vector<CantorPoint> sorted = *pts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::InvalidArgument, "point list has duplicates");
  }
}

std::size_t separation_depth(const ClosedCantorSpec& a) {
  const auto* pts = points_of(a);
  if (pts == nullptr) return std::get<TreeApprox>(a).depth();
  std::size_t d = 0;
  for (std::size_t i = 0; i < pts->size(); ++i) {
    for (std::size_t j = i + 1; j < pts->size(); ++j) {
      d = std::max(d, first_difference((*pts)[i], (*pts)[j]) + 1);
    }
  }
  return d;
}

std::vector<BinWord> prefix_set(const ClosedCantorSpec& a, std::size_t k) {
  std::vector<BinWord> out;
  if (const auto* pts = points_of(a)) {
    for (const auto& p : *pts) out.push_back(p.prefix(k));
  } else {
    out = tree_paths(prune_oracle(std::get<TreeApprox>(a)), k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BinWord> t_cantor(const NameApprox& name, std::size_t k) { return tree_paths(pt_expand(name, k), k); }

NameApprox s_cantor(const ClosedCantorSpec& a, std::size_t d) {
  validate(a);
  if (const auto* pts = points_of(a)) {
    if (separation_depth(a) > d) {
      throw Error(ErrorKind::DepthTooSmall, "depth " + std::to_string(d) + " does not separate the points");
    }
    std::vector<BinWord> prefixes;
    for (const auto& p : *pts) prefixes.push_back(p.prefix(d));
    return prune(TreeApprox::prefix_closure(d, prefixes));
  }
  return prune(std::get<TreeApprox>(a));
}

NameApprox interleave(const PairedName& pn) {
  const std::size_t n = std::max(pn.p.horizon(), pn.q.horizon());
  NameApprox flat(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    flat.set(2 * i, pn.p.at(i));
    flat.set(2 * i + 1, pn.q.at(i));
  }
  return flat;
}

PairedName deinterleave(const NameApprox& flat) {
  const std::size_t n = (flat.horizon() + 1) / 2;
  PairedName pn{NameApprox(n), NameApprox(n)};
  for (std::size_t i = 0; i < n; ++i) {
    pn.p.set(i, flat.at(2 * i));
    pn.q.set(i, flat.at(2 * i + 1));
  }
  return pn;
}

PairedName psi_encode(const ClosedCantorSpec& a, std::size_t d) {
  const NameApprox s = s_cantor(a, d);
  const std::size_t n = s.horizon() - 1;
  PairedName pn{NameApprox(n), NameApprox(n)};
  if (is_empty_set(a)) pn.p.set(0, Cell::Resolved1);
  for (std::size_t i = 0; i < n; ++i) pn.q.set(i, s.at(i + 1));
  return pn;
}

std::vector<BinWord> psi_decode(const PairedName& pn, std::size_t k) {
  for (Cell c : pn.p.cells()) {
    if (c == Cell::Resolved1) return {};
  }
  NameApprox name(pn.q.horizon() + 1);
  for (std::size_t i = 0; i < pn.q.horizon(); ++i) name.set(i + 1, pn.q.at(i));
  return t_cantor(name, k);
}

BinWord delta_point_decode(const PairedName& pn, std::size_t k) {
  for (Cell c : pn.p.cells()) {
    if (c == Cell::Resolved1) throw Error(ErrorKind::EmptySetName, "the name denotes the empty set");
  }
  BinWord w;
  for (std::size_t n = 0; n < k; ++n) {
    const Cell c = pn.q.at(nu_inv(w));
    if (c == Cell::Pending) throw Error(ErrorKind::Unresolved, "cell of vertex " + w.str(true) + " is pending");
    w = w.pushed(c == Cell::Resolved1 ? 1 : 0);
  }
  return w;
}

bool matching_check(const ClosedCantorSpec& a, std::size_t k) {
  const std::size_t d = std::max(k, separation_depth(a));
  PairedName pn = psi_encode(a, d);
  std::vector<BinWord> decoded;
  bool has_one = false;
  for (Cell c : pn.p.cells()) has_one = has_one || c == Cell::Resolved1;
  if (!has_one) {
    // Walk the tree track, filling each pending cell met with both bits.
    std::function<void(const BinWord&)> walk = [&](const BinWord& w) {
      if (w.size() == k) {
        decoded.push_back(delta_point_decode(pn, k));
        return;
      }
      const std::size_t cell = nu_inv(w);
      const Cell c = pn.q.at(cell);
      if (c != Cell::Pending) {
        walk(w.pushed(c == Cell::Resolved1 ? 1 : 0));
        return;
      }
      for (Cell fill : {Cell::Resolved0, Cell::Resolved1}) {
        pn.q.set(cell, fill);
        walk(w.pushed(fill == Cell::Resolved1 ? 1 : 0));
      }
      pn.q.set(cell, Cell::Pending);
    };
    walk(BinWord{});
  }
  std::sort(decoded.begin(), decoded.end());
  decoded.erase(std::unique(decoded.begin(), decoded.end()), decoded.end());
  return decoded == prefix_set(a, k);
}

std::string format_cantor_spec(const ClosedCantorSpec& a) {
  if (const auto* pts = points_of(a)) {
    std::string s = "points:\n";
    for (const auto& p : *pts) s += p.str() + "\n";
    return s;
  }
  return "tree:\n" + format_tree(std::get<TreeApprox>(a));
}

ClosedCantorSpec parse_cantor_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string header;
  while (std::getline(in, line)) {
    std::istringstream l(line.substr(0, line.find('#')));
    if (l >> header) break;
  }
  if (header == "tree:") {
    std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_tree(rest);
  }
  if (header != "points:") throw Error(ErrorKind::Parse, "Cantor set must start with 'points:' or 'tree:'");
  std::vector<CantorPoint> pts;
  while (std::getline(in, line)) {
    std::istringstream l(line.substr(0, line.find('#')));
    std::string tok;
    while (l >> tok) pts.push_back(CantorPoint::parse(tok));
  }
  ClosedCantorSpec a = pts;
  validate(a);
  return a;
}

}  // namespace tcompact
