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

#include "tcompact/subbase_codes.hpp"

#include <algorithm>
#include <functional>

#include "tcompact/error.hpp"

namespace tcompact {

namespace {

Tri flip(Tri t) { return t == Tri::Zero ? Tri::One : Tri::Zero; }

// Orders positions so the thin sets (boundaries) are met first.
std::vector<std::size_t> bot_first(const TWord& e, std::size_t n) {
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < n; ++k) {
    if (e.at(k) == Tri::Bot) order.push_back(k);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (e.at(k) != Tri::Bot) order.push_back(k);
  }
  return order;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t s = 0;
  while ((std::size_t{1} << s) < n) ++s;
  return s;
}

}  // namespace

SymSet S_of(const Backend& b, const TWord& e) {
  SymSet s = b.whole();
  for (std::size_t k = 0; k < e.size() && !sym_is_empty(s); ++k) {
    if (e.at(k) != Tri::Bot) s = b.meet_subbase(s, k, e.at(k));
  }
  return s;
}

SymSet Sbar_of(const Backend& b, const TWord& e) {
  SymSet s = b.whole();
  for (std::size_t k = 0; k < e.size() && !sym_is_empty(s); ++k) {
    if (e.at(k) != Tri::Bot) s = b.meet_subbase_complement(s, k, flip(e.at(k)));
  }
  return s;
}

SymSet Sex_n(const Backend& b, const TWord& e, std::size_t n) {
  SymSet s = b.whole();
  for (std::size_t k : bot_first(e, n)) {
    if (sym_is_empty(s)) break;
    s = b.meet_subbase(s, k, e.at(k));
  }
  return s;
}

SymSet Sbarex_n(const Backend& b, const TWord& e, std::size_t n) {
  SymSet s = b.whole();
  for (std::size_t k : bot_first(e, n)) {
    if (sym_is_empty(s)) break;
    s = b.meet_subbase_closure(s, k, e.at(k));
  }
  return s;
}

bool khat_member(const Backend& b, const TWord& e) { return !sym_is_empty(Sbarex_n(b, e, e.size())); }

std::vector<TWord> level_words(std::size_t n, std::size_t len_bound) {
  std::vector<TWord> out;
  std::vector<Tri> cur;
  // Canonical: the last entry is a digit, so words end exactly when the
  // n-th digit is placed.
  std::function<void(std::size_t)> grow = [&](std::size_t digits) {
    if (digits == n) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() >= len_bound) return;
    for (Tri t : {Tri::Zero, Tri::One, Tri::Bot}) {
      if (t == Tri::Bot && cur.size() + (n - digits) >= len_bound) continue;
      cur.push_back(t);
      grow(digits + (t == Tri::Bot ? 0 : 1));
      cur.pop_back();
    }
  };
  grow(0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<TWord> khat_level(const Backend& b, std::size_t n, std::size_t len_bound) {
  std::vector<TWord> out;
  for (auto& e : level_words(n, len_bound)) {
    if (khat_member(b, e)) out.push_back(std::move(e));
  }
  return out;
}

std::size_t find_kd(const Backend& b, const TWord& d, std::size_t budget) {
  SymSet s = b.whole();
  for (std::size_t k = 0; k <= budget; ++k) {
    if (sym_is_empty(s)) return k;
    s = b.meet_subbase_closure(s, k, d.at(k));
  }
  throw Error(ErrorKind::BudgetExhausted, "no k <= " + std::to_string(budget) + " empties the barred set of " +
                                              d.str(true));
}

std::size_t CodeSystem::g(std::size_t n) const {
  if (n >= g_.size()) throw Error(ErrorKind::OutOfRange, "level " + std::to_string(n) + " not built");
  return g_[n];
}

const std::vector<TWord>& CodeSystem::H(std::size_t n) const {
  if (n >= H_.size()) throw Error(ErrorKind::OutOfRange, "level " + std::to_string(n) + " not built");
  return H_[n];
}

const std::vector<TWord>& CodeSystem::Hhat(std::size_t n) const {
  if (n >= Hhat_.size()) throw Error(ErrorKind::OutOfRange, "level " + std::to_string(n) + " not built");
  return Hhat_[n];
}

std::size_t CodeSystem::f(std::size_t n) const {
  if (n >= f_.size()) throw Error(ErrorKind::LayerExhausted, "layer " + std::to_string(n) + " not built");
  return f_[n];
}

std::size_t CodeSystem::layer_of_length(std::size_t length) const {
  auto it = std::find(f_.begin(), f_.end(), length);
  if (it == f_.end()) throw Error(ErrorKind::BadLayerLength, "no layer has codes of length " + std::to_string(length));
  return static_cast<std::size_t>(it - f_.begin());
}

const TWord& CodeSystem::r(const BinWord& w) const {
  const std::size_t n = layer_of_length(w.size());
  return Hhat_[n][r_[n][w.value()]];
}

std::vector<BinWord> CodeSystem::codes(std::size_t n) const {
  const std::size_t len = f(n);
  std::vector<BinWord> out;
  out.reserve(std::size_t{1} << len);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) out.push_back(BinWord::from_value(v, len));
  return out;
}

CodeSystem build_levels(const Backend& b, std::size_t levels, std::size_t budget, std::size_t verify_through) {
  CodeSystem cs(b);
  cs.g_.push_back(0);
  cs.H_.push_back({TWord{}});
  cs.Hhat_.push_back({TWord{}});
  for (std::size_t n = 0; n < levels; ++n) {
    std::size_t next_g = 0;
    for (const auto& d : cs.H_[n]) next_g = std::max(next_g, find_kd(b, d, budget));
    std::vector<TWord> h = level_words(n + 1, next_g);
    std::vector<TWord> hhat;
    const auto& below = cs.Hhat_[n];
    for (const auto& e : h) {
      const TWord t = e.truncate_to_level(n);
      if (std::binary_search(below.begin(), below.end(), t, canonical_less) && khat_member(b, e)) {
        hhat.push_back(e);
      }
    }
    cs.g_.push_back(next_g);
    cs.H_.push_back(std::move(h));
    cs.Hhat_.push_back(std::move(hhat));

    // A K̂ word longer than g(n+1) would show that g is too small.
    if (n + 1 > verify_through) continue;
    const auto& got = cs.Hhat_[n + 1];
    for (const auto& e : khat_level(b, n + 1, next_g + 2)) {
      if (!std::binary_search(got.begin(), got.end(), e, canonical_less)) {
        throw Error(ErrorKind::PropertyViolation, "K-hat word " + e.str(true) + " of level " + std::to_string(n + 1) +
                                                      " is missing from H-hat");
      }
    }
  }
  return cs;
}

void build_codes(CodeSystem& cs, std::size_t layers) {
  if (layers > cs.levels()) throw Error(ErrorKind::LayerExhausted, "levels not built deep enough for codes");
  cs.f_.assign(1, 0);
  cs.r_.assign(1, {0});
  for (std::size_t n = 0; n < layers; ++n) {
    const auto& parents = cs.Hhat_[n];
    const auto& children = cs.Hhat_[n + 1];
    std::vector<std::vector<std::uint32_t>> ext(parents.size());
    std::size_t bits = 1;
    for (std::size_t u = 0; u < parents.size(); ++u) {
      for (std::size_t x = 0; x < children.size(); ++x) {
        if (word_leq(parents[u], children[x])) ext[u].push_back(static_cast<std::uint32_t>(x));
      }
      bits = std::max(bits, ceil_log2(ext[u].size()));
    }
    const std::size_t len = cs.f_[n] + bits;
    if (len > 30) throw Error(ErrorKind::OutOfRange, "code length " + std::to_string(len) + " too large");
    std::vector<std::uint32_t> table(std::size_t{1} << len);
    for (std::uint64_t w = 0; w < cs.r_[n].size(); ++w) {
      const auto& options = ext[cs.r_[n][w]];
      if (options.empty()) {
        throw Error(ErrorKind::PropertyViolation, "H-hat word " + parents[cs.r_[n][w]].str(true) + " has no extension");
      }
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << bits); ++s) {
        table[(w << bits) | s] = s < options.size() ? options[s] : options[0];
      }
    }
    cs.f_.push_back(len);
    cs.r_.push_back(std::move(table));
  }
}

CodeSystem build_code_system(const Backend& b, std::size_t layers, std::size_t budget) {
  CodeSystem cs = build_levels(b, layers, budget);
  build_codes(cs, layers);
  return cs;
}

SymSet R_of(const CodeSystem& cs, const BinWord& w) { return S_of(cs.backend(), cs.r(w)); }

SymSet Rbar_of(const CodeSystem& cs, const BinWord& w) { return Sbar_of(cs.backend(), cs.r(w)); }

bool E_op(const CodeSystem& cs, const BinWord& w, const BinWord& v) { return cs.r(w) == cs.r(v); }

std::optional<BinWord> I_op(const CodeSystem& cs, const BinWord& w, const BinWord& v) {
  const TWord& a = cs.r(w);
  const TWord& c = cs.r(v);
  if (!compatible(a, c)) return std::nullopt;
  const TWord u = word_join(a, c);
  if (sym_is_empty(S_of(cs.backend(), u))) return std::nullopt;
  const std::size_t target = level(u);
  if (target > cs.layers()) {
    throw Error(ErrorKind::LayerExhausted, "join " + u.str(true) + " lies beyond the built layers");
  }
  // Descend from w through codes whose word stays below u.
  std::function<std::optional<BinWord>(const BinWord&, std::size_t)> descend =
      [&](const BinWord& code, std::size_t layer) -> std::optional<BinWord> {
    if (layer == target) return cs.r(code) == u ? std::optional<BinWord>(code) : std::nullopt;
    const std::size_t bits = cs.f(layer + 1) - cs.f(layer);
    std::vector<TWord> tried;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << bits); ++s) {
      const BinWord child = code.concat(BinWord::from_value(s, bits));
      const TWord& x = cs.r(child);
      if (!word_leq(x, u) || std::find(tried.begin(), tried.end(), x) != tried.end()) continue;
      tried.push_back(x);
      if (auto found = descend(child, layer + 1)) return found;
    }
    return std::nullopt;
  };
  if (auto found = descend(w, cs.layer_of_length(w.size()))) return found;
  throw Error(ErrorKind::JoinNotCoded, "join " + u.str(true) + " of " + a.str(true) + " and " + c.str(true) +
                                           " has a nonempty set but no code above " + w.str(true));
}

std::string format_codes(const CodeSystem& cs) {
  std::string s;
  for (std::size_t n = 0; n <= cs.layers(); ++n) {
    s += "layer " + std::to_string(n) + " f " + std::to_string(cs.f(n)) + "\n";
    for (const auto& w : cs.codes(n)) s += w.str(true) + " -> " + cs.r(w).str(true) + "\n";
  }
  return s;
}

std::string format_levels(const CodeSystem& cs) {
  std::string s;
  for (std::size_t n = 0; n <= cs.levels(); ++n) {
    s += "level " + std::to_string(n) + " g " + std::to_string(cs.g(n)) + "\n";
    s += "H";
    for (const auto& e : cs.H(n)) s += " " + e.str(true);
    s += "\nHhat";
    for (const auto& e : cs.Hhat(n)) s += " " + e.str(true);
    s += "\n";
  }
  return s;
}

}  // namespace tcompact
