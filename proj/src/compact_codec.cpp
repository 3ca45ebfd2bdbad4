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

#include "tcompact/compact_codec.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <variant>

#include "tcompact/error.hpp"

namespace tcompact {

namespace {

// R(w) memoized by r(w) for the duration of one call.
class RCache {
 public:
  explicit RCache(const CodeSystem& cs) : cs_(cs) {}

  const SymSet& open(const BinWord& w) {
    const TWord& u = cs_.r(w);
    auto it = open_.find(u);
    if (it == open_.end()) it = open_.emplace(u, S_of(cs_.backend(), u)).first;
    return it->second;
  }

  const SymSet& barred(const BinWord& w) {
    const TWord& u = cs_.r(w);
    auto it = barred_.find(u);
    if (it == barred_.end()) it = barred_.emplace(u, Sbar_of(cs_.backend(), u)).first;
    return it->second;
  }

 private:
  const CodeSystem& cs_;
  std::map<TWord, SymSet> open_;
  std::map<TWord, SymSet> barred_;
};

bool covered(const SymSet& a, const std::vector<const SymSet*>& sets, const SymSet& empty) {
  SymSet u = empty;
  for (const SymSet* s : sets) u = sym_union(u, *s);
  return sym_subset(a, u);
}

// Drops codes, scanning from the lexicographically largest, while the rest
// still cover A.
std::vector<BinWord> minimal_subcover(const std::vector<BinWord>& codes, const SymSet& a, RCache& rc,
                                      const SymSet& empty) {
  const std::size_t n = codes.size();
  std::vector<SymSet> part(n);
  for (std::size_t i = 0; i < n; ++i) part[i] = sym_intersect(rc.open(codes[i]), a);
  std::vector<bool> kept(n, true);
  for (std::size_t i = n; i-- > 0;) {
    std::vector<const SymSet*> others;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !kept[j]) continue;
      if (!sym_is_empty(sym_intersect(part[i], rc.open(codes[j])))) others.push_back(&rc.open(codes[j]));
    }
    if (covered(part[i], others, empty)) kept[i] = false;
  }
  std::vector<BinWord> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (kept[i]) out.push_back(codes[i]);
  }
  return out;
}

std::vector<BinWord> children(const CodeSystem& cs, const BinWord& v, std::size_t layer) {
  const std::size_t bits = cs.f(layer + 1) - cs.f(layer);
  std::vector<BinWord> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << bits); ++s) out.push_back(v.concat(BinWord::from_value(s, bits)));
  return out;
}

}  // namespace

std::vector<BinWord> cover_search(const CodeSystem& cs, const SymSet& a, std::size_t n) {
  if (n > cs.layers()) throw Error(ErrorKind::LayerExhausted, "layer " + std::to_string(n) + " not built");
  RCache rc(cs);
  std::vector<BinWord> w;
  SymSet u = cs.backend().empty_set();
  for (const auto& code : cs.codes(n)) {
    const SymSet& r = rc.open(code);
    if (sym_is_empty(sym_intersect(r, a))) continue;
    w.push_back(code);
    u = sym_union(u, r);
  }
  if (!sym_subset(a, u)) throw Error(ErrorKind::NotFound, "layer " + std::to_string(n) + " codes do not cover the set");
  return w;
}

Encoding s_general(const CodeSystem& cs, const SymSet& a, std::size_t stages) {
  if (!cs.backend().owns(a)) throw Error(ErrorKind::BackendMismatch, "set does not belong to " + cs.backend().name());
  if (stages > cs.layers()) {
    throw Error(ErrorKind::LayerExhausted,
                std::to_string(stages) + " stages need " + std::to_string(stages) + " layers, have " +
                    std::to_string(cs.layers()));
  }
  RCache rc(cs);
  const SymSet empty = cs.backend().empty_set();
  Encoding enc;
  enc.trace.stages.push_back(Stage{0, 0, {BinWord{}}});
  for (std::size_t i = 0; i < stages; ++i) {
    const Stage& prev = enc.trace.stages.back();
    const std::size_t layer = prev.layer + 1;

    std::vector<BinWord> next;
    for (const auto& v : prev.codes) {
      for (const auto& w : children(cs, v, prev.layer)) {
        if (sym_is_empty(sym_intersect(rc.open(w), a))) continue;
        if (auto joined = I_op(cs, v, w)) next.push_back(*joined);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    // One code per r-value, the lexicographically least.
    std::vector<BinWord> distinct;
    std::vector<TWord> seen;
    for (const auto& w : next) {
      const TWord& u = cs.r(w);
      if (std::find(seen.begin(), seen.end(), u) != seen.end()) continue;
      seen.push_back(u);
      if (!sym_is_empty(rc.barred(w))) distinct.push_back(w);
    }

    Stage stage{i + 1, layer, minimal_subcover(distinct, a, rc, empty)};
    std::vector<const SymSet*> sets;
    for (const auto& w : stage.codes) sets.push_back(&rc.open(w));
    if (!covered(a, sets, empty)) {
      throw Error(ErrorKind::PropertyViolation, "stage " + std::to_string(i + 1) + " codes do not cover the set");
    }
    enc.trace.stages.push_back(std::move(stage));
  }

  const std::size_t layer = enc.trace.stages.back().layer;
  enc.depth = cs.f(layer);
  std::vector<BinWord> all;
  for (const auto& st : enc.trace.stages) all.insert(all.end(), st.codes.begin(), st.codes.end());
  enc.name = prune(TreeApprox::prefix_closure(enc.depth, all));
  return enc;
}

SymSet t_general(const CodeSystem& cs, const NameApprox& name, std::size_t n) {
  if (n > cs.layers()) throw Error(ErrorKind::BadLayerLength, "layer " + std::to_string(n) + " not built");
  const TreeApprox tree = pt_expand(name, cs.f(n));
  RCache rc(cs);
  SymSet result = cs.backend().whole();
  for (std::size_t m = 0; m <= n; ++m) {
    SymSet layer_union = cs.backend().empty_set();
    std::vector<TWord> seen;
    for (const auto& w : tree_paths(tree, cs.f(m))) {
      const TWord& u = cs.r(w);
      if (std::find(seen.begin(), seen.end(), u) != seen.end()) continue;
      seen.push_back(u);
      layer_union = sym_union(layer_union, rc.barred(w));
    }
    result = sym_intersect(result, layer_union);
  }
  return result;
}

bool match_general_check(const CodeSystem& cs, const SymSet& a, const std::vector<Point>& xs, std::size_t k) {
  const Encoding enc = s_general(cs, a, k);
  // Emptiness track: a resolved 1 iff A is empty; the tree track is the
  // name without its flag cell.
  const bool empty_flag = sym_is_empty(a);
  NameApprox q(enc.name.horizon() - 1);
  for (std::size_t i = 0; i + 1 < enc.name.horizon(); ++i) q.set(i, enc.name.at(i + 1));

  RCache rc(cs);
  const std::size_t depth = cs.f(k);
  std::vector<std::size_t> code_lengths;
  for (std::size_t m = 0; m <= k; ++m) code_lengths.push_back(cs.f(m));
  for (const auto& x : xs) {
    bool found = false;
    if (!empty_flag) {
      std::function<bool(const BinWord&)> walk = [&](const BinWord& w) {
        if (std::find(code_lengths.begin(), code_lengths.end(), w.size()) != code_lengths.end() &&
            !sym_contains(rc.barred(w), x)) {
          return false;
        }
        if (w.size() == depth) return true;
        const Cell c = q.at(nu_inv(w));
        if (c != Cell::Resolved1 && walk(w.pushed(0))) return true;
        return c != Cell::Resolved0 && walk(w.pushed(1));
      };
      found = walk(BinWord{});
    }
    if (found != sym_contains(a, x)) return false;
  }
  return true;
}

std::size_t bottom_count(const Encoding& e, std::size_t window) {
  std::size_t w = settled_window(e.depth);
  if (window != 0) w = std::min(w, window);
  return bot_count_in_window(e.name, w);
}

namespace {

// More than one connected piece of A inside a single code's closure.
bool merges_pieces(const SymSet& meet) {
  if (const auto* iv = std::get_if<IntervalSet>(&meet)) return iv->intervals().size() > 1;
  if (const auto* ps = std::get_if<ProductSet>(&meet)) {
    if (ps->slabs().size() > 1) return true;
    return !ps->empty() && (ps->slabs()[0].x.intervals().size() > 1 || ps->slabs()[0].y.intervals().size() > 1);
  }
  return false;
}

bool separates(const CodeSystem& cs, const Encoding& e, const SymSet& a) {
  for (const auto& w : e.trace.stages.back().codes) {
    if (merges_pieces(sym_intersect(Rbar_of(cs, w), a))) return false;
  }
  return true;
}

}  // namespace

std::size_t bot_count_stable(const CodeSystem& cs, const SymSet& a, const std::vector<std::size_t>& schedule,
                             std::size_t window) {
  std::optional<std::size_t> last;
  for (std::size_t stages : schedule) {
    const Encoding e = s_general(cs, a, stages);
    if (!separates(cs, e, a)) continue;
    const std::size_t count = bottom_count(e, window);
    if (last && *last == count) return count;
    last = count;
  }
  throw Error(ErrorKind::NotStabilized, "bottom count did not stabilize within the schedule");
}

SymSet sym_fatten(const SymSet& a, const Rat& eps) {
  if (const auto* iv = std::get_if<IntervalSet>(&a)) return fatten(*iv, eps);
  if (const auto* ps = std::get_if<ProductSet>(&a)) {
    std::vector<ProductSet::Slab> out;
    for (const auto& s : ps->slabs()) {
      for (const auto& yi : s.y.intervals()) {
        out.push_back({fatten(s.x, eps), fatten(IntervalSet::from({yi}), eps)});
      }
    }
    return ProductSet::from(out);
  }
  throw Error(ErrorKind::InvalidArgument, "fattening is defined on interval and product sets");
}

RoundtripReport roundtrip_check(const CodeSystem& cs, const SymSet& a, const Rat& eps, std::size_t stage_bound) {
  RoundtripReport rep;
  const SymSet fat = sym_fatten(a, eps);
  for (std::size_t s = 1; s <= stage_bound; ++s) {
    const Encoding enc = s_general(cs, a, s);
    const SymSet decoded = t_general(cs, enc.name, s);
    const bool inside = sym_subset(a, decoded);
    const bool tight = sym_subset(decoded, fat);
    rep.lines.push_back("stage " + std::to_string(s) + " decode " + sym_str(decoded) + (inside ? " contains" : " MISSES") +
                        " A" + (tight ? ", within eps" : ""));
    rep.contained = rep.contained && inside;
    if (tight && !rep.fattened_at) {
      rep.fattened_at = s;
      break;
    }
  }
  return rep;
}

std::string format_trace(const LayerSets& t) {
  std::string s;
  for (const auto& st : t.stages) {
    s += "stage " + std::to_string(st.index) + " layer " + std::to_string(st.layer) + "\n";
    for (const auto& w : st.codes) s += w.str(true) + "\n";
  }
  return s;
}

}  // namespace tcompact
