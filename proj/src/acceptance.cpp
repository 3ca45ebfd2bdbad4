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

#include "tcompact/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <sstream>

#include "tcompact/error.hpp"

namespace tcompact {

TreeApprox random_tree(std::mt19937_64& rng, std::size_t depth, double keep) {
  std::bernoulli_distribution coin(keep);
  std::vector<BinWord> words{BinWord{}};
  std::vector<BinWord> frontier{BinWord{}};
  for (std::size_t level = 0; level < depth; ++level) {
    std::vector<BinWord> next;
    for (const auto& w : frontier) {
      for (int bit : {0, 1}) {
        if (coin(rng)) next.push_back(w.pushed(bit));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return TreeApprox::from_words(depth, words);
}

CantorPoint random_cantor_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pre_len(0, 6);
  std::uniform_int_distribution<int> per_len(1, 4);
  std::uniform_int_distribution<int> bit(0, 1);
  BinWord u;
  BinWord v;
  for (int i = pre_len(rng); i > 0; --i) u = u.pushed(bit(rng));
  for (int i = per_len(rng); i > 0; --i) v = v.pushed(bit(rng));
  return CantorPoint(u, v);
}

std::vector<CantorPoint> random_cantor_points(std::mt19937_64& rng, std::size_t m, std::size_t max_sep) {
  for (;;) {
    std::vector<CantorPoint> pts;
    while (pts.size() < m) {
      CantorPoint p = random_cantor_point(rng);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    if (separation_depth(ClosedCantorSpec{pts}) <= max_sep) return pts;
  }
}

IntervalSet random_interval_union(std::mt19937_64& rng, long max_den) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<long> den(1, max_den);
  std::vector<Interval> pieces;
  for (int i = count(rng); i > 0; --i) {
    const long q = den(rng);
    std::uniform_int_distribution<long> num(0, q);
    Rat a = make_rat(num(rng), q);
    Rat b = make_rat(num(rng), q);
    if (b < a) std::swap(a, b);
    pieces.push_back(Interval{a, b, true, true});
  }
  return IntervalSet::from(std::move(pieces));
}

CylSet random_cylinders(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<BinWord> words;
  for (int i = count(rng); i > 0; --i) {
    BinWord w;
    for (std::size_t k = len(rng); k > 0; --k) w = w.pushed(bit(rng));
    words.push_back(w);
  }
  return CylSet::from(std::move(words));
}

NameApprox relax_name(std::mt19937_64& rng, const NameApprox& b, double relax) {
  std::bernoulli_distribution coin(relax);
  NameApprox a = b;
  for (std::size_t i = 0; i < a.horizon(); ++i) {
    if (a.at(i) != Cell::Pending && coin(rng)) a.set(i, Cell::Pending);
  }
  return a;
}

namespace {

using Clock = std::chrono::steady_clock;

std::mt19937_64 case_rng(std::uint64_t seed, int id, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

std::string words_str(const std::vector<BinWord>& ws) {
  if (ws.empty()) return "{}";
  std::string s;
  for (const auto& w : ws) s += (s.empty() ? "" : " ") + w.str(true);
  return s;
}

std::string points_str(const std::vector<CantorPoint>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + p.str();
  return s;
}

// Code systems are expensive enough to share between criteria.
const CodeSystem& code_system(SpaceKind kind, std::size_t layers) {
  static std::map<std::pair<SpaceKind, std::size_t>, std::unique_ptr<CodeSystem>> cache;
  auto& slot = cache[{kind, layers}];
  if (!slot) slot = std::make_unique<CodeSystem>(build_code_system(Backend(kind), layers));
  return *slot;
}

// A failing case aborts the criterion with its witness.
struct CaseFailure {
  std::string witness;
};

[[noreturn]] void fail(int id, std::uint64_t seed, std::size_t index, const std::string& what) {
  std::ostringstream os;
  os << "case " << index << " (criterion " << id << ", seed " << seed << "): " << what;
  throw CaseFailure{os.str()};
}


std::vector<TreeApprox> tree_corpus(std::uint64_t seed) {
  std::vector<TreeApprox> out;
  for (std::size_t i = 0; i < 500; ++i) {
    auto rng = case_rng(seed, 1, i);
    std::uniform_int_distribution<std::size_t> depth(0, 10);
    std::uniform_real_distribution<double> keep(0.45, 0.95);
    out.push_back(random_tree(rng, depth(rng), keep(rng)));
  }
  return out;
}

std::vector<std::vector<CantorPoint>> cantor_corpus(std::uint64_t seed) {
  std::vector<std::vector<CantorPoint>> out;
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = case_rng(seed, 3, i);
    std::uniform_int_distribution<std::size_t> m(1, 8);
    out.push_back(random_cantor_points(rng, m(rng), 12));
  }
  return out;
}

const std::vector<Rat>& gray_pool() {
  static const std::vector<Rat> pool{make_rat(1, 4), make_rat(1, 3), make_rat(1, 2), make_rat(2, 3), make_rat(3, 4)};
  return pool;
}

// Every subset of the pool with 1 to 4 points.
std::vector<IntervalSet> gray_point_corpus() {
  std::vector<IntervalSet> out;
  const auto& pool = gray_pool();
  for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
    const int m = __builtin_popcount(mask);
    if (m > 4) continue;
    IntervalSet s;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1u << i)) s = unite(s, IntervalSet::point(pool[i]));
    }
    out.push_back(s);
  }
  return out;
}

std::size_t point_count(const IntervalSet& s) { return s.intervals().size(); }

std::string crit1(std::uint64_t seed) {
  const auto corpus = tree_corpus(seed);
  std::size_t checks = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const TreeApprox& t = corpus[i];
    const TreeApprox expanded = pt_expand(prune(t), t.depth());
    const TreeApprox oracle = prune_oracle(t);
    for (std::size_t k = 0; k <= std::min<std::size_t>(t.depth(), 8); ++k) {
      const auto got = tree_paths(expanded, k);
      const auto want = tree_paths(oracle, k);
      ++checks;
      if (got != want) {
        fail(1, seed, i, "depth " + std::to_string(k) + " paths " + words_str(got) + " vs oracle " + words_str(want) +
                             "\n" + format_tree(t));
      }
    }
  }
  return std::to_string(corpus.size()) + " trees, " + std::to_string(checks) + " path sets equal";
}

std::string crit2(std::uint64_t seed) {
  const auto corpus = tree_corpus(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const TreeApprox& t = corpus[i];
    const std::size_t k = std::min<std::size_t>(t.depth(), 6);
    const Bits flat = name_encode(prune(t), prune_inverse_min_length(k));
    const TreeApprox got = prune_inverse(flat, k);
    const TreeApprox want = truncate_tree(prune_oracle(t), k);
    if (!(got == want)) fail(2, seed, i, "prune_inverse differs from the pruned tree\n" + format_tree(t));
  }
  return std::to_string(corpus.size()) + " trees reproduced to depth 6";
}

std::string crit3(std::uint64_t seed) {
  const auto corpus = cantor_corpus(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ClosedCantorSpec a = corpus[i];
    const std::size_t sep = std::max<std::size_t>(separation_depth(a), 1);
    for (std::size_t d = sep; d <= sep + 2; ++d) {
      const std::size_t bots = bot_count_in_window(s_cantor(a, d), settled_window(d));
      if (bots != corpus[i].size()) {
        fail(3, seed, i, "depth " + std::to_string(d) + " gives " + std::to_string(bots) + " bottoms for " +
                             std::to_string(corpus[i].size()) + " points: " + points_str(corpus[i]));
      }
    }
  }
  return std::to_string(corpus.size()) + " point sets, counts equal |A| at depths sep..sep+2";
}

std::string crit4(std::uint64_t seed) {
  const CodeSystem& cs = code_system(SpaceKind::GrayUnit, 8);
  const auto corpus = gray_point_corpus();
  const std::vector<std::size_t> schedule{1, 2, 3, 4, 5, 6, 7, 8};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::size_t count = 0;
    try {
      count = bot_count_stable(cs, corpus[i], schedule);
    } catch (const Error& e) {
      fail(4, seed, i, std::string(e.what()) + " for " + corpus[i].str());
    }
    if (count != point_count(corpus[i])) {
      fail(4, seed, i, "stabilized count " + std::to_string(count) + " for " + corpus[i].str());
    }
  }
  return std::to_string(corpus.size()) + " subsets, stabilized counts equal cardinality";
}

std::string crit5(std::uint64_t seed) {
  const CodeSystem& cs = code_system(SpaceKind::GrayUnit, 10);
  const Rat eps = make_rat(1, 64);
  std::size_t worst = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    auto rng = case_rng(seed, 5, i);
    const IntervalSet a = random_interval_union(rng, 64);
    const RoundtripReport rep = roundtrip_check(cs, a, eps, 10);
    if (!rep.contained) fail(5, seed, i, "decode misses part of " + a.str());
    if (!rep.fattened_at) fail(5, seed, i, "decode not within 2^-6 of " + a.str() + " by stage 10");
    worst = std::max(worst, *rep.fattened_at);
  }
  return "50 interval unions, within 2^-6 by stage " + std::to_string(worst);
}

std::string crit6(std::uint64_t seed) {
  const CodeSystem& cantor = code_system(SpaceKind::Cantor, 6);
  const CodeSystem& gray = code_system(SpaceKind::GrayUnit, 8);
  for (std::size_t i = 0; i < 100; ++i) {
    auto rng = case_rng(seed, 6, i);
    std::uniform_real_distribution<double> relax(0.1, 0.6);

    // Cantor: names of random trees, decoded both ways.
    std::uniform_real_distribution<double> keep(0.45, 0.95);
    const NameApprox b = prune(random_tree(rng, 6, keep(rng)));
    const NameApprox a = relax_name(rng, b, relax(rng));
    const auto pa = t_cantor(a, 6);
    const auto pb = t_cantor(b, 6);
    if (!std::includes(pa.begin(), pa.end(), pb.begin(), pb.end())) {
      fail(6, seed, i, "Cantor paths " + words_str(pa) + " do not contain " + words_str(pb));
    }
    for (std::size_t n = 0; n <= 6; ++n) {
      if (!sym_subset(t_general(cantor, b, n), t_general(cantor, a, n))) {
        fail(6, seed, i, "Cantor general decode not monotone at layer " + std::to_string(n));
      }
    }

    // GrayUnit: names of random interval unions.
    const IntervalSet set = random_interval_union(rng, 64);
    std::uniform_int_distribution<std::size_t> stages(1, 6);
    const std::size_t s = stages(rng);
    const NameApprox gb = s_general(gray, set, s).name;
    const NameApprox ga = relax_name(rng, gb, relax(rng));
    for (std::size_t n = 0; n <= s; ++n) {
      const SymSet da = t_general(gray, ga, n);
      const SymSet db = t_general(gray, gb, n);
      if (!sym_subset(db, da)) {
        fail(6, seed, i, "GrayUnit decode " + sym_str(db) + " not inside " + sym_str(da) + " at layer " +
                             std::to_string(n) + " for " + set.str());
      }
    }
  }
  return "100 name pairs on cantor and gray-unit, decodes nested";
}

std::string crit7(std::uint64_t seed) {
  std::string summary;
  for (auto [kind, len] : {std::pair{SpaceKind::GrayUnit, std::size_t{8}}, std::pair{SpaceKind::Cantor, std::size_t{12}}}) {
    const PropernessReport rep = properness_check(Backend(kind), len);
    if (!rep.ok) {
      fail(7, seed, 0, std::string(to_string(kind)) + " word " + (rep.counterexample ? rep.counterexample->str(true) : "?") +
                           ": " + rep.detail);
    }
    summary += (summary.empty() ? "" : ", ") + std::string(to_string(kind)) + " " + std::to_string(rep.words_checked) +
               " words of length <= " + std::to_string(len);
  }
  return summary;
}

std::string crit8(std::uint64_t seed) {
  const Backend b(SpaceKind::GrayUnit);
  const CodeSystem& cs = code_system(SpaceKind::GrayUnit, 8);
  std::size_t total = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto& hhat = cs.Hhat(n);
    for (const auto& e : khat_level(b, n, cs.g(n) + 3)) {
      ++total;
      if (!std::binary_search(hhat.begin(), hhat.end(), e, canonical_less)) {
        fail(8, seed, n, "K-hat word " + e.str(true) + " missing from H-hat level " + std::to_string(n));
      }
    }
  }
  std::size_t successors = 0;
  for (std::size_t n = 0; n <= 2; ++n) {
    for (const auto& e : khat_level(b, n, cs.g(n) + 3)) {
      const std::size_t kd = find_kd(b, e, 64);
      for (const auto& x : khat_level(b, n + 1, kd + 3)) {
        if (!word_leq(e, x)) continue;
        ++successors;
        if (x.size() > kd) {
          fail(8, seed, n, "successor " + x.str(true) + " of " + e.str(true) + " longer than k_d = " + std::to_string(kd));
        }
      }
    }
  }
  return std::to_string(total) + " K-hat words through level 3 inside H-hat, " + std::to_string(successors) +
         " successors within k_d";
}

std::string crit9(std::uint64_t seed) {
  const CodeSystem& cs = code_system(SpaceKind::Cantor, 6);
  const std::size_t d = 6;
  for (std::size_t i = 0; i < 52; ++i) {
    auto rng = case_rng(seed, 9, i);
    CylSet a;
    if (i == 50) {
      a = CylSet::whole();
    } else if (i < 50) {
      a = random_cylinders(rng, d);
    }
    std::vector<BinWord> leaves;
    for (const auto& w : a.words()) {
      const std::size_t free = d - w.size();
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << free); ++v) leaves.push_back(w.concat(BinWord::from_value(v, free)));
    }
    const ClosedCantorSpec spec = TreeApprox::prefix_closure(d, leaves);
    const NameApprox special = s_cantor(spec, d);
    const Encoding general = s_general(cs, a, d);
    if (!(general.name == special)) {
      fail(9, seed, i, "names differ for " + a.str() + "\n" + format_name(general.name) + format_name(special));
    }
    const SymSet decoded = t_general(cs, general.name, d);
    const SymSet expected = CylSet::from(t_cantor(special, d));
    if (!(decoded == expected)) {
      fail(9, seed, i, "decode " + sym_str(decoded) + " vs " + sym_str(expected) + " for " + a.str());
    }
    if (!(decoded == SymSet(a))) fail(9, seed, i, "decode " + sym_str(decoded) + " differs from " + a.str());
  }
  return "50 cylinder sets plus empty and whole space agree to depth 6";
}

std::string crit10(std::uint64_t seed) {
  const std::size_t k = 6;
  std::size_t cases = 0;
  auto corpus = cantor_corpus(seed);
  std::vector<ClosedCantorSpec> specs(corpus.begin(), corpus.end());
  specs.push_back(std::vector<CantorPoint>{});
  specs.push_back(TreeApprox::full(k));
  for (std::size_t i = 0; i < specs.size(); ++i) {
    ++cases;
    if (!matching_check(specs[i], k)) fail(10, seed, i, "Cantor matching fails for\n" + format_cantor_spec(specs[i]));
  }

  const CodeSystem& cs = code_system(SpaceKind::GrayUnit, 8);
  const Backend& b = cs.backend();
  std::vector<Point> xs;
  for (const char* p : {"0", "1/8", "1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "7/8", "1"}) {
    xs.push_back(b.parse_point(p));
  }
  std::vector<SymSet> sets;
  for (const auto& s : gray_point_corpus()) sets.push_back(s);
  sets.push_back(b.empty_set());
  sets.push_back(b.whole());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    ++cases;
    if (!match_general_check(cs, sets[i], xs, k)) fail(10, seed, i, "gray-unit matching fails for " + sym_str(sets[i]));
  }
  return std::to_string(cases) + " sets match at walk depth 6";
}

std::string crit11(std::uint64_t seed) {
  std::size_t pairs = 0;
  for (SpaceKind kind : {SpaceKind::Cantor, SpaceKind::GrayUnit}) {
    const CodeSystem& cs = code_system(kind, 6);
    const Backend& b = cs.backend();
    const std::string name = b.name();
    if (!(R_of(cs, BinWord{}) == b.whole())) fail(11, seed, 0, name + ": R(empty code) is not the whole space");
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto codes = cs.codes(n);
      for (const auto& w : codes) {
        const SymSet r = R_of(cs, w);
        if (!(sym_closure(r) == Rbar_of(cs, w))) fail(11, seed, n, name + ": cl R(" + w.str(true) + ") != Rbar");
        if (n < 3) {
          SymSet u = b.empty_set();
          for (const auto& c : cs.codes(n + 1)) {
            if (w.is_prefix_of(c)) u = sym_union(u, R_of(cs, c));
          }
          if (!(u == r)) fail(11, seed, n, name + ": children of " + w.str(true) + " do not rebuild R");
        }
      }
      for (const auto& w : codes) {
        for (const auto& v : codes) {
          ++pairs;
          const SymSet meet = sym_intersect(R_of(cs, w), R_of(cs, v));
          std::optional<BinWord> i;
          try {
            i = I_op(cs, w, v);
          } catch (const Error& e) {
            fail(11, seed, n, name + ": I(" + w.str(true) + "," + v.str(true) + "): " + e.what());
          }
          if (!i) {
            if (!sym_is_empty(meet)) fail(11, seed, n, name + ": I = empty but R sets meet for " + w.str(true) + "," + v.str(true));
          } else {
            if (!w.is_prefix_of(*i)) fail(11, seed, n, name + ": I(" + w.str(true) + "," + v.str(true) + ") does not extend w");
            if (!(R_of(cs, *i) == meet)) fail(11, seed, n, name + ": R(I) differs from the intersection");
          }
          if (E_op(cs, w, v) && !(R_of(cs, w) == R_of(cs, v))) {
            fail(11, seed, n, name + ": E = 1 but R differs for " + w.str(true) + "," + v.str(true));
          }
        }
      }
    }
  }
  return std::to_string(pairs) + " code pairs through layer 3 on cantor and gray-unit";
}

struct Spec {
  const char* title;
  double limit;
  std::string (*run)(std::uint64_t);
};

const Spec kSpecs[kCriterionCount] = {
    {"prune matches brute-force pruning", 5, crit1},
    {"prune_inverse reproduces the pruned tree", 5, crit2},
    {"bottom count equals cardinality on Cantor space", 5, crit3},
    {"bottom count equals cardinality on the Gray interval", 30, crit4},
    {"decode of encode contains A and shrinks to it", 60, crit5},
    {"decoding is monotone in names", 10, crit6},
    {"the subbases are proper", 30, crit7},
    {"K-hat inside H-hat and finite branching", 30, crit8},
    {"general pipeline agrees with the Cantor codec", 30, crit9},
    {"point and set representations match", 30, crit10},
    {"code system algebra", 60, crit11},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw Error(ErrorKind::InvalidArgument, "no criterion " + std::to_string(id));
  const Spec& spec = kSpecs[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = spec.title;
  r.limit_seconds = spec.limit;
  const auto start = Clock::now();
  try {
    r.detail = spec.run(seed);
    r.pass = true;
  } catch (const CaseFailure& f) {
    r.detail = f.witness;
  } catch (const std::exception& e) {
    r.detail = std::string("unexpected error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (r.pass && r.seconds > r.limit_seconds) {
    r.pass = false;
    r.detail += " (over the time limit)";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, seed));
    if (report) report(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char t[32];
  std::snprintf(t, sizeof t, "%.2f", r.seconds);
  char lim[32];
  std::snprintf(lim, sizeof lim, "%.0f", r.limit_seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + " (" + t + " s, limit " +
         lim + " s): " + r.detail;
}

}  // namespace tcompact
