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

#include "tcompact/backend.hpp"

#include <functional>

#include "tcompact/error.hpp"

namespace tcompact {

namespace {

constexpr std::size_t kMaxIndex = 60;
constexpr std::size_t kMaxPieces = std::size_t{1} << 22;

Rat dyadic(const mpz_class& j, std::size_t n) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
  Rat r(j, den);
  r.canonicalize();
  return r;
}

mpz_class floor_scaled(const Rat& x, std::size_t n) {
  mpz_class num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), n);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

// The part of S(n, i) lying on monotone piece j = [j/2^n, (j+1)/2^n].
Interval gray_piece(const mpz_class& j, std::size_t n, Tri i) {
  const Rat lo = dyadic(j, n);
  const Rat hi = dyadic(j + 1, n);
  const Rat mid = dyadic(2 * j + 1, n + 1);
  const bool rising = mpz_even_p(j.get_mpz_t()) != 0;
  if (i == Tri::Bot) return Interval{mid, mid, true, true};
  const bool lower = (i == Tri::Zero) == rising;
  if (lower) return Interval{lo, mid, true, false};
  return Interval{mid, hi, false, true};
}

// S(n, i) restricted to the pieces touching a (with one piece of margin on
// both sides, so closures and complements are exact on a).
IntervalSet gray_local(const IntervalSet& a, std::size_t n, Tri i) {
  if (n > kMaxIndex) throw Error(ErrorKind::OutOfRange, "subbase index too large");
  std::vector<Interval> pieces;
  mpz_class last;
  mpz_ui_pow_ui(last.get_mpz_t(), 2, n);
  last -= 1;
  mpz_class done = -2;  // highest piece already emitted
  for (const auto& iv : a.intervals()) {
    mpz_class from = floor_scaled(iv.lo, n) - 1;
    mpz_class to = floor_scaled(iv.hi, n) + 1;
    if (from < 0) from = 0;
    if (to > last) to = last;
    if (from <= done) from = done + 1;
    if (to >= from && pieces.size() + mpz_class(to - from + 1).get_ui() > kMaxPieces) {
      throw Error(ErrorKind::OutOfRange, "subbase set at index " + std::to_string(n) + " too fine to enumerate");
    }
    for (mpz_class j = from; j <= to; ++j) pieces.push_back(gray_piece(j, n, i));
    if (to > done) done = to;
  }
  return IntervalSet::from(std::move(pieces));
}

IntervalSet gray_meet(const IntervalSet& a, std::size_t n, Tri i) {
  if (a.empty()) return a;
  return intersect(a, gray_local(a, n, i));
}

IntervalSet gray_meet_closure(const IntervalSet& a, std::size_t n, Tri i) {
  if (a.empty()) return a;
  return intersect(a, closure(gray_local(a, n, i)));
}

IntervalSet gray_meet_complement(const IntervalSet& a, std::size_t n, Tri i) {
  if (a.empty()) return a;
  return intersect(a, complement(gray_local(a, n, i)));
}

CylSet cantor_meet(const CylSet& a, std::size_t n, Tri i) {
  if (i == Tri::Bot || a.empty()) return CylSet{};
  if (n > kMaxIndex) throw Error(ErrorKind::OutOfRange, "subbase index too large");
  const int bit = i == Tri::One ? 1 : 0;
  std::vector<BinWord> out;
  for (const auto& w : a.words()) {
    if (w.size() > n) {
      if (w[n] == bit) out.push_back(w);
      continue;
    }
    const std::size_t free = n - w.size();
    if (out.size() + (std::size_t{1} << free) > kMaxPieces) {
      throw Error(ErrorKind::OutOfRange, "cylinder expansion too large");
    }
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << free); ++v) {
      out.push_back(w.concat(BinWord::from_value(v, free)).pushed(bit));
    }
  }
  return CylSet::from(std::move(out));
}

CylSet cantor_meet_complement(const CylSet& a, std::size_t n, Tri i) {
  if (i == Tri::Bot) return a;
  return cantor_meet(a, n, i == Tri::Zero ? Tri::One : Tri::Zero);
}

using UnitOp = std::function<IntervalSet(const IntervalSet&, std::size_t, Tri)>;

ProductSet square_apply(const ProductSet& a, std::size_t n, Tri i, const UnitOp& op) {
  std::vector<ProductSet::Slab> out;
  const bool x_axis = n % 2 == 0;
  const std::size_t k = n / 2;
  for (const auto& s : a.slabs()) {
    if (x_axis) {
      out.push_back({op(s.x, k, i), s.y});
    } else {
      out.push_back({s.x, op(s.y, k, i)});
    }
  }
  return ProductSet::from(out);
}

Tri gray_digit(const Rat& x, std::size_t n) {
  const Rat y = tent_iter(x, n);
  const int c = cmp(y, Rat(1, 2));
  if (c < 0) return Tri::Zero;
  if (c > 0) return Tri::One;
  return Tri::Bot;
}

}  // namespace

SpaceKind parse_space(std::string_view name) {
  if (name == "cantor") return SpaceKind::Cantor;
  if (name == "gray-unit") return SpaceKind::GrayUnit;
  if (name == "gray-square") return SpaceKind::GraySquare;
  throw Error(ErrorKind::Parse, "unknown space '" + std::string(name) + "'");
}

const char* to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Cantor:
      return "cantor";
    case SpaceKind::GrayUnit:
      return "gray-unit";
    case SpaceKind::GraySquare:
      return "gray-square";
  }
  return "?";
}

Rat tent_iter(const Rat& x, std::size_t n) {
  if (x < 0 || x > 1) throw Error(ErrorKind::OutOfRange, "tent map argument " + format_rat(x) + " outside [0,1]");
  Rat y = x;
  for (std::size_t k = 0; k < n; ++k) {
    Rat d = 2 * y - 1;
    y = 1 - abs(d);
  }
  return y;
}

SymSet Backend::whole() const {
  switch (kind_) {
    case SpaceKind::Cantor:
      return CylSet::whole();
    case SpaceKind::GrayUnit:
      return IntervalSet::whole();
    case SpaceKind::GraySquare:
      return ProductSet::whole();
  }
  return CylSet{};
}

SymSet Backend::empty_set() const { return sym_empty_like(whole()); }

SymSet Backend::subbase_set(std::size_t n, Tri i) const { return meet_subbase(whole(), n, i); }

SymSet Backend::meet_subbase(const SymSet& a, std::size_t n, Tri i) const {
  if (!owns(a)) throw Error(ErrorKind::BackendMismatch, "set does not belong to " + name());
  switch (kind_) {
    case SpaceKind::Cantor:
      return cantor_meet(std::get<CylSet>(a), n, i);
    case SpaceKind::GrayUnit:
      return gray_meet(std::get<IntervalSet>(a), n, i);
    case SpaceKind::GraySquare:
      return square_apply(std::get<ProductSet>(a), n, i, gray_meet);
  }
  return a;
}

SymSet Backend::meet_subbase_closure(const SymSet& a, std::size_t n, Tri i) const {
  if (!owns(a)) throw Error(ErrorKind::BackendMismatch, "set does not belong to " + name());
  switch (kind_) {
    case SpaceKind::Cantor:
      return cantor_meet(std::get<CylSet>(a), n, i);
    case SpaceKind::GrayUnit:
      return gray_meet_closure(std::get<IntervalSet>(a), n, i);
    case SpaceKind::GraySquare:
      return square_apply(std::get<ProductSet>(a), n, i, gray_meet_closure);
  }
  return a;
}

SymSet Backend::meet_subbase_complement(const SymSet& a, std::size_t n, Tri i) const {
  if (!owns(a)) throw Error(ErrorKind::BackendMismatch, "set does not belong to " + name());
  switch (kind_) {
    case SpaceKind::Cantor:
      return cantor_meet_complement(std::get<CylSet>(a), n, i);
    case SpaceKind::GrayUnit:
      return gray_meet_complement(std::get<IntervalSet>(a), n, i);
    case SpaceKind::GraySquare:
      return square_apply(std::get<ProductSet>(a), n, i, gray_meet_complement);
  }
  return a;
}

Tri Backend::phi_digit(const Point& x, std::size_t n) const {
  if (!owns(x)) throw Error(ErrorKind::BackendMismatch, "point does not belong to " + name());
  switch (kind_) {
    case SpaceKind::Cantor:
      return digit_tri(std::get<CantorPoint>(x).bit(n));
    case SpaceKind::GrayUnit:
      return gray_digit(std::get<Rat>(x), n);
    case SpaceKind::GraySquare: {
      const auto& p = std::get<SquarePoint>(x);
      return gray_digit(n % 2 == 0 ? p.first : p.second, n / 2);
    }
  }
  return Tri::Bot;
}

TWord Backend::phi_prefix(const Point& x, std::size_t m) const {
  std::vector<Tri> out;
  out.reserve(m);
  for (std::size_t n = 0; n < m; ++n) out.push_back(phi_digit(x, n));
  return TWord(std::move(out));
}

Point Backend::parse_point(std::string_view text) const {
  switch (kind_) {
    case SpaceKind::Cantor:
      return CantorPoint::parse(text);
    case SpaceKind::GrayUnit: {
      Rat r = parse_rat(text);
      if (r < 0 || r > 1) throw Error(ErrorKind::Parse, "point " + std::string(text) + " outside [0,1]");
      return r;
    }
    case SpaceKind::GraySquare: {
      const auto comma = text.find(',');
      if (comma == std::string_view::npos) throw Error(ErrorKind::Parse, "square point must look like x,y");
      Rat x = parse_rat(text.substr(0, comma));
      Rat y = parse_rat(text.substr(comma + 1));
      if (x < 0 || x > 1 || y < 0 || y > 1) {
        throw Error(ErrorKind::Parse, "point " + std::string(text) + " outside the unit square");
      }
      return SquarePoint{x, y};
    }
  }
  throw Error(ErrorKind::Parse, "unknown space");
}

bool Backend::owns(const Point& x) const {
  switch (kind_) {
    case SpaceKind::Cantor:
      return std::holds_alternative<CantorPoint>(x);
    case SpaceKind::GrayUnit:
      return std::holds_alternative<Rat>(x);
    case SpaceKind::GraySquare:
      return std::holds_alternative<SquarePoint>(x);
  }
  return false;
}

bool Backend::owns(const SymSet& a) const { return a.index() == whole().index(); }

PropernessReport properness_check(const Backend& b, std::size_t max_len) {
  PropernessReport report;
  for (std::size_t n = 0; n < max_len; ++n) {
    if (!sym_is_empty(sym_intersect(b.subbase_set(n, Tri::Zero), b.subbase_set(n, Tri::One)))) {
      report.ok = false;
      report.detail = "S(" + std::to_string(n) + ",0) and S(" + std::to_string(n) + ",1) intersect";
      return report;
    }
  }

  std::vector<Tri> word;
  // Depth-first over words; only canonical words (ending in a digit) are
  // checked since a trailing B changes neither set.
  std::function<bool(const SymSet&, const SymSet&)> visit = [&](const SymSet& s, const SymSet& sbar) {
    const bool canonical = word.empty() || word.back() != Tri::Bot;
    if (canonical) {
      ++report.words_checked;
      const SymSet cl = sym_closure(s);
      if (word.size() <= 1) {
        const std::string e = TWord(word).str(true);
        report.witnesses.push_back("e=" + e + " S=" + sym_str(s) + " cl S=" + sym_str(cl) + " Sbar=" + sym_str(sbar) +
                                   (cl == sbar ? " ok" : " FAIL"));
      }
      if (!(cl == sbar)) {
        report.ok = false;
        report.counterexample = TWord(word);
        report.detail = "cl S = " + sym_str(cl) + " but Sbar = " + sym_str(sbar);
        return false;
      }
    }
    if (word.size() == max_len) return true;
    const std::size_t k = word.size();
    for (Tri d : {Tri::Zero, Tri::One, Tri::Bot}) {
      word.push_back(d);
      bool keep_going;
      if (d == Tri::Bot) {
        keep_going = visit(s, sbar);
      } else {
        const Tri other = d == Tri::Zero ? Tri::One : Tri::Zero;
        keep_going = visit(b.meet_subbase(s, k, d), b.meet_subbase_complement(sbar, k, other));
      }
      word.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  visit(b.whole(), b.whole());
  return report;
}

}  // namespace tcompact
