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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcompact/backend.hpp"
#include "tcompact/bin_word.hpp"

namespace tcompact {

/// S(e) = ∩ S(k, e(k)) over the digit positions of e.
SymSet S_of(const Backend& b, const TWord& e);
/// S̄(e) = ∩ (X \ S(k, 1 - e(k))) over the digit positions of e.
SymSet Sbar_of(const Backend& b, const TWord& e);
/// ∩_{k<n} S(k, e(k)), with e padded by B.
SymSet Sex_n(const Backend& b, const TWord& e, std::size_t n);
/// ∩_{k<n} cl S(k, e(k)), with cl S(k, B) = S(k, B).
SymSet Sbarex_n(const Backend& b, const TWord& e, std::size_t n);

bool khat_member(const Backend& b, const TWord& e);
/// Brute force: every canonical level-n word of length <= len_bound whose
/// barred extended set is nonempty, in canonical order.
std::vector<TWord> khat_level(const Backend& b, std::size_t n, std::size_t len_bound);
/// All canonical words with exactly n digits and length <= len_bound.
std::vector<TWord> level_words(std::size_t n, std::size_t len_bound);

/// Least k <= budget with Sbarex_n(d, k) empty; BudgetExhausted otherwise.
std::size_t find_kd(const Backend& b, const TWord& d, std::size_t budget);

/// Layered codes: layer n consists of the binary words of length f(n), each
/// mapped by r to a word of level n.
class CodeSystem {
 public:
  explicit CodeSystem(Backend b) : backend_(b) {}

  const Backend& backend() const noexcept { return backend_; }

  /// Levels with g, H and Ĥ available.
  std::size_t levels() const noexcept { return g_.size() == 0 ? 0 : g_.size() - 1; }
  /// Layers with codes available.
  std::size_t layers() const noexcept { return f_.size() == 0 ? 0 : f_.size() - 1; }

  std::size_t g(std::size_t n) const;
  const std::vector<TWord>& H(std::size_t n) const;
  const std::vector<TWord>& Hhat(std::size_t n) const;
  std::size_t f(std::size_t n) const;

  /// Layer whose codes have this length; BadLayerLength if none.
  std::size_t layer_of_length(std::size_t length) const;
  const TWord& r(const BinWord& w) const;
  /// All codes of layer n in lexicographic order.
  std::vector<BinWord> codes(std::size_t n) const;

 private:
  friend CodeSystem build_levels(const Backend& b, std::size_t levels, std::size_t budget, std::size_t verify_through);
  friend void build_codes(CodeSystem& cs, std::size_t layers);

  Backend backend_;
  std::vector<std::size_t> g_;
  std::vector<std::vector<TWord>> H_;
  std::vector<std::vector<TWord>> Hhat_;
  std::vector<std::size_t> f_;
  std::vector<std::vector<std::uint32_t>> r_;  // code value -> index into Hhat_
};

/// g, H and Ĥ for levels 0..levels. For n <= verify_through, checks
/// khat_level(n) ⊆ Ĥ_n with a length bound beyond g(n); a failure throws
/// PropertyViolation.
CodeSystem build_levels(const Backend& b, std::size_t levels, std::size_t budget, std::size_t verify_through = 4);
/// f and r for layers 0..layers (at most cs.levels()).
void build_codes(CodeSystem& cs, std::size_t layers);
/// build_levels followed by build_codes.
CodeSystem build_code_system(const Backend& b, std::size_t layers, std::size_t budget = 32);

SymSet R_of(const CodeSystem& cs, const BinWord& w);
SymSet Rbar_of(const CodeSystem& cs, const BinWord& w);
bool E_op(const CodeSystem& cs, const BinWord& w, const BinWord& v);
/// nullopt when R(w) ∩ R(v) is empty; otherwise the code v' extending w
/// with r(v') = r(w) ⊔ r(v). Throws JoinNotCoded when the join has a
/// nonempty set but no code, LayerExhausted when its layer is not built.
std::optional<BinWord> I_op(const CodeSystem& cs, const BinWord& w, const BinWord& v);

/// Per layer: `layer n f m`, then lines `w -> r(w)`.
std::string format_codes(const CodeSystem& cs);
/// Per level: `level n g k`, then H, Ĥ lines.
std::string format_levels(const CodeSystem& cs);

}  // namespace tcompact
