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
#include <optional>
#include <string>
#include <vector>

#include "tcompact/subbase_codes.hpp"
#include "tcompact/tree_codec.hpp"

namespace tcompact {

struct Stage {
  std::size_t index = 0;
  std::size_t layer = 0;
  std::vector<BinWord> codes;
};

/// The stage sets T_0, T_1, ... of one encoder run.
struct LayerSets {
  std::vector<Stage> stages;
};

struct Encoding {
  LayerSets trace;
  NameApprox name;
  /// Depth of the code tree, f of the last layer reached.
  std::size_t depth = 0;
};

/// All layer-n codes whose R meets A, provided they cover A; NotFound
/// otherwise, LayerExhausted when layer n is not built.
std::vector<BinWord> cover_search(const CodeSystem& cs, const SymSet& a, std::size_t n);

/// Runs `stages` refinement stages starting from T_0 = {ε}, one layer per
/// stage, and returns the trace together with the pruned tree name.
Encoding s_general(const CodeSystem& cs, const SymSet& a, std::size_t stages);

/// ∩_{m<=n} ∪ R̄(w) over the layer-m codes w of the tree the name generates.
SymSet t_general(const CodeSystem& cs, const NameApprox& name, std::size_t n);

/// For each x: x ∈ A iff some filling of the pending cells walks to depth
/// f(k) with x in R̄ of every code prefix passed.
bool match_general_check(const CodeSystem& cs, const SymSet& a, const std::vector<Point>& xs, std::size_t k);

/// Pending cells in the settled window of an s_general name, optionally
/// capped to the first `window` cells.
std::size_t bottom_count(const Encoding& e, std::size_t window = 0);

/// Runs s_general for each entry of the schedule and returns the count once
/// two consecutive runs agree; NotStabilized otherwise. Runs whose last stage
/// still holds two pieces of A under one code closure are skipped.
std::size_t bot_count_stable(const CodeSystem& cs, const SymSet& a, const std::vector<std::size_t>& schedule,
                             std::size_t window = 0);

/// Closed eps-neighbourhood (per axis on the square). Throws
/// InvalidArgument on Cantor sets.
SymSet sym_fatten(const SymSet& a, const Rat& eps);

struct RoundtripReport {
  /// A ⊆ decode at every stage run.
  bool contained = true;
  /// First stage whose decode lies inside the eps-fattening of A.
  std::optional<std::size_t> fattened_at;
  std::vector<std::string> lines;
};

RoundtripReport roundtrip_check(const CodeSystem& cs, const SymSet& a, const Rat& eps, std::size_t stage_bound);

/// `stage i layer l` followed by the codes, one per line.
std::string format_trace(const LayerSets& t);

}  // namespace tcompact
