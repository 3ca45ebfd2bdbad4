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

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tcompact/cantor_compacts.hpp"
#include "tcompact/compact_codec.hpp"

namespace tcompact {

inline constexpr std::uint64_t kDefaultSeed = 20261016;

/// Random prefix-closed tree of the given depth; each child of a member is
/// kept with probability `keep`.
TreeApprox random_tree(std::mt19937_64& rng, std::size_t depth, double keep);
/// Random eventually periodic point with preperiod <= 6 and period 1..4.
CantorPoint random_cantor_point(std::mt19937_64& rng);
/// m distinct points separated by depth <= max_sep.
std::vector<CantorPoint> random_cantor_points(std::mt19937_64& rng, std::size_t m, std::size_t max_sep);
/// 1 to 3 closed intervals (points allowed) with endpoints k/q, q <= max_den.
IntervalSet random_interval_union(std::mt19937_64& rng, long max_den);
/// 1 to 4 cylinders with words of length 1..max_len.
CylSet random_cylinders(std::mt19937_64& rng, std::size_t max_len);
/// Turns each resolved cell of `b` pending with probability `relax`.
NameApprox relax_name(std::mt19937_64& rng, const NameApprox& b, double relax);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  /// Summary on success, first witness on failure.
  std::string detail;
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, std::uint64_t seed);
/// Runs every criterion in order, reporting each result as it completes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& report = {});
/// `PASS [n] title (t s): detail` or `FAIL ...`.
std::string format_result(const CriterionResult& r);

}  // namespace tcompact
