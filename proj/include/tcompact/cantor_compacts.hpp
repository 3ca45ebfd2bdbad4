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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tcompact/cylinder_set.hpp"
#include "tcompact/tree_codec.hpp"

namespace tcompact {

/// A closed subset of Cantor space: finitely many eventually periodic
/// points, or the paths through a finite-depth tree.
using ClosedCantorSpec = std::variant<std::vector<CantorPoint>, TreeApprox>;

/// Throws InvalidArgument when a point list has duplicates.
void validate(const ClosedCantorSpec& a);

/// Least d such that the listed points have pairwise distinct length-d
/// prefixes (0 for at most one point); the tree depth for a tree.
std::size_t separation_depth(const ClosedCantorSpec& a);

/// Length-k prefixes of the members of A, sorted.
std::vector<BinWord> prefix_set(const ClosedCantorSpec& a, std::size_t k);

/// Depth-k paths of the tree a name generates.
std::vector<BinWord> t_cantor(const NameApprox& name, std::size_t k);

/// prune of the depth-d prefix tree of A (trees are used as given).
/// Throws DepthTooSmall when two points share their first d bits.
NameApprox s_cantor(const ClosedCantorSpec& a, std::size_t d);

/// Emptiness track p and tree track q.
struct PairedName {
  NameApprox p;
  NameApprox q;
};

/// Flat interleaving: even cells from p, odd cells from q.
NameApprox interleave(const PairedName& pn);
PairedName deinterleave(const NameApprox& flat);

PairedName psi_encode(const ClosedCantorSpec& a, std::size_t d);
std::vector<BinWord> psi_decode(const PairedName& pn, std::size_t k);

/// The length-k point whose bit n is the q-cell of the vertex spelled by its
/// first n bits. Throws EmptySetName when p carries a 1, Unresolved when a
/// needed cell is still pending.
BinWord delta_point_decode(const PairedName& pn, std::size_t k);

/// Every pending cell reached by a depth-k walk is filled both ways; true iff
/// the decoded points are exactly the depth-k prefixes of A.
bool matching_check(const ClosedCantorSpec& a, std::size_t k);

/// `points:` followed by u+v lines, or `tree:` followed by the tree format.
std::string format_cantor_spec(const ClosedCantorSpec& a);
ClosedCantorSpec parse_cantor_spec(std::string_view text);

}  // namespace tcompact
