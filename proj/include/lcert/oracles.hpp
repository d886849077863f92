// Copyright 2026 The lcert Authors
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

// Centralised ground truth for the certified predicates. These share no
// code with the provers or verifiers.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcert/graph.hpp"

namespace lcert {

bool oracle_is_permutation(std::span<const std::uint64_t> values);

// Preorder of some spanning tree with children visited by increasing
// identifier. Enumerates every choice of parents (an earlier-ranked
// neighbour for each vertex); throws CapacityError past `budget` choices.
bool oracle_is_dfs_renaming(const Graph& g, const IdAssignment& ids,
                            std::span<const std::uint64_t> renaming,
                            std::uint64_t budget = std::uint64_t{1} << 24);

// Bitmask clique enumeration; n <= 64.
bool oracle_clique_free(const Graph& g, std::size_t clique_size);

// Floyd-Warshall.
std::size_t oracle_diameter(const Graph& g);

bool oracle_distinct(std::span<const std::uint64_t> values);

// Vertex-order backtracking; returns a homomorphism g -> target if any.
std::optional<std::vector<std::size_t>> oracle_homomorphism(const Graph& g, const Graph& target);

}  // namespace lcert
