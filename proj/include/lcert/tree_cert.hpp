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

// Spanning-tree certificate prefix shared by the renaming schemes:
//
//   Root (id_bits) || Parent (id_bits) || Distance (count_bits)
//
// with id_bits = ceil(log2(M+1)) and count_bits = ceil(log2(n+1)), every
// field big-endian.
//
// Only two checks are made on this prefix: every neighbour names the same
// root, and a non-root node has a neighbour named by its Parent field whose
// distance is one less. The root's own Parent and Distance fields are never
// checked; the honest prover writes Id(r) and 0.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lcert/bits.hpp"
#include "lcert/cert_model.hpp"
#include "lcert/graph.hpp"

namespace lcert {

struct TreeLayout {
  unsigned id_bits = 0;
  unsigned count_bits = 0;

  static TreeLayout for_instance(std::size_t n, std::uint64_t max_id) {
    return {width_for(max_id), width_for(n)};
  }
  std::size_t bits() const { return 2 * std::size_t{id_bits} + count_bits; }
};

struct TreeCertCore {
  Identifier root_id = 0;
  Identifier parent_id = 0;
  std::uint64_t distance = 0;

  friend bool operator==(const TreeCertCore&, const TreeCertCore&) = default;
};

void encode_tree_core(const TreeCertCore& core, const TreeLayout& layout, BitString& out);
// Caller guarantees reader.remaining() >= layout.bits().
TreeCertCore decode_tree_core(BitReader& reader, const TreeLayout& layout);

// Honest prefix for every vertex of t.
std::vector<TreeCertCore> build_tree_core(const Graph& g, const IdAssignment& ids,
                                          const SpanningTree& t);

// A neighbour's identifier together with its decoded prefix.
struct TreeNeighbor {
  Identifier id = 0;
  TreeCertCore core;
};

// Steps (i) and (ii). Rejections are labelled "step-i" / "step-ii".
Decision verify_tree_core(Identifier own_id, const TreeCertCore& own,
                          std::span<const TreeNeighbor> neighbors);

}  // namespace lcert
