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

#include "lcert/tree_cert.hpp"

#include "lcert/error.hpp"

namespace lcert {

void encode_tree_core(const TreeCertCore& core, const TreeLayout& layout, BitString& out) {
  out.append(core.root_id, layout.id_bits);
  out.append(core.parent_id, layout.id_bits);
  out.append(core.distance, layout.count_bits);
}

TreeCertCore decode_tree_core(BitReader& reader, const TreeLayout& layout) {
  TreeCertCore core;
  core.root_id = reader.take(layout.id_bits);
  core.parent_id = reader.take(layout.id_bits);
  core.distance = reader.take(layout.count_bits);
  return core;
}

std::vector<TreeCertCore> build_tree_core(const Graph& g, const IdAssignment& ids,
                                          const SpanningTree& t) {
  if (t.size() != g.n()) throw InvalidArgument("spanning tree does not match graph");
  std::vector<TreeCertCore> out(g.n());
  const Identifier root_id = ids[t.root];
  for (Vertex v = 0; v < g.n(); ++v) {
    out[v].root_id = root_id;
    out[v].parent_id = ids[t.parent[v]];
    out[v].distance = t.depth[v];
  }
  return out;
}

Decision verify_tree_core(Identifier own_id, const TreeCertCore& own,
                          std::span<const TreeNeighbor> neighbors) {
  for (const auto& nb : neighbors) {
    if (nb.core.root_id != own.root_id) return Decision::reject("step-i");
  }
  if (own_id != own.root_id) {
    bool found = false;
    for (const auto& nb : neighbors) {
      if (nb.id == own.parent_id) {
        found = own.distance >= 1 && nb.core.distance == own.distance - 1;
        break;
      }
    }
    if (!found) return Decision::reject("step-ii");
  }
  return Decision::accept();
}

}  // namespace lcert
