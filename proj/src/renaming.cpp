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

#include "lcert/renaming.hpp"

#include <algorithm>

#include "lcert/error.hpp"

namespace lcert {

namespace {

constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

using Wide = unsigned __int128;

template <typename Node>
std::vector<TreeNeighbor> tree_neighbors(std::span<const Node> neighbors) {
  std::vector<TreeNeighbor> out;
  out.reserve(neighbors.size());
  for (const auto& nb : neighbors) out.push_back({nb.id, nb.cert.core});
  return out;
}

// Neighbours whose Parent field names `self`, by increasing identifier.
template <typename Node>
std::vector<const Node*> children_of(Identifier self, std::span<const Node> neighbors) {
  std::vector<const Node*> out;
  for (const auto& nb : neighbors) {
    if (nb.cert.core.parent_id == self) out.push_back(&nb);
  }
  std::sort(out.begin(), out.end(), [](const Node* a, const Node* b) { return a->id < b->id; });
  return out;
}

// Decodes own and neighbour certificates with the renaming taken from the
// input slot. Returns a rejection label on failure.
template <typename Node, typename Layout, typename Decode>
std::optional<std::string_view> decode_view(const LocalView& view, const Layout& layout,
                                            Decode decode, Node& self, std::vector<Node>& nbs) {
  const std::size_t want = layout.bits();
  if (!view.own_input) return "input";
  if (view.own_cert.size() != want) return "decode";
  BitReader r(view.own_cert);
  self = Node{view.own_id, *view.own_input, decode(r, layout)};
  nbs.reserve(view.neighbors.size());
  for (const auto& nb : view.neighbors) {
    if (!nb.input) return "input";
    if (nb.cert.size() != want) return "decode";
    BitReader nr(nb.cert);
    nbs.push_back(Node{nb.id, *nb.input, decode(nr, layout)});
  }
  return std::nullopt;
}

}  // namespace

void encode_dfs(const DfsRenamingCert& cert, const DfsLayout& layout, BitString& out) {
  encode_tree_core(cert.core, layout.tree, out);
  out.append(cert.subtree_count, layout.tree.count_bits);
}

DfsRenamingCert decode_dfs(BitReader& reader, const DfsLayout& layout) {
  DfsRenamingCert c;
  c.core = decode_tree_core(reader, layout.tree);
  c.subtree_count = reader.take(layout.tree.count_bits);
  return c;
}

void encode_perm(const PermutationCert& cert, const PermLayout& layout, BitString& out) {
  encode_tree_core(cert.core, layout.tree, out);
  out.append(cert.subtree_bits);
}

PermutationCert decode_perm(BitReader& reader, const PermLayout& layout) {
  PermutationCert c;
  c.core = decode_tree_core(reader, layout.tree);
  c.subtree_bits = reader.take_bits(layout.n);
  return c;
}

Renaming dfs_renaming(const Graph& g, const IdAssignment& ids, const SpanningTree& t) {
  if (t.size() != g.n() || ids.size() != g.n()) {
    throw InvalidArgument("spanning tree does not match graph");
  }
  const auto size = subtree_sizes(t);
  Renaming ren(g.n(), 0);
  ren[t.root] = 1;
  std::vector<Vertex> stack{t.root};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    std::uint64_t next = ren[u] + 1;
    for (Vertex c : t.children[u]) {
      ren[c] = next;
      next += size[c];
      stack.push_back(c);
    }
  }
  return ren;
}

SpanningTree prover_tree(const Graph& g, const IdAssignment& ids) {
  return spanning_tree(g, ids, min_id_vertex(ids));
}

std::vector<DfsRenamingCert> build_dfs_certs(const Graph& g, const IdAssignment& ids,
                                             const SpanningTree& t) {
  const auto core = build_tree_core(g, ids, t);
  const auto size = subtree_sizes(t);
  std::vector<DfsRenamingCert> out(g.n());
  for (Vertex v = 0; v < g.n(); ++v) out[v] = {core[v], size[v]};
  return out;
}

std::vector<PermutationCert> build_perm_certs(const Graph& g, const IdAssignment& ids,
                                              const SpanningTree& t,
                                              std::span<const std::uint64_t> renaming) {
  const std::size_t n = g.n();
  if (renaming.size() != n) throw InvalidArgument("renaming size differs from n");
  const auto core = build_tree_core(g, ids, t);
  std::vector<PermutationCert> out(n);
  for (Vertex v = 0; v < n; ++v) {
    out[v].core = core[v];
    out[v].subtree_bits = BitString(n);
    if (renaming[v] >= 1 && renaming[v] <= n) out[v].subtree_bits.set(renaming[v] - 1, true);
  }
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return t.depth[a] > t.depth[b]; });
  for (Vertex v : order) {
    if (v == t.root) continue;
    auto& up = out[t.parent[v]].subtree_bits;
    const auto& mine = out[v].subtree_bits;
    for (std::size_t j = 0; j < n; ++j) {
      if (mine.get(j)) up.set(j, true);
    }
  }
  return out;
}

DfsProof prove_dfs(const Graph& g, const IdAssignment& ids) {
  const SpanningTree t = prover_tree(g, ids);
  const auto layout = DfsLayout::for_instance(g.n(), ids.max_id());
  DfsProof proof;
  proof.renaming = dfs_renaming(g, ids, t);
  for (const auto& c : build_dfs_certs(g, ids, t)) {
    BitString bits;
    encode_dfs(c, layout, bits);
    proof.certs.push_back(std::move(bits));
  }
  return proof;
}

namespace {

bool extend_preorder(const Graph& g, const IdAssignment& ids, std::span<const Vertex> order,
                     std::size_t k, std::vector<Vertex>& path, std::vector<Vertex>& last_child,
                     std::vector<Vertex>& parent) {
  if (k == order.size()) return true;
  const Vertex x = order[k];
  // Deepest candidate first.
  for (std::size_t i = path.size(); i-- > 0;) {
    const Vertex p = path[i];
    if (!g.adjacent(p, x)) continue;
    if (last_child[p] != kNoVertex && ids[last_child[p]] > ids[x]) continue;
    const std::vector<Vertex> saved(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
    const Vertex saved_last = last_child[p];
    path.resize(i + 1);
    path.push_back(x);
    last_child[p] = x;
    parent[x] = p;
    if (extend_preorder(g, ids, order, k + 1, path, last_child, parent)) return true;
    path.resize(i + 1);
    path.insert(path.end(), saved.begin(), saved.end());
    last_child[p] = saved_last;
  }
  return false;
}

}  // namespace

std::optional<SpanningTree> find_dfs_tree(const Graph& g, const IdAssignment& ids,
                                          std::span<const std::uint64_t> renaming) {
  const std::size_t n = g.n();
  if (renaming.size() != n) return std::nullopt;
  std::vector<Vertex> order(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (renaming[v] < 1 || renaming[v] > n || order[renaming[v] - 1] != kNoVertex) return std::nullopt;
    order[renaming[v] - 1] = v;
  }
  std::vector<Vertex> path{order[0]};
  std::vector<Vertex> last_child(n, kNoVertex);
  std::vector<Vertex> parent(n, kNoVertex);
  parent[order[0]] = order[0];
  if (!extend_preorder(g, ids, order, 1, path, last_child, parent)) return std::nullopt;
  return tree_from_parents(g, ids, order[0], std::move(parent));
}

std::vector<Certificate> prove_dfs_renaming(const Graph& g, const IdAssignment& ids,
                                            std::span<const std::uint64_t> renaming) {
  auto t = find_dfs_tree(g, ids, renaming);
  if (!t) throw PredicateFalse("renaming is not the preorder of any spanning tree");
  const auto layout = DfsLayout::for_instance(g.n(), ids.max_id());
  std::vector<Certificate> out;
  for (const auto& c : build_dfs_certs(g, ids, *t)) {
    BitString bits;
    encode_dfs(c, layout, bits);
    out.push_back(std::move(bits));
  }
  return out;
}

std::vector<Certificate> prove_perm(const Graph& g, const IdAssignment& ids,
                                    std::span<const std::uint64_t> claimed) {
  const std::size_t n = g.n();
  if (claimed.size() != n) throw InvalidArgument("claimed renaming size differs from n");
  std::vector<char> seen(n + 1, 0);
  for (auto x : claimed) {
    if (x < 1 || x > n || seen[x]) throw PredicateFalse("claimed renaming is not a permutation of [n]");
    seen[x] = 1;
  }
  const SpanningTree t = prover_tree(g, ids);
  const auto layout = PermLayout::for_instance(n, ids.max_id());
  std::vector<Certificate> out;
  for (const auto& c : build_perm_certs(g, ids, t, claimed)) {
    BitString bits;
    encode_perm(c, layout, bits);
    out.push_back(std::move(bits));
  }
  return out;
}

InputAssignment renaming_inputs(std::span<const std::uint64_t> renaming) {
  std::uint64_t m = renaming.size();
  for (auto x : renaming) m = std::max(m, x);
  return InputAssignment(std::vector<InputValue>(renaming.begin(), renaming.end()), m);
}

Decision verify_dfs_node(const DfsNode& self, std::span<const DfsNode> neighbors) {
  const auto tn = tree_neighbors(neighbors);
  if (auto d = verify_tree_core(self.id, self.cert.core, tn); !d.accepted) return d;

  const auto kids = children_of(self.id, neighbors);

  // (iii)
  Wide expected = 1;
  for (const DfsNode* c : kids) expected += c->cert.subtree_count;
  if (Wide{self.cert.subtree_count} != expected) return Decision::reject("step-iii");

  // (iv)
  if (self.id == self.cert.core.root_id && self.renaming != 1) return Decision::reject("step-iv");
  Wide next = Wide{self.renaming} + 1;
  for (const DfsNode* c : kids) {
    if (Wide{c->renaming} != next) return Decision::reject("step-iv");
    next = Wide{c->renaming} + c->cert.subtree_count;
  }
  return Decision::accept();
}

Decision verify_perm_node(const PermNode& self, std::span<const PermNode> neighbors) {
  const auto tn = tree_neighbors(neighbors);
  if (auto d = verify_tree_core(self.id, self.cert.core, tn); !d.accepted) return d;

  // (iii)
  const std::size_t len = self.cert.subtree_bits.size();
  for (const auto& nb : neighbors) {
    if (nb.cert.subtree_bits.size() != len) return Decision::reject("step-iii");
  }

  // (iv). The range check closes the case where the root's unchecked Parent
  // field makes it a child of its own descendant.
  if (self.renaming < 1 || self.renaming > len) return Decision::reject("step-iv");
  const auto kids = children_of(self.id, neighbors);
  for (std::size_t j = 0; j < len; ++j) {
    const bool own_bit = self.cert.subtree_bits.get(j);
    const bool mine = self.renaming == j + 1;
    std::size_t carriers = 0;
    for (const PermNode* c : kids) carriers += c->cert.subtree_bits.get(j) ? 1 : 0;
    const bool ok = own_bit ? ((!mine && carriers == 1) || (mine && carriers == 0))
                            : (!mine && carriers == 0);
    if (!ok) return Decision::reject("step-iv");
  }

  // (v)
  if (self.id == self.cert.core.root_id && self.cert.subtree_bits.popcount() != len) {
    return Decision::reject("step-v");
  }
  return Decision::accept();
}

Decision DfsRenamingVerifier::operator()(const LocalView& view) const {
  DfsNode self;
  std::vector<DfsNode> nbs;
  if (auto bad = decode_view(view, layout_, decode_dfs, self, nbs)) return Decision::reject(*bad);
  return verify_dfs_node(self, nbs);
}

Decision PermutationVerifier::operator()(const LocalView& view) const {
  PermNode self;
  std::vector<PermNode> nbs;
  if (auto bad = decode_view(view, layout_, decode_perm, self, nbs)) return Decision::reject(*bad);
  return verify_perm_node(self, nbs);
}

}  // namespace lcert
