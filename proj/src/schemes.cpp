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

#include "lcert/schemes.hpp"

#include <algorithm>
#include <deque>

#include "lcert/error.hpp"

namespace lcert {

namespace {

void encode_head(const EmbeddedDfs& head, const DfsLayout& layout, BitString& out) {
  out.append(head.renaming, layout.tree.count_bits);
  encode_dfs(head.dfs, layout, out);
}

EmbeddedDfs decode_head(BitReader& reader, const DfsLayout& layout) {
  EmbeddedDfs head;
  head.renaming = reader.take(layout.tree.count_bits);
  head.dfs = decode_dfs(reader, layout);
  return head;
}

// Renaming values of the honest prover, one tree per instance.
struct HonestRenaming {
  std::vector<DfsRenamingCert> dfs;
  Renaming renaming;
  // vertex_of[j-1] = vertex renamed j.
  std::vector<Vertex> vertex_of;
};

HonestRenaming honest_renaming(const Graph& g, const IdAssignment& ids) {
  const SpanningTree t = prover_tree(g, ids);
  HonestRenaming out{build_dfs_certs(g, ids, t), dfs_renaming(g, ids, t), {}};
  out.vertex_of.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) out.vertex_of[out.renaming[v] - 1] = v;
  return out;
}

// Runs the DFS checks on records decoded from certificates.
Decision verify_embedded(Identifier own_id, const EmbeddedDfs& own,
                         std::span<const std::pair<Identifier, EmbeddedDfs>> neighbors) {
  DfsNode self{own_id, own.renaming, own.dfs};
  std::vector<DfsNode> nbs;
  nbs.reserve(neighbors.size());
  for (const auto& [id, head] : neighbors) nbs.push_back({id, head.renaming, head.dfs});
  return verify_dfs_node(self, nbs);
}

// Is there a set of `need` pairwise adjacent vertices among candidates, with
// adjacency given by `adj`?
bool has_clique(const std::vector<std::vector<char>>& adj, std::vector<std::size_t>& cand,
                std::size_t need) {
  if (need == 0) return true;
  if (cand.size() < need) return false;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    std::vector<std::size_t> next;
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      if (adj[cand[i]][cand[j]]) next.push_back(cand[j]);
    }
    if (has_clique(adj, next, need - 1)) return true;
  }
  return false;
}

bool contains_clique(const Graph& g, std::size_t clique_size) {
  if (clique_size <= 1) return g.n() >= clique_size;
  const std::size_t n = g.n();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::size_t> cand;
    for (Vertex w : g.neighbors(v)) {
      if (w > v) cand.push_back(w);
    }
    if (has_clique(adj, cand, clique_size - 1)) return true;
  }
  return false;
}

std::size_t graph_diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    for (std::size_t d : bfs_distances(g, v)) best = std::max(best, d);
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// K_l-freeness

void encode_clique_free(const CliqueFreeCert& cert, const CliqueFreeLayout& layout, BitString& out) {
  encode_head(cert.head, layout.dfs, out);
  out.append(cert.neighborhood_bits);
}

CliqueFreeCert decode_clique_free(BitReader& reader, const CliqueFreeLayout& layout) {
  CliqueFreeCert c;
  c.head = decode_head(reader, layout.dfs);
  c.neighborhood_bits = reader.take_bits(layout.n);
  return c;
}

std::vector<CliqueFreeCert> build_clique_free_certs(const Graph& g, const IdAssignment& ids) {
  const auto honest = honest_renaming(g, ids);
  std::vector<CliqueFreeCert> out(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    out[v].head = {honest.renaming[v], honest.dfs[v]};
    out[v].neighborhood_bits = BitString(g.n());
    for (Vertex w : g.neighbors(v)) out[v].neighborhood_bits.set(honest.renaming[w] - 1, true);
  }
  return out;
}

std::vector<Certificate> prove_clique_free(const Graph& g, const IdAssignment& ids,
                                           std::size_t clique_size) {
  if (clique_size < 2) throw InvalidArgument("clique size must be at least 2");
  if (contains_clique(g, clique_size)) {
    throw PredicateFalse("graph contains K_" + std::to_string(clique_size));
  }
  const auto layout = CliqueFreeLayout::for_instance(g.n(), ids.max_id());
  std::vector<Certificate> out;
  for (const auto& c : build_clique_free_certs(g, ids)) {
    BitString bits;
    encode_clique_free(c, layout, bits);
    out.push_back(std::move(bits));
  }
  return out;
}

CliqueFreeVerifier::CliqueFreeVerifier(std::size_t n, std::uint64_t max_id, std::size_t clique_size)
    : layout_(CliqueFreeLayout::for_instance(n, max_id)), clique_size_(clique_size) {
  if (clique_size < 2) throw InvalidArgument("clique size must be at least 2");
}

Decision CliqueFreeVerifier::operator()(const LocalView& view) const {
  const std::size_t want = layout_.bits();
  if (view.own_cert.size() != want) return Decision::reject("decode");
  BitReader r(view.own_cert);
  const CliqueFreeCert own = decode_clique_free(r, layout_);
  std::vector<CliqueFreeCert> nbs;
  std::vector<std::pair<Identifier, EmbeddedDfs>> heads;
  nbs.reserve(view.neighbors.size());
  for (const auto& nb : view.neighbors) {
    if (nb.cert.size() != want) return Decision::reject("decode");
    BitReader nr(nb.cert);
    nbs.push_back(decode_clique_free(nr, layout_));
    heads.emplace_back(nb.id, nbs.back().head);
  }

  // (a) the renaming carried in the certificates is the certified DFS one.
  if (auto d = verify_embedded(view.own_id, own.head, heads); !d.accepted) return d;

  // (b) the adjacency vector lists exactly the neighbours' renamings.
  const std::size_t n = layout_.n;
  for (const auto& nb : nbs) {
    const std::uint64_t j = nb.head.renaming;
    if (j < 1 || j > n || !own.neighborhood_bits.get(j - 1)) return Decision::reject("adjacency");
  }
  if (own.neighborhood_bits.popcount() != view.neighbors.size()) {
    return Decision::reject("adjacency");
  }

  // (c) no K_{l-1} among the neighbours; together with this node it would
  // be a K_l.
  const std::size_t deg = nbs.size();
  std::vector<std::vector<char>> adj(deg, std::vector<char>(deg, 0));
  for (std::size_t a = 0; a < deg; ++a) {
    for (std::size_t b = a + 1; b < deg; ++b) {
      const bool ab = nbs[a].neighborhood_bits.get(nbs[b].head.renaming - 1);
      const bool ba = nbs[b].neighborhood_bits.get(nbs[a].head.renaming - 1);
      adj[a][b] = adj[b][a] = (ab || ba) ? 1 : 0;
    }
  }
  std::vector<std::size_t> cand(deg);
  for (std::size_t a = 0; a < deg; ++a) cand[a] = a;
  if (has_clique(adj, cand, clique_size_ - 1)) return Decision::reject("clique");
  return Decision::accept();
}

// ---------------------------------------------------------------------------
// Diameter <= l

void encode_diameter(const DiameterCert& cert, const DiameterLayout& layout, BitString& out) {
  encode_head(cert.head, layout.dfs, out);
  for (std::uint64_t d : cert.distance_table) out.append(d, layout.entry_bits);
}

DiameterCert decode_diameter(BitReader& reader, const DiameterLayout& layout) {
  DiameterCert c;
  c.head = decode_head(reader, layout.dfs);
  c.distance_table.resize(layout.n);
  for (auto& d : c.distance_table) d = reader.take(layout.entry_bits);
  return c;
}

std::vector<DiameterCert> build_diameter_certs(const Graph& g, const IdAssignment& ids,
                                               std::uint64_t bound) {
  const auto honest = honest_renaming(g, ids);
  std::vector<DiameterCert> out(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto dist = bfs_distances(g, v);
    out[v].head = {honest.renaming[v], honest.dfs[v]};
    out[v].distance_table.resize(g.n());
    for (std::size_t j = 0; j < g.n(); ++j) {
      out[v].distance_table[j] = std::min<std::uint64_t>(dist[honest.vertex_of[j]], bound);
    }
  }
  return out;
}

std::vector<Certificate> prove_diameter(const Graph& g, const IdAssignment& ids,
                                        std::uint64_t bound) {
  if (bound < 1) throw InvalidArgument("diameter bound must be at least 1");
  if (graph_diameter(g) > bound) {
    throw PredicateFalse("diameter exceeds " + std::to_string(bound));
  }
  const auto layout = DiameterLayout::for_instance(g.n(), ids.max_id(), bound);
  std::vector<Certificate> out;
  for (const auto& c : build_diameter_certs(g, ids, bound)) {
    BitString bits;
    encode_diameter(c, layout, bits);
    out.push_back(std::move(bits));
  }
  return out;
}

DiameterVerifier::DiameterVerifier(std::size_t n, std::uint64_t max_id, std::uint64_t bound)
    : layout_(DiameterLayout::for_instance(n, max_id, bound)), bound_(bound) {
  if (bound < 1) throw InvalidArgument("diameter bound must be at least 1");
}

Decision DiameterVerifier::operator()(const LocalView& view) const {
  const std::size_t want = layout_.bits();
  if (view.own_cert.size() != want) return Decision::reject("decode");
  BitReader r(view.own_cert);
  const DiameterCert own = decode_diameter(r, layout_);
  std::vector<DiameterCert> nbs;
  std::vector<std::pair<Identifier, EmbeddedDfs>> heads;
  nbs.reserve(view.neighbors.size());
  for (const auto& nb : view.neighbors) {
    if (nb.cert.size() != want) return Decision::reject("decode");
    BitReader nr(nb.cert);
    nbs.push_back(decode_diameter(nr, layout_));
    heads.emplace_back(nb.id, nbs.back().head);
  }

  // (a)
  if (auto d = verify_embedded(view.own_id, own.head, heads); !d.accepted) return d;

  // (b) zero exactly at the node's own renaming.
  const std::size_t n = layout_.n;
  const std::uint64_t me = own.head.renaming;
  if (me < 1 || me > n) return Decision::reject("table-anchor");
  for (std::size_t j = 0; j < n; ++j) {
    if ((own.distance_table[j] == 0) != (j + 1 == me)) return Decision::reject("table-anchor");
  }

  // (d)
  for (std::uint64_t d : own.distance_table) {
    if (d > bound_) return Decision::reject("table-bound");
  }

  // (c) one BFS step per target.
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t d = own.distance_table[j];
    if (d == 0) continue;
    bool closer = false;
    for (const auto& nb : nbs) {
      const std::uint64_t e = nb.distance_table[j];
      if (e + 1 == d) closer = true;
      if (e + 2 <= d) return Decision::reject("table-bfs");
      if (d >= 2 && nb.head.renaming == j + 1) return Decision::reject("table-bfs");
    }
    if (!closer) return Decision::reject("table-bfs");
  }
  return Decision::accept();
}

// ---------------------------------------------------------------------------
// Distinctness

DistinctnessLayout DistinctnessLayout::for_instance(std::size_t n, std::uint64_t max_id,
                                                    std::uint64_t max_input) {
  return {HashFamily::make(n, max_input), PermLayout::for_instance(n, max_id)};
}

std::size_t DistinctnessLayout::bits() const {
  if (!family) throw CapacityError("hash family H_{n,m} is undefined for these parameters");
  return family->seed_bits() + perm.bits();
}

void encode_distinctness(const DistinctnessCert& cert, const DistinctnessLayout& layout,
                         BitString& out) {
  layout.family->encode_seed(cert.hash_seed, out);
  encode_perm(cert.perm, layout.perm, out);
}

std::vector<Certificate> prove_distinctness(const Instance& inst, const SeedSearchOptions& options) {
  if (!inst.inputs) throw InvalidArgument("distinctness needs inputs");
  const std::size_t n = inst.n();
  const auto values = inst.inputs->values();
  {
    std::vector<InputValue> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PredicateFalse("inputs are not pairwise distinct");
    }
  }
  const std::uint64_t m = inst.inputs->max_input();
  const auto seed = find_perfect_seed(n, m, values, options);
  const auto layout = DistinctnessLayout::for_instance(n, inst.ids.max_id(), m);
  const HashFamily& h = *layout.family;

  Renaming composed(n);
  for (Vertex v = 0; v < n; ++v) composed[v] = h(seed.seed, values[v]);
  const SpanningTree t = prover_tree(inst.graph, inst.ids);
  std::vector<Certificate> out;
  for (auto& perm : build_perm_certs(inst.graph, inst.ids, t, composed)) {
    BitString bits;
    encode_distinctness({seed.seed, std::move(perm)}, layout, bits);
    out.push_back(std::move(bits));
  }
  return out;
}

Decision DistinctnessVerifier::operator()(const LocalView& view) const {
  if (!layout_.family) return Decision::reject("decode");
  const HashFamily& h = *layout_.family;
  const std::size_t want = layout_.bits();

  // Empty on success, otherwise the rejection label.
  auto decode = [&](const Certificate& cert, Identifier id, std::optional<InputValue> input,
                    std::uint64_t& seed, PermNode& node) -> std::string_view {
    if (cert.size() != want) return "decode";
    if (!input || !h.valid_point(*input)) return "input";
    BitReader r(cert);
    auto s = h.decode_seed(r);
    if (!s) return "seed";
    seed = *s;
    node = PermNode{id, h(seed, *input), decode_perm(r, layout_.perm)};
    return {};
  };

  std::uint64_t own_seed = 0;
  PermNode self;
  if (auto bad = decode(view.own_cert, view.own_id, view.own_input, own_seed, self); !bad.empty()) {
    return Decision::reject(bad);
  }
  std::vector<PermNode> nbs(view.neighbors.size());
  for (std::size_t i = 0; i < view.neighbors.size(); ++i) {
    const auto& nb = view.neighbors[i];
    std::uint64_t seed = 0;
    if (auto bad = decode(nb.cert, nb.id, nb.input, seed, nbs[i]); !bad.empty()) {
      return Decision::reject(bad);
    }
    if (seed != own_seed) return Decision::reject("seed");
  }
  // Values h(i(v)) have been recomputed from the visible inputs and the
  // common seed; the permutation checks do the rest.
  return verify_perm_node(self, nbs);
}

// ---------------------------------------------------------------------------
// H-homomorphism

std::size_t hom_global_bits(std::uint64_t n, const IdentifierRange& range, std::size_t target_n) {
  auto m = range.at(n);
  if (!m) throw CapacityError("identifier range overflows for n=" + std::to_string(n));
  return kCountFieldBits + seed_bit_length(n, *m) + n * target_entry_bits(target_n);
}

BitString encode_hom_global(const HomomorphismGlobalCert& cert, const IdentifierRange& range,
                            std::size_t target_n) {
  auto m = range.at(cert.n);
  if (!m) throw CapacityError("identifier range overflows for n=" + std::to_string(cert.n));
  auto family = HashFamily::make(cert.n, *m);
  if (!family) throw CapacityError("hash family H_{n,M} is undefined for these parameters");
  if (cert.table.size() != cert.n) throw InvalidArgument("L must have n entries");
  BitString out;
  out.append(cert.n, kCountFieldBits);
  family->encode_seed(cert.hash_seed, out);
  const unsigned w = target_entry_bits(target_n);
  for (TargetVertex t : cert.table) out.append(t, w);
  return out;
}

std::optional<HomomorphismGlobalCert> decode_hom_global(const BitString& bits,
                                                        const IdentifierRange& range,
                                                        std::size_t target_n) {
  if (bits.size() < kCountFieldBits) return std::nullopt;
  BitReader r(bits);
  HomomorphismGlobalCert c;
  c.n = r.take(kCountFieldBits);
  auto m = range.at(c.n);
  if (!m) return std::nullopt;
  auto family = HashFamily::make(c.n, *m);
  if (!family) return std::nullopt;
  const unsigned w = target_entry_bits(target_n);
  const unsigned __int128 expected = static_cast<unsigned __int128>(kCountFieldBits) +
                                     family->seed_bits() +
                                     static_cast<unsigned __int128>(c.n) * w;
  if (expected != bits.size()) return std::nullopt;
  auto seed = family->decode_seed(r);
  if (!seed) return std::nullopt;
  c.hash_seed = *seed;
  c.table.resize(c.n);
  for (auto& t : c.table) t = r.take(w);
  return c;
}

bool is_homomorphism(const Graph& g, const Graph& target, std::span<const TargetVertex> phi) {
  if (phi.size() != g.n()) return false;
  for (auto [u, v] : g.edges()) {
    if (phi[u] >= target.n() || phi[v] >= target.n()) return false;
    if (!target.adjacent(phi[u], phi[v])) return false;
  }
  return true;
}

std::optional<Homomorphism> find_homomorphism(const Graph& g, const Graph& target) {
  const std::size_t n = g.n();
  // BFS order, so that every vertex after the first has an assigned neighbour.
  std::vector<Vertex> order;
  std::vector<char> seen(n, 0);
  std::deque<Vertex> q{0};
  seen[0] = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    order.push_back(u);
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
    }
  }
  constexpr TargetVertex kNone = static_cast<TargetVertex>(-1);
  Homomorphism phi(n, kNone);
  auto fits = [&](Vertex v, TargetVertex t) {
    for (Vertex w : g.neighbors(v)) {
      if (phi[w] != kNone && !target.adjacent(t, phi[w])) return false;
    }
    return true;
  };
  auto solve = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    const Vertex v = order[i];
    for (TargetVertex t = 0; t < target.n(); ++t) {
      if (!fits(v, t)) continue;
      phi[v] = t;
      if (self(self, i + 1)) return true;
    }
    phi[v] = kNone;
    return false;
  };
  if (!solve(solve, 0)) return std::nullopt;
  return phi;
}

BitString build_hom_global_cert(const Instance& inst, const Graph& target,
                                const IdentifierRange& range, std::span<const TargetVertex> phi,
                                const SeedSearchOptions& options) {
  const std::size_t n = inst.n();
  auto m = range.at(n);
  if (!m) throw CapacityError("identifier range overflows for n=" + std::to_string(n));
  const auto ids = inst.ids.values();
  const auto seed = find_perfect_seed(n, *m, ids, options);
  const HashFamily h = *HashFamily::make(n, *m);
  HomomorphismGlobalCert cert{n, seed.seed, std::vector<TargetVertex>(n, 0)};
  for (Vertex v = 0; v < n; ++v) cert.table[h(seed.seed, ids[v]) - 1] = phi[v];
  return encode_hom_global(cert, range, target.n());
}

BitString prove_hom_global(const Instance& inst, const Graph& target, const IdentifierRange& range,
                           const SeedSearchOptions& options) {
  auto phi = find_homomorphism(inst.graph, target);
  if (!phi) throw PredicateFalse("no homomorphism to the target graph");
  return build_hom_global_cert(inst, target, range, *phi, options);
}

Decision HomomorphismVerifier::operator()(const GlobalView& view) const {
  const BitString& bits = view.global_cert;
  if (bits.size() < kCountFieldBits) return Decision::reject("decode");
  BitReader r(bits);
  const std::uint64_t n = r.take(kCountFieldBits);
  // M is recomputed from the n written in the certificate.
  auto m = range_.at(n);
  if (!m) return Decision::reject("decode");
  auto family = HashFamily::make(n, *m);
  if (!family) return Decision::reject("decode");
  const unsigned w = target_entry_bits(target_.n());
  const unsigned __int128 expected = static_cast<unsigned __int128>(kCountFieldBits) +
                                     family->seed_bits() + static_cast<unsigned __int128>(n) * w;
  if (expected != bits.size()) return Decision::reject("decode");
  auto seed = family->decode_seed(r);
  if (!seed) return Decision::reject("seed");
  const std::size_t table_start = kCountFieldBits + family->seed_bits();

  auto entry = [&](Identifier id) -> std::optional<TargetVertex> {
    if (!family->valid_point(id)) return std::nullopt;
    const std::uint64_t slot = (*family)(*seed, id) - 1;
    const TargetVertex t = bits.read(table_start + slot * w, w);
    if (t >= target_.n()) return std::nullopt;
    return t;
  };
  auto mine = entry(view.own_id);
  if (!mine) return Decision::reject("entry");
  for (const auto& nb : view.neighbors) {
    auto theirs = entry(nb.id);
    if (!theirs) return Decision::reject("entry");
    if (!target_.adjacent(*mine, *theirs)) return Decision::reject("edge");
  }
  return Decision::accept();
}

std::optional<Homomorphism> reconstruct_homomorphism(const Instance& inst, const BitString& cert,
                                                     const IdentifierRange& range,
                                                     std::size_t target_n) {
  auto c = decode_hom_global(cert, range, target_n);
  if (!c) return std::nullopt;
  auto m = range.at(c->n);
  const HashFamily h = *HashFamily::make(c->n, *m);
  Homomorphism phi(inst.n());
  for (Vertex v = 0; v < inst.n(); ++v) {
    if (!h.valid_point(inst.ids[v])) return std::nullopt;
    phi[v] = c->table[h(c->hash_seed, inst.ids[v]) - 1];
  }
  return phi;
}

}  // namespace lcert
