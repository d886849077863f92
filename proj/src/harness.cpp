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

#include "lcert/harness.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "lcert/error.hpp"
#include "lcert/oracles.hpp"
#include "lcert/renaming.hpp"
#include "lcert/schemes.hpp"

namespace lcert {

// ---------------------------------------------------------------------------
// Random instances

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  if (n == 0) throw InvalidArgument("n must be positive");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::set<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex a = order[i];
    const Vertex b = order[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  std::bernoulli_distribution extra(p);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (extra(rng)) edges.insert({a, b});
    }
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

IdAssignment random_ids(std::size_t n, std::uint64_t max_id, Rng& rng) {
  if (max_id < n) throw InvalidArgument("max_id < n");
  std::vector<Identifier> ids;
  if (max_id <= 4 * n + 16) {
    std::vector<Identifier> all(max_id);
    std::iota(all.begin(), all.end(), Identifier{1});
    std::shuffle(all.begin(), all.end(), rng);
    ids.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
  } else {
    std::unordered_set<Identifier> used;
    std::uniform_int_distribution<Identifier> pick(1, max_id);
    while (ids.size() < n) {
      const Identifier id = pick(rng);
      if (used.insert(id).second) ids.push_back(id);
    }
  }
  return IdAssignment(std::move(ids), max_id);
}

SpanningTree random_spanning_tree(const Graph& g, const IdAssignment& ids, Rng& rng) {
  const std::size_t n = g.n();
  const Vertex root = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
  std::vector<Vertex> parent(n, n);
  parent[root] = root;
  std::vector<Edge> frontier;
  for (Vertex w : g.neighbors(root)) frontier.push_back({root, w});
  while (!frontier.empty()) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
    const auto [u, w] = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    if (parent[w] != n) continue;
    parent[w] = u;
    for (Vertex x : g.neighbors(w)) {
      if (parent[x] == n) frontier.push_back({w, x});
    }
  }
  return tree_from_parents(g, ids, root, std::move(parent));
}

namespace {

std::uint64_t mask(std::uint64_t v, unsigned width) {
  return width >= 64 ? v : v & ((std::uint64_t{1} << width) - 1);
}

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

Vertex random_vertex(const Graph& g, Rng& rng) { return uniform(rng, 0, g.n() - 1); }

BitString random_bits(std::size_t len, Rng& rng) {
  BitString b;
  std::size_t left = len;
  while (left > 0) {
    const unsigned w = static_cast<unsigned>(std::min<std::size_t>(left, 64));
    b.append(mask(rng(), w), w);
    left -= w;
  }
  return b;
}

const InputAssignment& require_inputs(const Instance& inst) {
  if (!inst.inputs) throw InvalidArgument("scheme needs an input assignment");
  return *inst.inputs;
}

std::vector<std::uint64_t> input_values(const Instance& inst) {
  const auto v = require_inputs(inst).values();
  return {v.begin(), v.end()};
}

// A bijection onto 1..n that agrees with `values` on a maximal set of
// vertices whose values are in range and distinct.
std::vector<std::uint64_t> dedupe(std::span<const std::uint64_t> values, Rng& rng) {
  const std::size_t n = values.size();
  std::vector<char> used(n + 1, 0);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::uint64_t> out(n, 0);
  for (Vertex v : order) {
    if (values[v] >= 1 && values[v] <= n && !used[values[v]]) {
      out[v] = values[v];
      used[values[v]] = 1;
    }
  }
  std::vector<std::uint64_t> missing;
  for (std::uint64_t j = 1; j <= n; ++j) {
    if (!used[j]) missing.push_back(j);
  }
  std::shuffle(missing.begin(), missing.end(), rng);
  for (Vertex v = 0; v < n; ++v) {
    if (out[v] == 0) {
      out[v] = missing.back();
      missing.pop_back();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tree-core forgeries shared by several adversaries

void forge_root(std::vector<TreeCertCore>& cores, const TreeLayout& layout, Rng& rng) {
  const Identifier fake = mask(rng(), layout.id_bits);
  for (auto& c : cores) {
    c.root_id = fake;
    c.distance = mask(c.distance + 1, layout.count_bits);
  }
}

// The root points at a neighbour, closing a cycle through Parent fields.
void close_root_cycle(const Graph& g, const IdAssignment& ids, const SpanningTree& t,
                      std::vector<TreeCertCore>& cores, Rng& rng) {
  const auto nbs = g.neighbors(t.root);
  if (nbs.empty()) return;
  cores[t.root].parent_id = ids[nbs[uniform(rng, 0, nbs.size() - 1)]];
}

template <typename Rec, typename Layout, typename Enc>
std::vector<Certificate> encode_all(const std::vector<Rec>& recs, const Layout& layout, Enc enc) {
  std::vector<Certificate> out;
  out.reserve(recs.size());
  for (const auto& r : recs) {
    BitString b;
    enc(r, layout, b);
    out.push_back(std::move(b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Adapters

class LocalScheme : public Scheme {
 public:
  bool global() const override { return false; }
  Decision decide(const Instance& inst, std::span<const Certificate> certs,
                  Vertex v) const override {
    return verifier(inst)(local_view(inst, certs, v));
  }
  Verdict verify(const Instance& inst, std::span<const Certificate> certs) const override {
    return run_local(verifier(inst), inst, certs);
  }

 protected:
  virtual LocalVerifier verifier(const Instance& inst) const = 0;
};

// DFS renaming -------------------------------------------------------------

class DfsScheme final : public LocalScheme {
 public:
  std::string_view name() const override { return "dfs-renaming"; }
  bool holds(const Instance& inst) const override {
    return oracle_is_dfs_renaming(inst.graph, inst.ids, input_values(inst));
  }
  std::size_t certificate_bits(const Instance& inst) const override {
    return layout(inst).bits();
  }
  std::vector<Certificate> prove(const Instance& inst) const override {
    return prove_dfs_renaming(inst.graph, inst.ids, input_values(inst));
  }
  std::vector<Certificate> forge(const Instance& inst) const override {
    return honest_for(inst, prover_tree(inst.graph, inst.ids));
  }

  std::vector<Adversary> adversaries() const override {
    return {
        {"reroot",
         [this](const Instance& inst, Rng& rng) {
           return honest_for(inst, random_spanning_tree(inst.graph, inst.ids, rng));
         }},
        {"fit-counts",
         [this](const Instance& inst, Rng& rng) {
           const auto t = random_spanning_tree(inst.graph, inst.ids, rng);
           auto recs = build_dfs_certs(inst.graph, inst.ids, t);
           fit_counts(inst, t, recs);
           return encode_all(recs, layout(inst), encode_dfs);
         }},
        {"forged-root",
         [this](const Instance& inst, Rng& rng) {
           const auto t = random_spanning_tree(inst.graph, inst.ids, rng);
           auto recs = build_dfs_certs(inst.graph, inst.ids, t);
           std::vector<TreeCertCore> cores;
           for (auto& r : recs) cores.push_back(r.core);
           forge_root(cores, layout(inst).tree, rng);
           for (std::size_t v = 0; v < recs.size(); ++v) recs[v].core = cores[v];
           fit_counts(inst, t, recs);
           return encode_all(recs, layout(inst), encode_dfs);
         }},
        {"root-cycle",
         [this](const Instance& inst, Rng& rng) {
           const auto t = random_spanning_tree(inst.graph, inst.ids, rng);
           auto recs = build_dfs_certs(inst.graph, inst.ids, t);
           std::vector<TreeCertCore> cores;
           for (auto& r : recs) cores.push_back(r.core);
           close_root_cycle(inst.graph, inst.ids, t, cores, rng);
           for (std::size_t v = 0; v < recs.size(); ++v) recs[v].core = cores[v];
           fit_counts(inst, t, recs);
           return encode_all(recs, layout(inst), encode_dfs);
         }},
        {"swapped-subtrees",
         [this](const Instance& inst, Rng& rng) {
           const auto t = random_spanning_tree(inst.graph, inst.ids, rng);
           auto recs = build_dfs_certs(inst.graph, inst.ids, t);
           const Vertex a = random_vertex(inst.graph, rng);
           const Vertex b = random_vertex(inst.graph, rng);
           std::swap(recs[a].subtree_count, recs[b].subtree_count);
           return encode_all(recs, layout(inst), encode_dfs);
         }},
    };
  }

 protected:
  LocalVerifier verifier(const Instance& inst) const override {
    return DfsRenamingVerifier(inst.n(), inst.ids.max_id());
  }

 private:
  static DfsLayout layout(const Instance& inst) {
    return DfsLayout::for_instance(inst.n(), inst.ids.max_id());
  }

  std::vector<Certificate> honest_for(const Instance& inst, const SpanningTree& t) const {
    return encode_all(build_dfs_certs(inst.graph, inst.ids, t), layout(inst), encode_dfs);
  }

  // Subtree counts chosen top-down so that step (iv) holds for the input
  // renaming at every internal node.
  void fit_counts(const Instance& inst, const SpanningTree& t,
                  std::vector<DfsRenamingCert>& recs) const {
    const auto r = input_values(inst);
    const unsigned w = layout(inst).tree.count_bits;
    std::vector<std::uint64_t> count(inst.n(), 0);
    count[t.root] = inst.n();
    std::vector<Vertex> stack{t.root};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      const auto& kids = t.children[u];
      std::uint64_t used = 0;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const Vertex c = kids[i];
        count[c] = i + 1 < kids.size() ? r[kids[i + 1]] - r[c] : count[u] - 1 - used;
        used += count[c];
        stack.push_back(c);
      }
    }
    for (Vertex v = 0; v < inst.n(); ++v) recs[v].subtree_count = mask(count[v], w);
  }
};

// Permutation ----------------------------------------------------------------

class PermScheme final : public LocalScheme {
 public:
  std::string_view name() const override { return "permutation"; }
  bool holds(const Instance& inst) const override {
    return oracle_is_permutation(input_values(inst));
  }
  std::size_t certificate_bits(const Instance& inst) const override {
    return layout(inst).bits();
  }
  std::vector<Certificate> prove(const Instance& inst) const override {
    return prove_perm(inst.graph, inst.ids, input_values(inst));
  }
  std::vector<Certificate> forge(const Instance& inst) const override {
    return with_tree(inst, prover_tree(inst.graph, inst.ids), input_values(inst));
  }

  std::vector<Adversary> adversaries() const override {
    return {
        {"or-bits",
         [this](const Instance& inst, Rng& rng) {
           return with_tree(inst, random_spanning_tree(inst.graph, inst.ids, rng),
                            input_values(inst));
         }},
        {"dedupe",
         [this](const Instance& inst, Rng& rng) {
           return with_tree(inst, random_spanning_tree(inst.graph, inst.ids, rng),
                            dedupe(input_values(inst), rng));
         }},
        {"shifted",
         [this](const Instance& inst, Rng& rng) {
           auto r = input_values(inst);
           const std::uint64_t s = uniform(rng, 1, inst.n());
           for (auto& x : r) x = (x + s - 1) % inst.n() + 1;
           return with_tree(inst, random_spanning_tree(inst.graph, inst.ids, rng), r);
         }},
        {"all-ones",
         [this](const Instance& inst, Rng& rng) {
           const auto t = random_spanning_tree(inst.graph, inst.ids, rng);
           auto recs = build_perm_certs(inst.graph, inst.ids, t, input_values(inst));
           for (auto& rec : recs) fill(rec.subtree_bits);
           return encode_all(recs, layout(inst), encode_perm);
         }},
        {"root-cycle",
         [this](const Instance& inst, Rng& rng) {
           const auto t = random_spanning_tree(inst.graph, inst.ids, rng);
           auto recs = build_perm_certs(inst.graph, inst.ids, t, dedupe(input_values(inst), rng));
           std::vector<TreeCertCore> cores;
           for (auto& rec : recs) cores.push_back(rec.core);
           close_root_cycle(inst.graph, inst.ids, t, cores, rng);
           for (std::size_t v = 0; v < recs.size(); ++v) {
             recs[v].core = cores[v];
             fill(recs[v].subtree_bits);
           }
           return encode_all(recs, layout(inst), encode_perm);
         }},
        {"forged-root",
         [this](const Instance& inst, Rng& rng) {
           const auto t = random_spanning_tree(inst.graph, inst.ids, rng);
           auto recs = build_perm_certs(inst.graph, inst.ids, t, dedupe(input_values(inst), rng));
           std::vector<TreeCertCore> cores;
           for (auto& rec : recs) cores.push_back(rec.core);
           forge_root(cores, layout(inst).tree, rng);
           for (std::size_t v = 0; v < recs.size(); ++v) recs[v].core = cores[v];
           return encode_all(recs, layout(inst), encode_perm);
         }},
    };
  }

 protected:
  LocalVerifier verifier(const Instance& inst) const override {
    return PermutationVerifier(inst.n(), inst.ids.max_id());
  }

 private:
  static PermLayout layout(const Instance& inst) {
    return PermLayout::for_instance(inst.n(), inst.ids.max_id());
  }
  static void fill(BitString& b) {
    for (std::size_t i = 0; i < b.size(); ++i) b.set(i, true);
  }
  std::vector<Certificate> with_tree(const Instance& inst, const SpanningTree& t,
                                     std::span<const std::uint64_t> r) const {
    return encode_all(build_perm_certs(inst.graph, inst.ids, t, r), layout(inst), encode_perm);
  }
};

// K_l-freeness -----------------------------------------------------------------

// Adjacency rows as bit masks; n <= 64.
std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.n(), 0);
  for (auto [a, b] : g.edges()) {
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  }
  return adj;
}

bool find_clique(const std::vector<std::uint64_t>& adj, std::uint64_t cand, std::size_t need,
                 std::vector<Vertex>& out) {
  if (need == 0) return true;
  while (cand) {
    const Vertex v = static_cast<Vertex>(std::countr_zero(cand));
    cand &= cand - 1;
    out.push_back(v);
    if (find_clique(adj, cand & adj[v], need - 1, out)) return true;
    out.pop_back();
  }
  return false;
}

class CliqueFreeScheme final : public LocalScheme {
 public:
  explicit CliqueFreeScheme(std::size_t l) : l_(l) {
    if (l < 2) throw InvalidArgument("clique size must be at least 2");
  }
  std::string_view name() const override { return "kfree"; }
  bool holds(const Instance& inst) const override { return oracle_clique_free(inst.graph, l_); }
  std::size_t certificate_bits(const Instance& inst) const override {
    return layout(inst).bits();
  }
  std::vector<Certificate> prove(const Instance& inst) const override {
    return prove_clique_free(inst.graph, inst.ids, l_);
  }
  std::vector<Certificate> forge(const Instance& inst) const override {
    return encode(inst, records(inst, prover_tree(inst.graph, inst.ids),
                                adjacency_masks(inst.graph)));
  }

  std::vector<Adversary> adversaries() const override {
    return {
        {"reroot",
         [this](const Instance& inst, Rng& rng) {
           return encode(inst, records(inst, random_spanning_tree(inst.graph, inst.ids, rng),
                                       adjacency_masks(inst.graph)));
         }},
        {"hide-edges",
         [this](const Instance& inst, Rng& rng) {
           const auto adj = hide_cliques(inst, rng, true);
           return encode(inst, records(inst, random_spanning_tree(inst.graph, inst.ids, rng), adj));
         }},
        {"hide-edges-one-sided",
         [this](const Instance& inst, Rng& rng) {
           const auto adj = hide_cliques(inst, rng, false);
           return encode(inst, records(inst, random_spanning_tree(inst.graph, inst.ids, rng), adj));
         }},
        {"rename-collision",
         [this](const Instance& inst, Rng& rng) {
           auto recs = records(inst, random_spanning_tree(inst.graph, inst.ids, rng),
                               adjacency_masks(inst.graph));
           const auto adj = adjacency_masks(inst.graph);
           std::vector<Vertex> clique;
           const std::uint64_t all = inst.n() == 64 ? ~0ULL : (1ULL << inst.n()) - 1;
           if (find_clique(adj, all, l_, clique)) {
             recs[clique[1]].head.renaming = recs[clique[0]].head.renaming;
           }
           return encode(inst, recs);
         }},
    };
  }

 protected:
  LocalVerifier verifier(const Instance& inst) const override {
    return CliqueFreeVerifier(inst.n(), inst.ids.max_id(), l_);
  }

 private:
  CliqueFreeLayout layout(const Instance& inst) const {
    return CliqueFreeLayout::for_instance(inst.n(), inst.ids.max_id());
  }

  std::vector<CliqueFreeCert> records(const Instance& inst, const SpanningTree& t,
                                      const std::vector<std::uint64_t>& adj) const {
    const auto r = dfs_renaming(inst.graph, inst.ids, t);
    const auto dfs = build_dfs_certs(inst.graph, inst.ids, t);
    std::vector<CliqueFreeCert> out(inst.n());
    for (Vertex v = 0; v < inst.n(); ++v) {
      out[v].head = {r[v], dfs[v]};
      out[v].neighborhood_bits = BitString(inst.n());
      for (Vertex w = 0; w < inst.n(); ++w) {
        if ((adj[v] >> w) & 1) out[v].neighborhood_bits.set(r[w] - 1, true);
      }
    }
    return out;
  }

  std::vector<Certificate> encode(const Instance& inst,
                                  const std::vector<CliqueFreeCert>& recs) const {
    return encode_all(recs, layout(inst), encode_clique_free);
  }

  // Removes edges of K_l copies until none is left, from both endpoints'
  // rows or only from one.
  std::vector<std::uint64_t> hide_cliques(const Instance& inst, Rng& rng, bool both) const {
    auto adj = adjacency_masks(inst.graph);
    const std::uint64_t all = inst.n() == 64 ? ~0ULL : (1ULL << inst.n()) - 1;
    // Symmetric view used for the clique search.
    auto sym = adj;
    for (;;) {
      std::vector<Vertex> clique;
      if (!find_clique(sym, all, l_, clique)) break;
      const std::size_t i = uniform(rng, 0, clique.size() - 1);
      std::size_t j = uniform(rng, 0, clique.size() - 2);
      if (j >= i) ++j;
      const Vertex a = clique[i];
      const Vertex b = clique[j];
      sym[a] &= ~(1ULL << b);
      sym[b] &= ~(1ULL << a);
      adj[a] &= ~(1ULL << b);
      if (both) adj[b] &= ~(1ULL << a);
    }
    return adj;
  }

  std::size_t l_;
};

// Diameter -------------------------------------------------------------------

std::vector<std::vector<std::uint64_t>> all_pairs(const Graph& g) {
  std::vector<std::vector<std::uint64_t>> d(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto row = bfs_distances(g, v);
    d[v].assign(row.begin(), row.end());
  }
  return d;
}

class DiameterScheme final : public LocalScheme {
 public:
  explicit DiameterScheme(std::uint64_t bound) : bound_(bound) {
    if (bound < 1) throw InvalidArgument("diameter bound must be at least 1");
  }
  std::string_view name() const override { return "diameter"; }
  bool holds(const Instance& inst) const override { return oracle_diameter(inst.graph) <= bound_; }
  std::size_t certificate_bits(const Instance& inst) const override {
    return layout(inst).bits();
  }
  std::vector<Certificate> prove(const Instance& inst) const override {
    return prove_diameter(inst.graph, inst.ids, bound_);
  }
  std::vector<Certificate> forge(const Instance& inst) const override {
    return encode(inst, records(inst, prover_tree(inst.graph, inst.ids), clamped(inst)));
  }

  std::vector<Adversary> adversaries() const override {
    return {
        {"clamped",
         [this](const Instance& inst, Rng& rng) {
           return encode(inst, records(inst, random_spanning_tree(inst.graph, inst.ids, rng),
                                       clamped(inst)));
         }},
        {"supergraph",
         [this](const Instance& inst, Rng& rng) {
           return encode(inst, records(inst, random_spanning_tree(inst.graph, inst.ids, rng),
                                       supergraph(inst, rng)));
         }},
        {"modular",
         [this](const Instance& inst, Rng& rng) {
           auto d = all_pairs(inst.graph);
           for (auto& row : d) {
             for (auto& x : row) x %= bound_ + 1;
           }
           return encode(inst, records(inst, random_spanning_tree(inst.graph, inst.ids, rng), d));
         }},
        {"column-shift",
         [this](const Instance& inst, Rng& rng) {
           auto d = clamped(inst);
           const Vertex col = random_vertex(inst.graph, rng);
           const unsigned w = width_for(bound_);
           for (Vertex v = 0; v < inst.n(); ++v) {
             if (v == col || !(rng() & 1)) continue;
             d[v][col] = rng() & 1 ? mask(d[v][col] + 1, w) : (d[v][col] > 0 ? d[v][col] - 1 : 0);
           }
           return encode(inst, records(inst, random_spanning_tree(inst.graph, inst.ids, rng), d));
         }},
    };
  }

 protected:
  LocalVerifier verifier(const Instance& inst) const override {
    return DiameterVerifier(inst.n(), inst.ids.max_id(), bound_);
  }

 private:
  DiameterLayout layout(const Instance& inst) const {
    return DiameterLayout::for_instance(inst.n(), inst.ids.max_id(), bound_);
  }

  std::vector<std::vector<std::uint64_t>> clamped(const Instance& inst) const {
    auto d = all_pairs(inst.graph);
    for (auto& row : d) {
      for (auto& x : row) x = std::min(x, bound_);
    }
    return d;
  }

  // Distances in g plus random shortcuts, until the diameter fits.
  std::vector<std::vector<std::uint64_t>> supergraph(const Instance& inst, Rng& rng) const {
    auto edges = inst.graph.edges();
    std::set<Edge> present(edges.begin(), edges.end());
    for (;;) {
      Graph h(inst.n(), edges);
      auto d = all_pairs(h);
      std::vector<Edge> far;
      for (Vertex a = 0; a < inst.n(); ++a) {
        for (Vertex b = a + 1; b < inst.n(); ++b) {
          if (d[a][b] > bound_) far.push_back({a, b});
        }
      }
      if (far.empty()) return d;
      const Edge e = far[uniform(rng, 0, far.size() - 1)];
      if (present.insert(e).second) edges.push_back(e);
    }
  }

  std::vector<DiameterCert> records(const Instance& inst, const SpanningTree& t,
                                    const std::vector<std::vector<std::uint64_t>>& d) const {
    const auto r = dfs_renaming(inst.graph, inst.ids, t);
    const auto dfs = build_dfs_certs(inst.graph, inst.ids, t);
    const unsigned w = width_for(bound_);
    std::vector<DiameterCert> out(inst.n());
    for (Vertex v = 0; v < inst.n(); ++v) {
      out[v].head = {r[v], dfs[v]};
      out[v].distance_table.assign(inst.n(), 0);
      for (Vertex u = 0; u < inst.n(); ++u) out[v].distance_table[r[u] - 1] = mask(d[v][u], w);
    }
    return out;
  }

  std::vector<Certificate> encode(const Instance& inst,
                                  const std::vector<DiameterCert>& recs) const {
    return encode_all(recs, layout(inst), encode_diameter);
  }

  std::uint64_t bound_;
};

// Distinctness -----------------------------------------------------------------

class DistinctnessScheme final : public LocalScheme {
 public:
  explicit DistinctnessScheme(SeedSearchOptions seeds) : seeds_(seeds) {}
  std::string_view name() const override { return "distinctness"; }
  bool holds(const Instance& inst) const override { return oracle_distinct(input_values(inst)); }
  std::size_t certificate_bits(const Instance& inst) const override {
    return layout(inst).bits();
  }
  std::vector<Certificate> prove(const Instance& inst) const override {
    return prove_distinctness(inst, seeds_);
  }
  std::vector<Certificate> forge(const Instance& inst) const override {
    const auto values = input_values(inst);
    std::uint64_t seed = 1;
    if (oracle_distinct(values)) {
      try {
        seed = find_perfect_seed(inst.n(), require_inputs(inst).max_input(), values, seeds_).seed;
      } catch (const CapacityError&) {
      }
    }
    return with_seed(inst, prover_tree(inst.graph, inst.ids), seed, composed(inst, seed));
  }

  std::vector<Adversary> adversaries() const override {
    return {
        {"or-bits",
         [this](const Instance& inst, Rng& rng) {
           const std::uint64_t seed = random_seed(inst, rng);
           return with_seed(inst, random_spanning_tree(inst.graph, inst.ids, rng), seed,
                            composed(inst, seed));
         }},
        {"dedupe",
         [this](const Instance& inst, Rng& rng) {
           const std::uint64_t seed = random_seed(inst, rng);
           return with_seed(inst, random_spanning_tree(inst.graph, inst.ids, rng), seed,
                            dedupe(composed(inst, seed), rng));
         }},
        {"colliding-seed",
         [this](const Instance& inst, Rng& rng) {
           // The seed with the most distinct hashed values among a sample.
           std::uint64_t best = random_seed(inst, rng);
           std::size_t best_distinct = 0;
           for (int i = 0; i < 64; ++i) {
             const std::uint64_t s = random_seed(inst, rng);
             const auto c = composed(inst, s);
             const std::size_t k = std::set<std::uint64_t>(c.begin(), c.end()).size();
             if (k > best_distinct) {
               best = s;
               best_distinct = k;
             }
           }
           return with_seed(inst, random_spanning_tree(inst.graph, inst.ids, rng), best,
                            dedupe(composed(inst, best), rng));
         }},
        {"seed-mismatch",
         [this](const Instance& inst, Rng& rng) { return seed_mismatch(inst, rng); }},
    };
  }

 protected:
  LocalVerifier verifier(const Instance& inst) const override {
    return DistinctnessVerifier(inst.n(), inst.ids.max_id(), require_inputs(inst).max_input());
  }

 private:
  DistinctnessLayout layout(const Instance& inst) const {
    return DistinctnessLayout::for_instance(inst.n(), inst.ids.max_id(),
                                            require_inputs(inst).max_input());
  }

  std::uint64_t random_seed(const Instance& inst, Rng& rng) const {
    return uniform(rng, 1, family(inst).size());
  }

  HashFamily family(const Instance& inst) const {
    auto l = layout(inst);
    if (!l.family) throw CapacityError("hash family H_{n,m} is undefined for these parameters");
    return *l.family;
  }

  std::vector<std::uint64_t> composed(const Instance& inst, std::uint64_t seed) const {
    const HashFamily h = family(inst);
    std::vector<std::uint64_t> out;
    for (auto x : require_inputs(inst).values()) out.push_back(h(seed, x));
    return out;
  }

  std::vector<Certificate> with_seed(const Instance& inst, const SpanningTree& t,
                                     std::uint64_t seed, std::span<const std::uint64_t> r) const {
    const auto l = layout(inst);
    std::vector<Certificate> out;
    for (auto& perm : build_perm_certs(inst.graph, inst.ids, t, r)) {
      BitString b;
      encode_distinctness({seed, std::move(perm)}, l, b);
      out.push_back(std::move(b));
    }
    return out;
  }

  // Each vertex picks its own seed so that the values form a permutation;
  // only the seed comparison can catch this.
  std::vector<Certificate> seed_mismatch(const Instance& inst, Rng& rng) const {
    const HashFamily h = family(inst);
    const auto l = layout(inst);
    const auto target = dedupe(composed(inst, random_seed(inst, rng)), rng);
    std::vector<std::uint64_t> seeds(inst.n());
    for (Vertex v = 0; v < inst.n(); ++v) {
      seeds[v] = random_seed(inst, rng);
      for (int i = 0; i < 4096; ++i) {
        const std::uint64_t s = random_seed(inst, rng);
        if (h(s, (*inst.inputs)[v]) == target[v]) {
          seeds[v] = s;
          break;
        }
      }
    }
    const auto t = random_spanning_tree(inst.graph, inst.ids, rng);
    auto perms = build_perm_certs(inst.graph, inst.ids, t, target);
    std::vector<Certificate> out;
    for (Vertex v = 0; v < inst.n(); ++v) {
      BitString b;
      encode_distinctness({seeds[v], std::move(perms[v])}, l, b);
      out.push_back(std::move(b));
    }
    return out;
  }

  SeedSearchOptions seeds_;
};

// H-homomorphism (global) ------------------------------------------------------

class HomScheme final : public Scheme {
 public:
  HomScheme(std::string name, Graph target, std::optional<IdentifierRange> range,
            SeedSearchOptions seeds)
      : name_(std::move(name)), target_(std::move(target)), range_(range), seeds_(seeds) {}

  std::string_view name() const override { return name_; }
  bool global() const override { return true; }
  bool holds(const Instance& inst) const override {
    return oracle_homomorphism(inst.graph, target_).has_value();
  }
  std::size_t certificate_bits(const Instance& inst) const override {
    return hom_global_bits(inst.n(), range(inst), target_.n());
  }
  std::vector<Certificate> prove(const Instance& inst) const override {
    return {prove_hom_global(inst, target_, range(inst), seeds_)};
  }
  std::vector<Certificate> forge(const Instance& inst) const override {
    const std::uint64_t seed = honest_seed(inst);
    Rng rng(seed);
    return {with_seed(inst, inst.n(), seed, rng)};
  }

  std::vector<Adversary> adversaries() const override {
    return {
        {"greedy-table",
         [this](const Instance& inst, Rng& rng) {
           const std::uint64_t seed = honest_seed(inst);
           return std::vector<Certificate>{with_seed(inst, inst.n(), seed, rng)};
         }},
        {"random-table",
         [this](const Instance& inst, Rng& rng) {
           HomomorphismGlobalCert c{inst.n(), honest_seed(inst), {}};
           for (std::size_t i = 0; i < inst.n(); ++i) c.table.push_back(uniform(rng, 0, target_.n() - 1));
           return std::vector<Certificate>{encode_hom_global(c, range(inst), target_.n())};
         }},
        {"colliding-seed",
         [this](const Instance& inst, Rng& rng) {
           const HashFamily h = *HashFamily::make(inst.n(), max_id(inst, inst.n()));
           std::uint64_t seed = uniform(rng, 1, h.size());
           for (int i = 0; i < 256; ++i) {
             if (!is_perfect(h, seed, inst.ids.values())) break;
             seed = uniform(rng, 1, h.size());
           }
           return std::vector<Certificate>{with_seed(inst, inst.n(), seed, rng)};
         }},
        {"random-seed",
         [this](const Instance& inst, Rng& rng) {
           const HashFamily h = *HashFamily::make(inst.n(), max_id(inst, inst.n()));
           return std::vector<Certificate>{with_seed(inst, inst.n(), uniform(rng, 1, h.size()), rng)};
         }},
        {"n-field",
         [this](const Instance& inst, Rng& rng) {
           // Claim a different n; the table is sized and hashed accordingly.
           for (int attempt = 0; attempt < 16; ++attempt) {
             const std::uint64_t k = uniform(rng, 1, 2 * inst.n() + 1);
             if (k == inst.n()) continue;
             auto m = range(inst).at(k);
             if (!m) continue;
             auto h = HashFamily::make(k, *m);
             if (!h) continue;
             return std::vector<Certificate>{with_seed(inst, k, uniform(rng, 1, h->size()), rng)};
           }
           return forge(inst);
         }},
    };
  }

  Decision decide(const Instance& inst, std::span<const Certificate> certs,
                  Vertex v) const override {
    if (certs.size() != 1) throw InvalidArgument("global scheme takes exactly one certificate");
    return HomomorphismVerifier(target_, range(inst))(global_view(inst, certs[0], v));
  }
  Verdict verify(const Instance& inst, std::span<const Certificate> certs) const override {
    if (certs.size() != 1) throw InvalidArgument("global scheme takes exactly one certificate");
    return run_global(HomomorphismVerifier(target_, range(inst)), inst, certs[0]);
  }

  std::optional<std::string> check_accepted(const Instance& inst,
                                            std::span<const Certificate> certs) const override {
    auto phi = reconstruct_homomorphism(inst, certs[0], range(inst), target_.n());
    if (!phi) return "accepted certificate does not decode";
    if (!is_homomorphism(inst.graph, target_, *phi)) {
      return "reconstructed map is not a homomorphism";
    }
    return std::nullopt;
  }

  // Partition by the n field. Values outside the listed blocks make the
  // length check or the family lookup fail before any other bit is read.
  std::vector<Block> exhaustive_blocks(const Instance& inst) const override {
    const std::size_t total = certificate_bits(inst);
    const IdentifierRange r = range(inst);
    const unsigned w = target_entry_bits(target_.n());
    std::uint64_t hi = 0;
    if (r.is_fixed()) {
      hi = *r.at(0) + 1;
    } else {
      if (w == 0) throw CapacityError("cannot bound the n field for a one-vertex target");
      hi = total;
    }
    std::vector<Block> out;
    for (std::uint64_t k = 0; k <= hi; ++k) {
      bool live = false;
      if (auto m = r.at(k)) {
        if (auto h = HashFamily::make(k, *m)) {
          live = kCountFieldBits + h->seed_bits() + k * w == total;
        }
      }
      // Dead values in range are enumerated too, as a check of the claim.
      if (live || r.is_fixed() || k == 0) {
        Block b;
        b.prefix.append(k, kCountFieldBits);
        b.free_bits = total - kCountFieldBits;
        out.push_back(std::move(b));
      }
    }
    return out;
  }

 private:
  IdentifierRange range(const Instance& inst) const {
    return range_.value_or(IdentifierRange::fixed(inst.ids.max_id()));
  }
  std::uint64_t max_id(const Instance& inst, std::uint64_t n) const {
    auto m = range(inst).at(n);
    if (!m) throw CapacityError("identifier range overflows");
    return *m;
  }
  // Cached: adversaries call this on every trial.
  std::uint64_t honest_seed(const Instance& inst) const {
    const std::vector<Identifier> key(inst.ids.values().begin(), inst.ids.values().end());
    {
      std::lock_guard lock(cache_mutex_);
      if (auto it = seed_cache_.find(key); it != seed_cache_.end()) return it->second;
    }
    std::uint64_t seed = 1;
    try {
      seed = find_perfect_seed(inst.n(), max_id(inst, inst.n()), key, seeds_).seed;
    } catch (const CapacityError&) {
    }
    std::lock_guard lock(cache_mutex_);
    seed_cache_[key] = seed;
    return seed;
  }

  // Certificate claiming n = k with the given seed and a table chosen by
  // local search to violate as few edges as possible.
  BitString with_seed(const Instance& inst, std::uint64_t k, std::uint64_t seed, Rng& rng) const {
    const HashFamily h = *HashFamily::make(k, max_id(inst, k));
    const std::size_t n = inst.n();
    std::vector<std::size_t> slot(n);
    for (Vertex v = 0; v < n; ++v) {
      const Identifier id = inst.ids[v];
      slot[v] = h.valid_point(id) ? h(seed, id) - 1 : 0;
    }
    std::vector<TargetVertex> table(k);
    for (auto& t : table) t = uniform(rng, 0, target_.n() - 1);
    auto bad = [&](Vertex u, Vertex v) {
      return !target_.adjacent(table[slot[u]], table[slot[v]]);
    };
    for (int iter = 0; iter < 64; ++iter) {
      std::vector<Edge> violated;
      for (auto [u, v] : inst.graph.edges()) {
        if (bad(u, v)) violated.push_back({u, v});
      }
      if (violated.empty()) break;
      const Edge e = violated[uniform(rng, 0, violated.size() - 1)];
      const Vertex x = rng() & 1 ? e.first : e.second;
      std::size_t best_cost = SIZE_MAX;
      TargetVertex best = table[slot[x]];
      for (TargetVertex t = 0; t < target_.n(); ++t) {
        table[slot[x]] = t;
        std::size_t cost = 0;
        for (auto [u, v] : inst.graph.edges()) cost += bad(u, v);
        if (cost < best_cost || (cost == best_cost && (rng() & 1))) {
          best_cost = cost;
          best = t;
        }
      }
      table[slot[x]] = best;
    }
    return encode_hom_global({k, seed, std::move(table)}, range(inst), target_.n());
  }

  std::string name_;
  Graph target_;
  std::optional<IdentifierRange> range_;
  SeedSearchOptions seeds_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<Identifier>, std::uint64_t> seed_cache_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Scheme defaults

Verdict Scheme::verify(const Instance& inst, std::span<const Certificate> certs) const {
  Verdict out;
  for (Vertex v = 0; v < inst.n(); ++v) out.decisions.push_back(decide(inst, certs, v));
  return out;
}

std::optional<std::string> Scheme::check_accepted(const Instance&,
                                                  std::span<const Certificate>) const {
  return std::nullopt;
}

std::vector<Scheme::Block> Scheme::exhaustive_blocks(const Instance& inst) const {
  const std::size_t per = certificate_bits(inst);
  return {Block{BitString(), global() ? per : per * inst.n()}};
}

std::unique_ptr<Scheme> make_scheme(std::string_view name, const SchemeParams& params) {
  if (name == "dfs-renaming") return std::make_unique<DfsScheme>();
  if (name == "permutation") return std::make_unique<PermScheme>();
  if (name == "kfree") return std::make_unique<CliqueFreeScheme>(params.clique_size);
  if (name == "diameter") return std::make_unique<DiameterScheme>(params.diameter_bound);
  if (name == "distinctness") return std::make_unique<DistinctnessScheme>(params.seeds);
  if (name == "hom-global") {
    if (!params.target) throw InvalidArgument("hom-global needs a target graph");
    return std::make_unique<HomScheme>("hom-global", *params.target, params.range, params.seeds);
  }
  if (name == "bipartite-global") {
    return std::make_unique<HomScheme>("bipartite-global", Graph::complete(2), params.range,
                                       params.seeds);
  }
  throw InvalidArgument("unknown scheme '" + std::string(name) + "'");
}

std::vector<std::string> scheme_names() {
  return {"dfs-renaming", "permutation", "kfree",           "diameter",
          "distinctness", "hom-global",  "bipartite-global"};
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kMutation:
      return "mutation";
    case Strategy::kRandom:
      return "random";
    case Strategy::kStructured:
      return "structured";
    case Strategy::kExhaustive:
      return "exhaustive";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view s) {
  for (auto x : {Strategy::kMutation, Strategy::kRandom, Strategy::kStructured,
                 Strategy::kExhaustive}) {
    if (strategy_name(x) == s) return x;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

constexpr std::size_t kKeptCounterexamples = 5;

std::string joined_strategies(const std::vector<Strategy>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += strategy_name(s[i]);
  }
  return out;
}

struct Tally {
  SoundnessReport report;
  // Trial index of each kept counterexample, for a deterministic merge.
  std::vector<std::uint64_t> kept_at;

  void record(const Scheme& scheme, const Instance& inst, std::string_view strategy,
              std::vector<Certificate> certs, std::uint64_t trial) {
    auto& r = report;
    ++r.trials;
    ++r.trials_by_strategy[std::string(strategy)];
    const Verdict verdict = scheme.verify(inst, certs);
    bool all = true;
    for (const auto& d : verdict.decisions) {
      if (!d.accepted) {
        all = false;
        ++r.rejections_by_step[std::string(d.step)];
      }
    }
    if (!all) return;
    ++r.accepting;
    if (auto bad = scheme.check_accepted(inst, certs)) {
      ++r.reconstruction_violations;
      if (r.violation_messages.size() < kKeptCounterexamples) r.violation_messages.push_back(*bad);
    }
    if (r.counterexamples.size() < kKeptCounterexamples) {
      r.counterexamples.push_back({std::string(strategy), std::move(certs)});
      kept_at.push_back(trial);
    }
  }

  void merge(Tally&& other) {
    auto& r = report;
    auto& o = other.report;
    r.trials += o.trials;
    r.accepting += o.accepting;
    r.reconstruction_violations += o.reconstruction_violations;
    for (auto& [k, v] : o.trials_by_strategy) r.trials_by_strategy[k] += v;
    for (auto& [k, v] : o.rejections_by_step) r.rejections_by_step[k] += v;
    for (auto& m : o.violation_messages) {
      if (r.violation_messages.size() < kKeptCounterexamples) r.violation_messages.push_back(m);
    }
    std::vector<std::pair<std::uint64_t, Counterexample>> all;
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
      all.push_back({kept_at[i], std::move(r.counterexamples[i])});
    }
    for (std::size_t i = 0; i < o.counterexamples.size(); ++i) {
      all.push_back({other.kept_at[i], std::move(o.counterexamples[i])});
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    r.counterexamples.clear();
    kept_at.clear();
    for (auto& [t, c] : all) {
      if (r.counterexamples.size() == kKeptCounterexamples) break;
      kept_at.push_back(t);
      r.counterexamples.push_back(std::move(c));
    }
  }
};

}  // namespace

std::string SoundnessReport::to_text() const {
  std::ostringstream out;
  out << "scheme: " << scheme << '\n';
  out << "instance: " << instance << '\n';
  out << "instance kind: " << (no_instance ? "NO" : "YES") << '\n';
  out << "strategies: " << joined_strategies(strategies) << '\n';
  out << "trials: " << trials << '\n';
  for (const auto& [k, v] : trials_by_strategy) out << "  " << k << ": " << v << '\n';
  out << "accepting assignments: " << accepting << '\n';
  out << "reconstruction violations: " << reconstruction_violations << '\n';
  out << "rejecting vertices by step:\n";
  for (const auto& [k, v] : rejections_by_step) out << "  " << k << ": " << v << '\n';
  for (const auto& m : violation_messages) out << "violation: " << m << '\n';
  for (const auto& c : counterexamples) {
    out << "accepting assignment (" << c.strategy << "):";
    for (const auto& cert : c.certs) out << ' ' << cert.to_hex() << '/' << cert.size();
    out << '\n';
  }
  out << "result: " << (clean() ? "clean" : "SOUNDNESS VIOLATION") << '\n';
  return out.str();
}

std::string SoundnessReport::to_summary() const {
  std::ostringstream out;
  out << "scheme=" << scheme << '\n';
  out << "instance=" << instance << '\n';
  out << "strategies=" << joined_strategies(strategies) << '\n';
  out << "trials=" << trials << '\n';
  out << "accepting=" << accepting << '\n';
  out << "reconstruction_violations=" << reconstruction_violations << '\n';
  out << "no_instance=" << (no_instance ? 1 : 0) << '\n';
  for (const auto& [k, v] : trials_by_strategy) out << "trials." << k << '=' << v << '\n';
  for (const auto& [k, v] : rejections_by_step) out << "reject." << k << '=' << v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Drivers

SoundnessReport fuzz_soundness(const Scheme& scheme, const Instance& inst,
                               const FuzzOptions& options) {
  if (options.budget == 0) throw InvalidArgument("fuzz budget must be positive");
  if (options.strategies.empty()) throw InvalidArgument("no fuzz strategy selected");
  for (auto s : options.strategies) {
    if (s == Strategy::kExhaustive) throw InvalidArgument("use exhaustive_soundness for exhaustive search");
  }
  const bool yes = scheme.holds(inst);
  if (yes && options.require_no_instance) {
    throw InvalidArgument("instance satisfies the property; fuzzing needs a NO instance");
  }

  const std::size_t bits = scheme.certificate_bits(inst);
  const std::size_t count = scheme.global() ? 1 : inst.n();
  const std::vector<Certificate> base = scheme.forge(inst);
  const std::vector<Adversary> adversaries = scheme.adversaries();
  if (adversaries.empty()) throw InvalidArgument("scheme declares no adversaries");

  auto trial = [&](std::uint64_t t, Tally& tally) {
    Rng rng(prf64(options.seed, t + 1));
    const Strategy s = options.strategies[t % options.strategies.size()];
    std::vector<Certificate> certs;
    if (s == Strategy::kRandom) {
      for (std::size_t i = 0; i < count; ++i) certs.push_back(random_bits(bits, rng));
    } else if (s == Strategy::kStructured) {
      const auto& adv = adversaries[(t / options.strategies.size()) % adversaries.size()];
      certs = adv.generate(inst, rng);
    } else {
      certs = rng() & 1 ? base : adversaries[uniform(rng, 0, adversaries.size() - 1)].generate(inst, rng);
      const std::size_t flips = rng() & 1 ? 1 : uniform(rng, 2, 8);
      const bool burst = (rng() & 3) == 0;
      std::size_t c = uniform(rng, 0, certs.size() - 1);
      std::size_t pos = certs[c].empty() ? 0 : uniform(rng, 0, certs[c].size() - 1);
      for (std::size_t f = 0; f < flips; ++f) {
        if (!burst) {
          c = uniform(rng, 0, certs.size() - 1);
          if (certs[c].empty()) continue;
          pos = uniform(rng, 0, certs[c].size() - 1);
        } else if (pos >= certs[c].size()) {
          break;
        }
        if (!certs[c].empty()) certs[c].flip(pos);
        ++pos;
      }
    }
    tally.record(scheme, inst, strategy_name(s), std::move(certs), t);
  };

  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<Tally> tallies(jobs);
  if (jobs == 1) {
    for (std::uint64_t t = 0; t < options.budget; ++t) trial(t, tallies[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        for (std::uint64_t t = j; t < options.budget; t += jobs) trial(t, tallies[j]);
      });
    }
    for (auto& th : pool) th.join();
  }
  Tally total = std::move(tallies[0]);
  for (unsigned j = 1; j < jobs; ++j) total.merge(std::move(tallies[j]));

  SoundnessReport r = std::move(total.report);
  r.scheme = std::string(scheme.name());
  r.instance = options.description;
  r.strategies = options.strategies;
  r.no_instance = !yes;
  return r;
}

SoundnessReport exhaustive_soundness(const Scheme& scheme, const Instance& inst,
                                     const ExhaustiveOptions& options) {
  const bool yes = scheme.holds(inst);
  if (yes && options.require_no_instance) {
    throw InvalidArgument("instance satisfies the property; exhaustive search needs a NO instance");
  }
  const std::size_t per = scheme.certificate_bits(inst);
  const auto blocks = scheme.exhaustive_blocks(inst);
  std::uint64_t space = 0;
  for (const auto& b : blocks) {
    if (b.free_bits >= 63 || (std::uint64_t{1} << b.free_bits) > options.limit - space) {
      throw CapacityError("certificate space exceeds the exhaustive limit of " +
                          std::to_string(options.limit));
    }
    space += std::uint64_t{1} << b.free_bits;
  }

  Tally tally;
  std::uint64_t index = 0;
  for (const auto& b : blocks) {
    const std::uint64_t end = std::uint64_t{1} << b.free_bits;
    for (std::uint64_t x = 0; x < end; ++x, ++index) {
      BitString all = b.prefix;
      all.append(x, static_cast<unsigned>(b.free_bits));
      std::vector<Certificate> certs;
      if (scheme.global()) {
        certs.push_back(std::move(all));
      } else {
        for (Vertex v = 0; v < inst.n(); ++v) certs.push_back(all.slice(v * per, per));
      }
      tally.record(scheme, inst, "exhaustive", std::move(certs), index);
    }
  }
  SoundnessReport r = std::move(tally.report);
  r.scheme = std::string(scheme.name());
  r.instance = options.description;
  r.strategies = {Strategy::kExhaustive};
  r.no_instance = !yes;
  return r;
}

}  // namespace lcert
