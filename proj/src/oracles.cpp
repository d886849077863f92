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

#include "lcert/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <set>

#include "lcert/error.hpp"

namespace lcert {

bool oracle_is_permutation(std::span<const std::uint64_t> values) {
  std::vector<std::uint64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i + 1) return false;
  }
  return true;
}

bool oracle_is_dfs_renaming(const Graph& g, const IdAssignment& ids,
                            std::span<const std::uint64_t> renaming, std::uint64_t budget) {
  const std::size_t n = g.n();
  if (renaming.size() != n || !oracle_is_permutation(renaming)) return false;
  std::vector<Vertex> by_rank(n);
  for (Vertex v = 0; v < n; ++v) by_rank[renaming[v] - 1] = v;

  // Candidate parents: neighbours of smaller rank.
  std::vector<std::vector<Vertex>> options(n);
  std::uint64_t total = 1;
  for (std::size_t r = 1; r < n; ++r) {
    const Vertex v = by_rank[r];
    for (Vertex w : g.neighbors(v)) {
      if (renaming[w] < renaming[v]) options[r].push_back(w);
    }
    if (options[r].empty()) return false;
    if (total > budget / options[r].size()) throw CapacityError("dfs renaming oracle budget exceeded");
    total *= options[r].size();
  }

  std::vector<Vertex> parent(n);
  parent[by_rank[0]] = by_rank[0];
  std::vector<std::size_t> choice(n, 0);
  std::vector<std::vector<Vertex>> kids(n);
  std::vector<std::uint64_t> pre;
  for (std::uint64_t trial = 0; trial < total; ++trial) {
    for (auto& k : kids) k.clear();
    for (std::size_t r = 1; r < n; ++r) {
      parent[by_rank[r]] = options[r][choice[r]];
      kids[parent[by_rank[r]]].push_back(by_rank[r]);
    }
    for (auto& k : kids) {
      std::sort(k.begin(), k.end(), [&](Vertex a, Vertex b) { return ids[a] < ids[b]; });
    }
    // Parents have smaller rank, so this is a tree rooted at by_rank[0].
    pre.assign(n, 0);
    std::uint64_t next = 1;
    std::vector<Vertex> stack{by_rank[0]};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      pre[u] = next++;
      for (auto it = kids[u].rbegin(); it != kids[u].rend(); ++it) stack.push_back(*it);
    }
    if (std::equal(pre.begin(), pre.end(), renaming.begin())) return true;
    for (std::size_t r = 1; r < n; ++r) {
      if (++choice[r] < options[r].size()) break;
      choice[r] = 0;
    }
  }
  return false;
}

bool oracle_clique_free(const Graph& g, std::size_t clique_size) {
  const std::size_t n = g.n();
  if (n > 64) throw InvalidArgument("clique oracle supports n <= 64");
  if (clique_size == 0) return false;
  if (clique_size > n) return true;
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [a, b] : g.edges()) {
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  }
  // Grow cliques in increasing vertex order; `cand` holds common neighbours
  // above the last vertex added.
  std::function<bool(std::uint64_t, std::size_t)> grow = [&](std::uint64_t cand, std::size_t need) {
    if (need == 0) return true;
    if (static_cast<std::size_t>(std::popcount(cand)) < need) return false;
    while (cand) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      if (grow(cand & adj[v], need - 1)) return true;
    }
    return false;
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return !grow(all, clique_size);
}

std::size_t oracle_diameter(const Graph& g) {
  const std::size_t n = g.n();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::size_t> d(n * n, inf);
  for (Vertex v = 0; v < n; ++v) d[v * n + v] = 0;
  for (auto [a, b] : g.edges()) d[a * n + b] = d[b * n + a] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
      }
    }
  }
  return *std::max_element(d.begin(), d.end());
}

bool oracle_distinct(std::span<const std::uint64_t> values) {
  return std::set<std::uint64_t>(values.begin(), values.end()).size() == values.size();
}

std::optional<std::vector<std::size_t>> oracle_homomorphism(const Graph& g, const Graph& target) {
  const std::size_t n = g.n();
  const std::size_t k = target.n();
  std::vector<std::size_t> phi(n, 0);
  std::function<bool(Vertex)> place = [&](Vertex v) {
    if (v == n) return true;
    for (std::size_t c = 0; c < k; ++c) {
      bool ok = true;
      for (Vertex w : g.neighbors(v)) {
        if (w < v && !target.adjacent(phi[w], c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      phi[v] = c;
      if (place(v + 1)) return true;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return phi;
}

}  // namespace lcert
