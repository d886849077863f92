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

#include "lcert/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

#include "lcert/error.hpp"

namespace lcert {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

bool is_connected(const std::vector<std::vector<Vertex>>& adj) {
  if (adj.empty()) return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == adj.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_u64(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  }
  return v;
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  if (n == 0) throw InvalidArgument("graph must have at least one vertex");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw InvalidArgument("duplicate edge");
    }
  }
  edge_count_ = edges.size();
  if (!is_connected(adjacency_)) throw InvalidArgument("graph is not connected");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph(n, e);
}

Graph Graph::cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

Graph Graph::star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

IdAssignment::IdAssignment(std::vector<Identifier> ids, std::uint64_t max_id)
    : ids_(std::move(ids)), max_id_(max_id) {
  if (max_id_ < ids_.size()) throw InvalidArgument("identifier range M must be at least n");
  index_.reserve(ids_.size());
  for (Vertex v = 0; v < ids_.size(); ++v) {
    if (ids_[v] < 1 || ids_[v] > max_id_) {
      throw InvalidArgument("identifier " + std::to_string(ids_[v]) + " outside 1.." +
                            std::to_string(max_id_));
    }
    if (!index_.emplace(ids_[v], v).second) {
      throw InvalidArgument("identifier " + std::to_string(ids_[v]) + " is not unique");
    }
  }
}

IdAssignment IdAssignment::identity(std::size_t n) {
  std::vector<Identifier> ids(n);
  for (Vertex v = 0; v < n; ++v) ids[v] = v + 1;
  return IdAssignment(std::move(ids), n);
}

std::optional<Vertex> IdAssignment::vertex_of(Identifier id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

InputAssignment::InputAssignment(std::vector<InputValue> values, std::uint64_t max_input)
    : values_(std::move(values)), max_input_(max_input) {
  for (InputValue x : values_) {
    if (x < 1 || x > max_input_) {
      throw InvalidArgument("input " + std::to_string(x) + " outside 1.." +
                            std::to_string(max_input_));
    }
  }
}

LabeledGraph parse_graph(std::string_view text) {
  std::optional<std::size_t> declared_n;
  std::uint64_t max_id = 0;
  std::vector<Identifier> ids;
  std::unordered_map<Identifier, Vertex> index;
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;

  auto vertex_for = [&](Identifier id, std::size_t line) {
    if (id < 1 || id > max_id) {
      throw ParseError("identifier " + std::to_string(id) + " outside 1.." + std::to_string(max_id),
                       line);
    }
    auto [it, inserted] = index.emplace(id, ids.size());
    if (inserted) {
      ids.push_back(id);
      if (ids.size() > *declared_n) {
        throw ParseError("more than the declared " + std::to_string(*declared_n) + " vertices",
                         line);
      }
    }
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;

    if (tok[0] == "graph") {
      if (declared_n) throw ParseError("duplicate graph header", line_no);
      if (tok.size() != 3) throw ParseError("expected 'graph <n> <M>'", line_no);
      declared_n = parse_u64(tok[1], line_no);
      max_id = parse_u64(tok[2], line_no);
      if (*declared_n == 0) throw ParseError("graph must have at least one vertex", line_no);
      if (max_id < *declared_n) throw ParseError("identifier range M must be at least n", line_no);
      continue;
    }
    if (!declared_n) throw ParseError("missing 'graph <n> <M>' header", line_no);

    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError("expected 'e <idA> <idB>'", line_no);
      Identifier a = parse_u64(tok[1], line_no);
      Identifier b = parse_u64(tok[2], line_no);
      if (a == b) throw ParseError("self-loop on identifier " + std::to_string(a), line_no);
      Vertex u = vertex_for(a, line_no);
      Vertex v = vertex_for(b, line_no);
      if (!seen_edges.emplace(std::min(u, v), std::max(u, v)).second) {
        throw ParseError("duplicate edge " + std::to_string(a) + "-" + std::to_string(b), line_no);
      }
      edges.emplace_back(u, v);
    } else if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError("expected 'v <id>'", line_no);
      vertex_for(parse_u64(tok[1], line_no), line_no);
    } else {
      throw ParseError("unknown record '" + std::string(tok[0]) + "'", line_no);
    }
  }
  if (!declared_n) throw ParseError("missing 'graph <n> <M>' header", 0);
  if (ids.size() != *declared_n) {
    throw ParseError("declared " + std::to_string(*declared_n) + " vertices but found " +
                         std::to_string(ids.size()),
                     0);
  }
  std::vector<std::vector<Vertex>> adj(ids.size());
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  if (!is_connected(adj)) throw ParseError("graph is not connected", 0);
  return LabeledGraph{Graph(ids.size(), edges), IdAssignment(std::move(ids), max_id)};
}

std::string format_graph(const Graph& g, const IdAssignment& ids) {
  std::ostringstream out;
  out << "graph " << g.n() << ' ' << ids.max_id() << '\n';
  for (Vertex v = 0; v < g.n(); ++v) out << "v " << ids[v] << '\n';
  for (auto [u, v] : g.edges()) out << "e " << ids[u] << ' ' << ids[v] << '\n';
  return out.str();
}

SpanningTree spanning_tree(const Graph& g, const IdAssignment& ids, Vertex root) {
  if (root >= g.n()) throw InvalidArgument("root out of range");
  const std::size_t n = g.n();
  SpanningTree t;
  t.root = root;
  t.parent.assign(n, kUnreached);
  t.depth.assign(n, kUnreached);
  t.children.assign(n, {});
  t.depth[root] = 0;
  t.parent[root] = root;

  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (t.depth[v] == kUnreached) {
        t.depth[v] = t.depth[u] + 1;
        queue.push_back(v);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == root) continue;
    Vertex best = kUnreached;
    for (Vertex w : g.neighbors(v)) {
      if (t.depth[w] + 1 == t.depth[v] && (best == kUnreached || ids[w] < ids[best])) best = w;
    }
    t.parent[v] = best;
    t.children[best].push_back(v);
  }
  for (auto& c : t.children) {
    std::sort(c.begin(), c.end(), [&](Vertex a, Vertex b) { return ids[a] < ids[b]; });
  }
  return t;
}

SpanningTree tree_from_parents(const Graph& g, const IdAssignment& ids, Vertex root,
                               std::vector<Vertex> parent) {
  const std::size_t n = g.n();
  if (root >= n || parent.size() != n || parent[root] != root) {
    throw InvalidArgument("malformed parent array");
  }
  SpanningTree t;
  t.root = root;
  t.parent = std::move(parent);
  t.depth.assign(n, kUnreached);
  t.children.assign(n, {});
  t.depth[root] = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == root) continue;
    if (t.parent[v] >= n || !g.adjacent(v, t.parent[v])) throw InvalidArgument("parent is not a neighbour");
    t.children[t.parent[v]].push_back(v);
  }
  std::vector<Vertex> stack{root};
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex c : t.children[u]) {
      t.depth[c] = t.depth[u] + 1;
      stack.push_back(c);
    }
  }
  if (reached != n) throw InvalidArgument("parent pointers contain a cycle");
  for (auto& c : t.children) {
    std::sort(c.begin(), c.end(), [&](Vertex a, Vertex b) { return ids[a] < ids[b]; });
  }
  return t;
}

std::vector<std::size_t> subtree_sizes(const SpanningTree& t) {
  const std::size_t n = t.size();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return t.depth[a] > t.depth[b]; });
  std::vector<std::size_t> size(n, 1);
  for (Vertex v : order) {
    if (v != t.root) size[t.parent[v]] += size[v];
  }
  return size;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.n()) throw InvalidArgument("source out of range");
  std::vector<std::size_t> dist(g.n(), kUnreached);
  dist[source] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

Vertex min_id_vertex(const IdAssignment& ids) {
  auto vals = ids.values();
  return static_cast<Vertex>(std::min_element(vals.begin(), vals.end()) - vals.begin());
}

}  // namespace lcert
