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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lcert {

// Dense internal vertex index, 0..n-1.
using Vertex = std::size_t;
// Identifier visible to the nodes, in 1..M.
using Identifier = std::uint64_t;
// Input value, in 1..m.
using InputValue = std::uint64_t;

using Edge = std::pair<Vertex, Vertex>;

// Simple, undirected, connected graph over vertices 0..n-1.
class Graph {
 public:
  // Validates simplicity and connectivity; throws InvalidArgument.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  // Sorted neighbour indices.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;

  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph complete(std::size_t n);
  static Graph star(std::size_t leaves);

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Injective Id : V -> [M].
class IdAssignment {
 public:
  // Throws InvalidArgument unless the identifiers are distinct, lie in 1..M
  // and M >= n.
  IdAssignment(std::vector<Identifier> ids, std::uint64_t max_id);

  // Identifiers 1..n in vertex order.
  static IdAssignment identity(std::size_t n);

  std::size_t size() const { return ids_.size(); }
  std::uint64_t max_id() const { return max_id_; }
  Identifier operator[](Vertex v) const { return ids_[v]; }
  std::span<const Identifier> values() const { return ids_; }
  std::optional<Vertex> vertex_of(Identifier id) const;

 private:
  std::vector<Identifier> ids_;
  std::uint64_t max_id_;
  std::unordered_map<Identifier, Vertex> index_;
};

// i : V -> [m].
class InputAssignment {
 public:
  // Throws InvalidArgument unless every value lies in 1..m.
  InputAssignment(std::vector<InputValue> values, std::uint64_t max_input);

  std::size_t size() const { return values_.size(); }
  std::uint64_t max_input() const { return max_input_; }
  InputValue operator[](Vertex v) const { return values_[v]; }
  std::span<const InputValue> values() const { return values_; }

 private:
  std::vector<InputValue> values_;
  std::uint64_t max_input_;
};

struct SpanningTree {
  Vertex root = 0;
  // parent[root] == root.
  std::vector<Vertex> parent;
  std::vector<std::size_t> depth;
  // Children of each vertex, sorted by increasing identifier.
  std::vector<std::vector<Vertex>> children;

  std::size_t size() const { return parent.size(); }
};

// A graph file: the graph together with the identifiers used to write it.
struct LabeledGraph {
  Graph graph;
  IdAssignment ids;
};

// Parses the line format
//
//   graph <n> <M>
//   e <idA> <idB>
//   v <id>
//
// Blank lines and lines starting with '#' are ignored. Vertices are indexed
// in order of first appearance. Throws ParseError.
LabeledGraph parse_graph(std::string_view text);
std::string format_graph(const Graph& g, const IdAssignment& ids);

// BFS tree from root; each vertex takes as parent its neighbour one level up
// with the smallest identifier.
SpanningTree spanning_tree(const Graph& g, const IdAssignment& ids, Vertex root);

// Tree with the given parent array (parent[root] == root). Throws
// InvalidArgument unless every parent edge is an edge of g and the parent
// pointers reach the root from every vertex.
SpanningTree tree_from_parents(const Graph& g, const IdAssignment& ids, Vertex root,
                               std::vector<Vertex> parent);

// |T_u| for every vertex u.
std::vector<std::size_t> subtree_sizes(const SpanningTree& t);

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

// Vertex carrying the smallest identifier.
Vertex min_id_vertex(const IdAssignment& ids);

}  // namespace lcert
