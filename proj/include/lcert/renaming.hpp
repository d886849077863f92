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

// Certification of identifier renamings V -> [n].
//
// DFS renaming: the prover picks the renaming itself (the preorder of a
// spanning tree, children visited by increasing identifier) and certifies it
// with Root || Parent || Distance || Subtree, Subtree being the size of the
// node's subtree. 2*ceil(log2(M+1)) + 2*ceil(log2(n+1)) bits per node.
//
// Permutation: any bijection V -> [n] given as input is certified with the
// same prefix followed by an n-bit vector whose j-th bit says whether value
// j occurs in the node's subtree. 2*ceil(log2(M+1)) + ceil(log2(n+1)) + n
// bits per node.
//
// In both schemes the renaming travels as the node's input. Applications
// embed it in the certificate instead and call verify_dfs_node /
// verify_perm_node directly on decoded records.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcert/bits.hpp"
#include "lcert/cert_model.hpp"
#include "lcert/graph.hpp"
#include "lcert/tree_cert.hpp"

namespace lcert {

// Renaming[v] for every vertex. Correct renamings are bijections onto 1..n.
using Renaming = std::vector<std::uint64_t>;

struct DfsLayout {
  TreeLayout tree;

  static DfsLayout for_instance(std::size_t n, std::uint64_t max_id) {
    return {TreeLayout::for_instance(n, max_id)};
  }
  std::size_t bits() const { return tree.bits() + tree.count_bits; }
};

struct PermLayout {
  TreeLayout tree;
  std::size_t n = 0;

  static PermLayout for_instance(std::size_t n, std::uint64_t max_id) {
    return {TreeLayout::for_instance(n, max_id), n};
  }
  std::size_t bits() const { return tree.bits() + n; }
};

struct DfsRenamingCert {
  TreeCertCore core;
  std::uint64_t subtree_count = 0;
};

struct PermutationCert {
  TreeCertCore core;
  BitString subtree_bits;
};

void encode_dfs(const DfsRenamingCert& cert, const DfsLayout& layout, BitString& out);
DfsRenamingCert decode_dfs(BitReader& reader, const DfsLayout& layout);
void encode_perm(const PermutationCert& cert, const PermLayout& layout, BitString& out);
PermutationCert decode_perm(BitReader& reader, const PermLayout& layout);

// Preorder of t starting at 1, children by increasing identifier.
Renaming dfs_renaming(const Graph& g, const IdAssignment& ids, const SpanningTree& t);

// Root used by the provers: the vertex with the smallest identifier.
SpanningTree prover_tree(const Graph& g, const IdAssignment& ids);

std::vector<DfsRenamingCert> build_dfs_certs(const Graph& g, const IdAssignment& ids,
                                             const SpanningTree& t);
// Subtree vectors computed from `renaming` as given; values outside 1..n set
// no bit. Used by prove_perm and, on non-bijections, by the adversaries.
std::vector<PermutationCert> build_perm_certs(const Graph& g, const IdAssignment& ids,
                                              const SpanningTree& t, std::span<const std::uint64_t> renaming);

struct DfsProof {
  Renaming renaming;
  std::vector<Certificate> certs;
};

DfsProof prove_dfs(const Graph& g, const IdAssignment& ids);

// A spanning tree whose preorder (children by increasing identifier) is
// `renaming`, or nullopt. Backtracking; exponential in the worst case.
std::optional<SpanningTree> find_dfs_tree(const Graph& g, const IdAssignment& ids,
                                          std::span<const std::uint64_t> renaming);

// Certificates for a given DFS renaming. Throws PredicateFalse if it is
// not the preorder of any spanning tree.
std::vector<Certificate> prove_dfs_renaming(const Graph& g, const IdAssignment& ids,
                                            std::span<const std::uint64_t> renaming);

// Throws PredicateFalse if claimed is not a bijection onto 1..n.
std::vector<Certificate> prove_perm(const Graph& g, const IdAssignment& ids,
                                    std::span<const std::uint64_t> claimed);

// Renaming as an input assignment (range max(n, largest value)).
InputAssignment renaming_inputs(std::span<const std::uint64_t> renaming);

// A node's view of itself or a neighbour once certificates are decoded.
struct DfsNode {
  Identifier id = 0;
  std::uint64_t renaming = 0;
  DfsRenamingCert cert;
};

struct PermNode {
  Identifier id = 0;
  std::uint64_t renaming = 0;
  PermutationCert cert;
};

// Steps (i)-(iv) of the DFS scheme.
Decision verify_dfs_node(const DfsNode& self, std::span<const DfsNode> neighbors);
// Steps (i)-(v) of the permutation scheme.
Decision verify_perm_node(const PermNode& self, std::span<const PermNode> neighbors);

class DfsRenamingVerifier {
 public:
  DfsRenamingVerifier(std::size_t n, std::uint64_t max_id)
      : layout_(DfsLayout::for_instance(n, max_id)) {}

  const DfsLayout& layout() const { return layout_; }
  Decision operator()(const LocalView& view) const;

 private:
  DfsLayout layout_;
};

class PermutationVerifier {
 public:
  PermutationVerifier(std::size_t n, std::uint64_t max_id)
      : layout_(PermLayout::for_instance(n, max_id)) {}

  const PermLayout& layout() const { return layout_; }
  Decision operator()(const LocalView& view) const;

 private:
  PermLayout layout_;
};

}  // namespace lcert
