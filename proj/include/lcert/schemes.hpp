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

// Schemes built on top of renaming and perfect hashing.
//
// The local schemes for K_l-freeness and diameter <= l both start with a
// certified DFS renaming; the renaming value is carried in the certificate
// (these properties have no input) and checked exactly as in the DFS scheme:
//
//   Renaming (w_n) || Root || Parent || Distance || Subtree || payload
//
// Distinctness certifies that h(i(u)) is a permutation for a perfect hash
// h : [m] -> [n] shared by all nodes:
//
//   Seed (ceil(log2 |H_{n,m}|)) || Root || Parent || Distance || Subtree bits
//
// H-homomorphism is a global scheme. The certificate is
//
//   n (64 bits) || Seed of H_{n,M} || L[1..n] (ceil(log2 |V(H)|) bits each)
//
// and node u accepts iff {L[h(Id u)], L[h(Id v)]} is an edge of H for every
// neighbour v. Injectivity of h is never checked: an accepted certificate
// always yields the homomorphism v -> L[h(Id v)], because H has no loops.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcert/bits.hpp"
#include "lcert/cert_model.hpp"
#include "lcert/graph.hpp"
#include "lcert/hashing.hpp"
#include "lcert/renaming.hpp"

namespace lcert {

// Renaming value followed by a DFS renaming certificate.
struct EmbeddedDfs {
  std::uint64_t renaming = 0;
  DfsRenamingCert dfs;
};

// ---------------------------------------------------------------------------
// K_l-freeness

struct CliqueFreeLayout {
  DfsLayout dfs;
  std::size_t n = 0;

  static CliqueFreeLayout for_instance(std::size_t n, std::uint64_t max_id) {
    return {DfsLayout::for_instance(n, max_id), n};
  }
  std::size_t bits() const { return dfs.tree.count_bits + dfs.bits() + n; }
};

struct CliqueFreeCert {
  EmbeddedDfs head;
  // Bit j-1 is set iff the node is adjacent to the vertex renamed j.
  BitString neighborhood_bits;
};

void encode_clique_free(const CliqueFreeCert& cert, const CliqueFreeLayout& layout, BitString& out);
CliqueFreeCert decode_clique_free(BitReader& reader, const CliqueFreeLayout& layout);

// Honest-shaped certificates regardless of whether g is K_l-free.
std::vector<CliqueFreeCert> build_clique_free_certs(const Graph& g, const IdAssignment& ids);

// Throws PredicateFalse if g contains K_l.
std::vector<Certificate> prove_clique_free(const Graph& g, const IdAssignment& ids,
                                           std::size_t clique_size);

class CliqueFreeVerifier {
 public:
  // clique_size >= 2.
  CliqueFreeVerifier(std::size_t n, std::uint64_t max_id, std::size_t clique_size);

  const CliqueFreeLayout& layout() const { return layout_; }
  Decision operator()(const LocalView& view) const;

 private:
  CliqueFreeLayout layout_;
  std::size_t clique_size_;
};

// ---------------------------------------------------------------------------
// Diameter <= l

struct DiameterLayout {
  DfsLayout dfs;
  std::size_t n = 0;
  unsigned entry_bits = 0;

  static DiameterLayout for_instance(std::size_t n, std::uint64_t max_id, std::uint64_t bound) {
    return {DfsLayout::for_instance(n, max_id), n, width_for(bound)};
  }
  std::size_t bits() const { return dfs.tree.count_bits + dfs.bits() + n * entry_bits; }
};

struct DiameterCert {
  EmbeddedDfs head;
  // distance_table[j-1] = distance to the vertex renamed j.
  std::vector<std::uint64_t> distance_table;
};

void encode_diameter(const DiameterCert& cert, const DiameterLayout& layout, BitString& out);
DiameterCert decode_diameter(BitReader& reader, const DiameterLayout& layout);

// Honest-shaped certificates with every entry clamped to `bound`.
std::vector<DiameterCert> build_diameter_certs(const Graph& g, const IdAssignment& ids,
                                               std::uint64_t bound);

// Throws PredicateFalse if diam(g) > bound.
std::vector<Certificate> prove_diameter(const Graph& g, const IdAssignment& ids,
                                        std::uint64_t bound);

class DiameterVerifier {
 public:
  // bound >= 1.
  DiameterVerifier(std::size_t n, std::uint64_t max_id, std::uint64_t bound);

  const DiameterLayout& layout() const { return layout_; }
  Decision operator()(const LocalView& view) const;

 private:
  DiameterLayout layout_;
  std::uint64_t bound_;
};

// ---------------------------------------------------------------------------
// Distinctness

struct DistinctnessLayout {
  std::optional<HashFamily> family;  // H_{n,m}; absent when m < n
  PermLayout perm;

  static DistinctnessLayout for_instance(std::size_t n, std::uint64_t max_id,
                                         std::uint64_t max_input);
  // Throws CapacityError when the family is undefined.
  std::size_t bits() const;
};

struct DistinctnessCert {
  std::uint64_t hash_seed = 0;
  PermutationCert perm;
};

void encode_distinctness(const DistinctnessCert& cert, const DistinctnessLayout& layout,
                         BitString& out);

// Throws PredicateFalse on repeated inputs, CapacityError when the seed
// search is capped or exhausted.
std::vector<Certificate> prove_distinctness(const Instance& inst,
                                            const SeedSearchOptions& options = {});

class DistinctnessVerifier {
 public:
  DistinctnessVerifier(std::size_t n, std::uint64_t max_id, std::uint64_t max_input)
      : layout_(DistinctnessLayout::for_instance(n, max_id, max_input)) {}

  const DistinctnessLayout& layout() const { return layout_; }
  Decision operator()(const LocalView& view) const;

 private:
  DistinctnessLayout layout_;
};

// ---------------------------------------------------------------------------
// H-homomorphism, global certificate

// Vertex of H, as an index into H.
using TargetVertex = std::size_t;
using Homomorphism = std::vector<TargetVertex>;

inline constexpr unsigned kCountFieldBits = 64;

struct HomomorphismGlobalCert {
  std::uint64_t n = 0;
  std::uint64_t hash_seed = 0;
  std::vector<TargetVertex> table;  // L
};

// Bits used per L entry for a target graph on `target_n` vertices.
inline unsigned target_entry_bits(std::size_t target_n) { return ceil_log2(target_n); }

// 64 + seed bits + n * entry bits. Throws CapacityError if the family is
// undefined or M(n) overflows.
std::size_t hom_global_bits(std::uint64_t n, const IdentifierRange& range, std::size_t target_n);

BitString encode_hom_global(const HomomorphismGlobalCert& cert, const IdentifierRange& range,
                            std::size_t target_n);
// nullopt when the length disagrees with the n field or the seed names no
// member of the family. Entries of L are returned as written, unchecked.
std::optional<HomomorphismGlobalCert> decode_hom_global(const BitString& bits,
                                                        const IdentifierRange& range,
                                                        std::size_t target_n);

// Backtracking search used by the prover.
std::optional<Homomorphism> find_homomorphism(const Graph& g, const Graph& target);
bool is_homomorphism(const Graph& g, const Graph& target, std::span<const TargetVertex> phi);

// Certificate for a given homomorphism (no search).
BitString build_hom_global_cert(const Instance& inst, const Graph& target,
                                const IdentifierRange& range, std::span<const TargetVertex> phi,
                                const SeedSearchOptions& options = {});

// Throws PredicateFalse if no homomorphism exists, CapacityError when the
// seed search is capped or exhausted.
BitString prove_hom_global(const Instance& inst, const Graph& target, const IdentifierRange& range,
                           const SeedSearchOptions& options = {});

class HomomorphismVerifier {
 public:
  HomomorphismVerifier(Graph target, IdentifierRange range)
      : target_(std::move(target)), range_(range) {}

  const Graph& target() const { return target_; }
  const IdentifierRange& range() const { return range_; }
  Decision operator()(const GlobalView& view) const;

 private:
  Graph target_;
  IdentifierRange range_;
};

// v -> L[h(Id v)] for a certificate that decodes; nullopt otherwise.
std::optional<Homomorphism> reconstruct_homomorphism(const Instance& inst, const BitString& cert,
                                                     const IdentifierRange& range,
                                                     std::size_t target_n);

}  // namespace lcert
