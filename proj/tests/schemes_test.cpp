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

#include <gtest/gtest.h>

#include <algorithm>

#include "lcert/error.hpp"
#include "lcert/harness.hpp"
#include "lcert/oracles.hpp"
#include "test_support.hpp"

namespace lcert {
namespace {

using testing::graph_of;
using testing::load_graph;
using testing::make_instance;
using testing::plain;

bool has_step(const Verdict& v, std::string_view step) {
  return std::any_of(v.decisions.begin(), v.decisions.end(),
                     [&](const Decision& d) { return !d.accepted && d.step == step; });
}

// ---------------------------------------------------------------------------
// K_l-freeness

TEST(CliqueFree, LayoutBits) {
  // w_n + DFS certificate + n
  EXPECT_EQ(CliqueFreeLayout::for_instance(5, 5).bits(), 3u + (2 * 3 + 2 * 3) + 5u);
  EXPECT_EQ(CliqueFreeLayout::for_instance(20, 8000).bits(), 5u + 36u + 20u);
}

TEST(CliqueFree, HonestAcceptsTriangleFreeGraphs) {
  for (const char* name : {"c4.graph", "c5.graph", "petersen.graph", "p3.graph", "tree20.graph"}) {
    auto lg = load_graph(name);
    Instance inst{lg.graph, lg.ids, std::nullopt};
    auto certs = prove_clique_free(lg.graph, lg.ids, 3);
    EXPECT_EQ(max_certificate_bits(certs), CliqueFreeLayout::for_instance(lg.graph.n(), lg.ids.max_id()).bits());
    EXPECT_TRUE(run_local(CliqueFreeVerifier(lg.graph.n(), lg.ids.max_id(), 3), inst, certs).accepted())
        << name;
  }
}

TEST(CliqueFree, NeighbourhoodBits) {
  Instance inst = plain(Graph::path(3));
  auto certs = build_clique_free_certs(inst.graph, inst.ids);
  EXPECT_EQ(certs[0].neighborhood_bits.to_string(), "010");
  EXPECT_EQ(certs[1].neighborhood_bits.to_string(), "101");
  EXPECT_EQ(certs[2].neighborhood_bits.to_string(), "010");
  EXPECT_EQ(certs[1].head.renaming, 2u);
}

TEST(CliqueFree, ProverRefusesCliques) {
  EXPECT_THROW(prove_clique_free(Graph::complete(3), IdAssignment::identity(3), 3), PredicateFalse);
  EXPECT_THROW(prove_clique_free(Graph::complete(5), IdAssignment::identity(5), 4), PredicateFalse);
  EXPECT_NO_THROW(prove_clique_free(Graph::complete(4), IdAssignment::identity(4), 5));
  EXPECT_THROW(prove_clique_free(Graph::path(2), IdAssignment::identity(2), 2), PredicateFalse);
  EXPECT_NO_THROW(prove_clique_free(Graph::path(1), IdAssignment::identity(1), 2));
  EXPECT_THROW(prove_clique_free(Graph::path(1), IdAssignment::identity(1), 1), InvalidArgument);
}

TEST(CliqueFree, ForgedCertificatesOnATriangleAreRejected) {
  Instance inst = plain(Graph::complete(3));
  const auto layout = CliqueFreeLayout::for_instance(3, 3);
  std::vector<Certificate> certs;
  for (const auto& c : build_clique_free_certs(inst.graph, inst.ids)) {
    BitString b;
    encode_clique_free(c, layout, b);
    certs.push_back(b);
  }
  auto v = run_local(CliqueFreeVerifier(3, 3, 3), inst, certs);
  EXPECT_FALSE(v.accepted());
  EXPECT_TRUE(has_step(v, "clique"));
  // Triangle-free with K_4 as the target: the same certificates pass.
  EXPECT_TRUE(run_local(CliqueFreeVerifier(3, 3, 4), inst, certs).accepted());
}

TEST(CliqueFree, HiddenEdgeIsAnAdjacencyRejection) {
  Instance inst = plain(Graph::complete(3));
  auto forged = build_clique_free_certs(inst.graph, inst.ids);
  forged[0].neighborhood_bits.set(forged[1].head.renaming - 1, false);
  const auto layout = CliqueFreeLayout::for_instance(3, 3);
  std::vector<Certificate> certs;
  for (const auto& c : forged) {
    BitString b;
    encode_clique_free(c, layout, b);
    certs.push_back(b);
  }
  auto v = run_local(CliqueFreeVerifier(3, 3, 3), inst, certs);
  EXPECT_EQ(v.decisions[0].step, "adjacency");
}

TEST(CliqueFree, AgreesWithOracleOnRandomGraphs) {
  Rng rng(10);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    Graph g = random_connected_graph(n, 0.4, rng);
    IdAssignment ids = random_ids(n, n * n, rng);
    for (std::size_t l : {3u, 4u}) {
      const bool free = oracle_clique_free(g, l);
      try {
        auto certs = prove_clique_free(g, ids, l);
        EXPECT_TRUE(free);
        Instance inst{g, ids, std::nullopt};
        EXPECT_TRUE(run_local(CliqueFreeVerifier(n, ids.max_id(), l), inst, certs).accepted());
      } catch (const PredicateFalse&) {
        EXPECT_FALSE(free);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Diameter

TEST(Diameter, LayoutAndTables) {
  EXPECT_EQ(DiameterLayout::for_instance(3, 3, 2).bits(), 2u + 8u + 3u * 2u);
  EXPECT_EQ(DiameterLayout::for_instance(3, 3, 4).entry_bits, 3u);
  auto certs = build_diameter_certs(Graph::path(3), IdAssignment::identity(3), 2);
  EXPECT_EQ(certs[0].distance_table, (std::vector<std::uint64_t>{0, 1, 2}));
  EXPECT_EQ(certs[1].distance_table, (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(certs[2].distance_table, (std::vector<std::uint64_t>{2, 1, 0}));
}

TEST(Diameter, HonestAndThreshold) {
  for (const char* name : {"c5.graph", "petersen.graph"}) {
    auto lg = load_graph(name);
    Instance inst{lg.graph, lg.ids, std::nullopt};
    auto certs = prove_diameter(lg.graph, lg.ids, 2);
    EXPECT_TRUE(run_local(DiameterVerifier(lg.graph.n(), lg.ids.max_id(), 2), inst, certs).accepted());
    EXPECT_THROW(prove_diameter(lg.graph, lg.ids, 1), PredicateFalse);
  }
  EXPECT_NO_THROW(prove_diameter(Graph::complete(4), IdAssignment::identity(4), 1));
  EXPECT_THROW(prove_diameter(Graph::path(2), IdAssignment::identity(2), 0), InvalidArgument);
}

TEST(Diameter, ClampedTablesAreRejected) {
  Instance inst = plain(Graph::cycle(5));
  const auto layout = DiameterLayout::for_instance(5, 5, 1);
  std::vector<Certificate> certs;
  for (const auto& c : build_diameter_certs(inst.graph, inst.ids, 1)) {
    BitString b;
    encode_diameter(c, layout, b);
    certs.push_back(b);
  }
  auto v = run_local(DiameterVerifier(5, 5, 1), inst, certs);
  EXPECT_FALSE(v.accepted());
  EXPECT_TRUE(has_step(v, "table-bfs"));
}

TEST(Diameter, TableChecks) {
  Instance inst = plain(Graph::path(3));
  const auto layout = DiameterLayout::for_instance(3, 3, 3);
  auto encode_all = [&](const std::vector<DiameterCert>& cs) {
    std::vector<Certificate> out;
    for (const auto& c : cs) {
      BitString b;
      encode_diameter(c, layout, b);
      out.push_back(b);
    }
    return out;
  };
  auto honest = build_diameter_certs(inst.graph, inst.ids, 3);
  DiameterVerifier verifier(3, 3, 3);
  EXPECT_TRUE(run_local(verifier, inst, encode_all(honest)).accepted());

  auto zero = honest;
  zero[0].distance_table[1] = 0;
  EXPECT_EQ(run_local(verifier, inst, encode_all(zero)).decisions[0].step, "table-anchor");

  auto far = honest;
  far[0].distance_table[2] = 3;
  EXPECT_EQ(run_local(verifier, inst, encode_all(far)).decisions[0].step, "table-bfs");

  DiameterVerifier tight(3, 3, 1);
  auto tight_certs = build_diameter_certs(inst.graph, inst.ids, 1);
  tight_certs[0].distance_table[2] = 1;
  const auto tight_layout = DiameterLayout::for_instance(3, 3, 1);
  std::vector<Certificate> certs;
  for (const auto& c : tight_certs) {
    BitString b;
    encode_diameter(c, tight_layout, b);
    certs.push_back(b);
  }
  auto v = run_local(tight, inst, certs);
  EXPECT_FALSE(v.accepted());
}

TEST(Diameter, AgreesWithOracleOnRandomGraphs) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 15;
    Graph g = random_connected_graph(n, 0.25, rng);
    IdAssignment ids = random_ids(n, 4 * n, rng);
    const std::size_t diam = oracle_diameter(g);
    for (std::uint64_t l : {1u, 2u, 3u}) {
      try {
        auto certs = prove_diameter(g, ids, l);
        EXPECT_LE(diam, l);
        Instance inst{g, ids, std::nullopt};
        EXPECT_TRUE(run_local(DiameterVerifier(n, ids.max_id(), l), inst, certs).accepted());
      } catch (const PredicateFalse&) {
        EXPECT_GT(diam, l);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Distinctness

TEST(Distinctness, LayoutAndHonest) {
  Instance inst = plain(Graph::path(3), std::vector<InputValue>{3, 1, 2});
  auto certs = prove_distinctness(inst);
  // 7 seed bits for H_{3,3} and a 9-bit permutation certificate.
  EXPECT_EQ(DistinctnessLayout::for_instance(3, 3, 3).bits(), 16u);
  EXPECT_EQ(max_certificate_bits(certs), 16u);
  EXPECT_TRUE(run_local(DistinctnessVerifier(3, 3, 3), inst, certs).accepted());
}

TEST(Distinctness, RepeatedInputs) {
  Instance inst = plain(Graph::path(3), std::vector<InputValue>{1, 1, 2});
  EXPECT_THROW(prove_distinctness(inst), PredicateFalse);
  Instance yes = plain(Graph::path(3), std::vector<InputValue>{1, 3, 2});
  auto certs = prove_distinctness(yes);
  // Same certificates with a duplicated input.
  auto v = run_local(DistinctnessVerifier(3, 3, 3), inst, certs);
  EXPECT_FALSE(v.accepted());
}

TEST(Distinctness, LargeInputRange) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    Graph g = random_connected_graph(n, 0.3, rng);
    IdAssignment ids = random_ids(n, n * n * n, rng);
    std::vector<InputValue> inputs(ids.values().begin(), ids.values().end());
    std::shuffle(inputs.begin(), inputs.end(), rng);
    Instance inst{g, ids, InputAssignment(inputs, 1u << 20)};
    auto certs = prove_distinctness(inst);
    DistinctnessVerifier verifier(n, ids.max_id(), 1u << 20);
    EXPECT_EQ(max_certificate_bits(certs), verifier.layout().bits());
    EXPECT_TRUE(run_local(verifier, inst, certs).accepted());
  }
}

TEST(Distinctness, RejectionLabels) {
  Instance inst = plain(Graph::path(2), std::vector<InputValue>{2, 1});
  auto certs = prove_distinctness(inst);
  DistinctnessVerifier verifier(2, 2, 2);
  ASSERT_TRUE(run_local(verifier, inst, certs).accepted());

  Instance no_inputs = plain(Graph::path(2));
  EXPECT_EQ(run_local(verifier, no_inputs, certs).decisions[0].step, "input");

  auto short_certs = certs;
  short_certs[1].push_back(true);
  EXPECT_EQ(run_local(verifier, inst, short_certs).decisions[1].step, "decode");

  // H_{2,2} has 3 members in 2 bits; index 3 names none.
  auto bad_seed = certs;
  bad_seed[0].set(0, true);
  bad_seed[0].set(1, true);
  EXPECT_EQ(run_local(verifier, inst, bad_seed).decisions[0].step, "seed");
  EXPECT_EQ(run_local(verifier, inst, bad_seed).decisions[1].step, "seed");
}

TEST(Distinctness, UndefinedFamily) {
  auto layout = DistinctnessLayout::for_instance(3, 3, 2);
  EXPECT_FALSE(layout.family.has_value());
  EXPECT_THROW(layout.bits(), CapacityError);
  Instance inst = plain(Graph::path(3), std::vector<InputValue>{1, 2, 2});
  std::vector<Certificate> certs(3);
  EXPECT_EQ(run_local(DistinctnessVerifier(3, 3, 2), inst, certs).decisions[0].step, "decode");
}

// ---------------------------------------------------------------------------
// Homomorphism (global)

TEST(HomGlobal, SizesAndRoundTrip) {
  const auto range = IdentifierRange::fixed(4);
  EXPECT_EQ(hom_global_bits(4, range, 2), 64u + 9u + 4u);
  EXPECT_EQ(target_entry_bits(2), 1u);
  EXPECT_EQ(target_entry_bits(3), 2u);
  EXPECT_EQ(target_entry_bits(1), 0u);
  HomomorphismGlobalCert c{4, 17, {1, 0, 0, 1}};
  auto bits = encode_hom_global(c, range, 2);
  EXPECT_EQ(bits.size(), 77u);
  auto back = decode_hom_global(bits, range, 2);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->n, 4u);
  EXPECT_EQ(back->hash_seed, 17u);
  EXPECT_EQ(back->table, c.table);
  bits.push_back(false);
  EXPECT_FALSE(decode_hom_global(bits, range, 2).has_value());
}

TEST(HomGlobal, PowerRange) {
  // M = n^3 = 64 for n = 4.
  EXPECT_EQ(hom_global_bits(4, IdentifierRange::power(3), 2), 64u + seed_bit_length(4, 64) + 4u);
  EXPECT_THROW(hom_global_bits(1u << 30, IdentifierRange::power(3), 2), CapacityError);
}

TEST(HomGlobal, BipartiteAndColouring) {
  const Graph k2 = Graph::complete(2);
  const Graph k3 = Graph::complete(3);
  for (const char* name : {"c4.graph", "p3.graph", "tree20.graph"}) {
    auto lg = load_graph(name);
    Instance inst{lg.graph, lg.ids, std::nullopt};
    const auto range = IdentifierRange::fixed(lg.ids.max_id());
    auto cert = prove_hom_global(inst, k2, range);
    EXPECT_EQ(cert.size(), hom_global_bits(lg.graph.n(), range, 2));
    EXPECT_TRUE(run_global(HomomorphismVerifier(k2, range), inst, cert).accepted()) << name;
    auto phi = reconstruct_homomorphism(inst, cert, range, 2);
    ASSERT_TRUE(phi.has_value());
    EXPECT_TRUE(is_homomorphism(lg.graph, k2, *phi));
  }
  for (const char* name : {"c5.graph", "petersen.graph", "k3.graph"}) {
    auto lg = load_graph(name);
    Instance inst{lg.graph, lg.ids, std::nullopt};
    const auto range = IdentifierRange::fixed(lg.ids.max_id());
    EXPECT_THROW(prove_hom_global(inst, k2, range), PredicateFalse) << name;
    auto cert = prove_hom_global(inst, k3, range);
    EXPECT_TRUE(run_global(HomomorphismVerifier(k3, range), inst, cert).accepted()) << name;
  }
}

TEST(HomGlobal, RejectionLabels) {
  const Graph k3 = Graph::complete(3);
  const auto range = IdentifierRange::fixed(3);
  Instance inst = plain(Graph::path(3));
  HomomorphismVerifier verifier(k3, range);

  EXPECT_EQ(run_global(verifier, inst, BitString(10)).decisions[0].step, "decode");

  // n = 3, H_{3,3} has 96 members in 7 bits, L takes 3 x 2 bits.
  HomomorphismGlobalCert c{3, 1, {0, 1, 2}};
  auto good = encode_hom_global(c, range, 3);
  ASSERT_EQ(good.size(), 64u + 7u + 6u);

  auto bad_seed = good;
  for (std::size_t i = 64; i < 71; ++i) bad_seed.set(i, true);  // index 127
  EXPECT_EQ(run_global(verifier, inst, bad_seed).decisions[0].step, "seed");

  HomomorphismGlobalCert out_of_range{3, 1, {3, 3, 3}};
  EXPECT_EQ(run_global(verifier, inst, encode_hom_global(out_of_range, range, 3)).decisions[0].step,
            "entry");

  HomomorphismGlobalCert constant{3, 1, {1, 1, 1}};
  EXPECT_EQ(run_global(verifier, inst, encode_hom_global(constant, range, 3)).decisions[0].step,
            "edge");

  // n field 0: H_{0,3} is undefined.
  BitString zero_n(64);
  EXPECT_EQ(run_global(verifier, inst, zero_n).decisions[0].step, "decode");
}

TEST(HomGlobal, SmallerCountFieldStillYieldsAHomomorphism) {
  // C4 with ids 1..4 and M = 4: a certificate claiming n = 2 hashes into two
  // slots. Any accepted one still colours C4 properly.
  Instance inst = plain(Graph::cycle(4));
  const Graph k2 = Graph::complete(2);
  const auto range = IdentifierRange::fixed(4);
  HomomorphismVerifier verifier(k2, range);
  const std::uint64_t size = family_size(2, 4);
  std::size_t accepted = 0;
  for (std::uint64_t seed = 1; seed <= size; ++seed) {
    for (TargetVertex a = 0; a < 2; ++a) {
      HomomorphismGlobalCert c{2, seed, {a, 1 - a}};
      auto bits = encode_hom_global(c, range, 2);
      if (!run_global(verifier, inst, bits).accepted()) continue;
      ++accepted;
      auto phi = reconstruct_homomorphism(inst, bits, range, 2);
      ASSERT_TRUE(phi.has_value());
      EXPECT_TRUE(is_homomorphism(inst.graph, k2, *phi));
    }
  }
  EXPECT_GT(accepted, 0u);
}

TEST(FindHomomorphism, AgreesWithOracle) {
  Rng rng(13);
  const Graph targets[] = {Graph::complete(2), Graph::complete(3), Graph::cycle(5)};
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    Graph g = random_connected_graph(n, 0.3, rng);
    for (const auto& h : targets) {
      auto mine = find_homomorphism(g, h);
      auto theirs = oracle_homomorphism(g, h);
      EXPECT_EQ(mine.has_value(), theirs.has_value());
      if (mine) {
        EXPECT_TRUE(is_homomorphism(g, h, *mine));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Decisions depend on the neighbour set, not on its order.

template <typename Verifier>
void expect_order_independent(const Verifier& verifier, const Instance& inst,
                              const std::vector<Certificate>& certs, Rng& rng) {
  for (Vertex v = 0; v < inst.n(); ++v) {
    LocalView view = local_view(inst, certs, v);
    const Decision base = verifier(view);
    for (int k = 0; k < 4; ++k) {
      std::shuffle(view.neighbors.begin(), view.neighbors.end(), rng);
      EXPECT_EQ(verifier(view), base) << "vertex " << v;
    }
  }
}

void flip_some(std::vector<Certificate>& certs, Rng& rng) {
  const std::size_t flips = 1 + rng() % 3;
  for (std::size_t i = 0; i < flips; ++i) {
    auto& c = certs[rng() % certs.size()];
    if (c.size() > 0) c.flip(rng() % c.size());
  }
}

TEST(NeighbourOrder, LocalVerifiersIgnoreIt) {
  Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    Graph g = random_connected_graph(n, 0.3, rng);
    IdAssignment ids = random_ids(n, n * n, rng);
    auto dfs = prove_dfs(g, ids);
    Instance with_renaming{g, ids, renaming_inputs(dfs.renaming)};
    Instance bare{g, ids, std::nullopt};

    std::vector<std::vector<Certificate>> variants{dfs.certs};
    for (int k = 0; k < 3; ++k) {
      variants.push_back(dfs.certs);
      flip_some(variants.back(), rng);
    }
    for (const auto& c : variants) {
      expect_order_independent(DfsRenamingVerifier(n, ids.max_id()), with_renaming, c, rng);
    }

    auto perm = prove_perm(g, ids, dfs.renaming);
    flip_some(perm, rng);
    expect_order_independent(PermutationVerifier(n, ids.max_id()), with_renaming, perm, rng);

    if (oracle_clique_free(g, 4)) {
      auto kf = prove_clique_free(g, ids, 4);
      expect_order_independent(CliqueFreeVerifier(n, ids.max_id(), 4), bare, kf, rng);
      flip_some(kf, rng);
      expect_order_independent(CliqueFreeVerifier(n, ids.max_id(), 4), bare, kf, rng);
    }
    auto diam = prove_diameter(g, ids, n);
    flip_some(diam, rng);
    expect_order_independent(DiameterVerifier(n, ids.max_id(), n), bare, diam, rng);

    auto dist = prove_distinctness(with_renaming);
    flip_some(dist, rng);
    expect_order_independent(DistinctnessVerifier(n, ids.max_id(), n), with_renaming, dist, rng);
  }
}

TEST(NeighbourOrder, GlobalVerifierIgnoresIt) {
  Rng rng(15);
  const Graph k3 = Graph::complete(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    Graph g = random_connected_graph(n, 0.3, rng);
    IdAssignment ids = random_ids(n, n * n, rng);
    Instance inst{g, ids, std::nullopt};
    if (!oracle_homomorphism(g, k3)) continue;
    const auto range = IdentifierRange::fixed(ids.max_id());
    auto cert = prove_hom_global(inst, k3, range);
    cert.flip(64 + rng() % (cert.size() - 64));
    HomomorphismVerifier verifier(k3, range);
    for (Vertex v = 0; v < n; ++v) {
      GlobalView view = global_view(inst, cert, v);
      const Decision base = verifier(view);
      std::shuffle(view.neighbors.begin(), view.neighbors.end(), rng);
      EXPECT_EQ(verifier(view), base);
    }
  }
}

}  // namespace
}  // namespace lcert
