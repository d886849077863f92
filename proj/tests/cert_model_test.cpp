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
#include "lcert/cert_model.hpp"

#include <gtest/gtest.h>

#include "lcert/error.hpp"
#include "lcert/renaming.hpp"
#include "test_support.hpp"

namespace lcert {
namespace {

using testing::make_instance;
using testing::plain;

std::vector<Certificate> labelled_certs(std::size_t n) {
  std::vector<Certificate> certs;
  for (std::size_t v = 0; v < n; ++v) {
    BitString b;
    b.append(v, 8);
    certs.push_back(b);
  }
  return certs;
}

TEST(LocalView, EdgeSeesOnlyItsNeighbour) {
  auto inst = make_instance(Graph::path(2), {40, 7}, 50, std::vector<InputValue>{3, 5});
  auto certs = labelled_certs(2);
  auto views = assemble_local_views(inst, certs);
  ASSERT_EQ(views.size(), 2u);
  EXPECT_EQ(views[0].own_id, 40u);
  EXPECT_EQ(views[0].own_input, 3u);
  EXPECT_EQ(views[0].own_cert, certs[0]);
  ASSERT_EQ(views[0].neighbors.size(), 1u);
  EXPECT_EQ(views[0].neighbors[0].id, 7u);
  EXPECT_EQ(views[0].neighbors[0].input, 5u);
  EXPECT_EQ(views[0].neighbors[0].cert, certs[1]);
}

TEST(LocalView, SingleVertexHasNoNeighbours) {
  auto inst = plain(Graph::path(1));
  auto views = assemble_local_views(inst, labelled_certs(1));
  EXPECT_TRUE(views[0].neighbors.empty());
  EXPECT_FALSE(views[0].own_input.has_value());
}

TEST(LocalView, StarDegrees) {
  auto inst = make_instance(Graph::star(3), {9, 3, 1, 6}, 9);
  auto views = assemble_local_views(inst, labelled_certs(4));
  EXPECT_EQ(views[0].neighbors.size(), 3u);
  for (int leaf = 1; leaf <= 3; ++leaf) EXPECT_EQ(views[leaf].neighbors.size(), 1u);
  // Listed as a set: by increasing identifier.
  EXPECT_EQ(views[0].neighbors[0].id, 1u);
  EXPECT_EQ(views[0].neighbors[1].id, 3u);
  EXPECT_EQ(views[0].neighbors[2].id, 6u);
}

TEST(LocalView, MissingCertificateIsAnError) {
  auto inst = plain(Graph::path(3));
  EXPECT_THROW(assemble_local_views(inst, labelled_certs(2)), InvalidArgument);
  EXPECT_THROW(run_local([](const LocalView&) { return Decision::accept(); }, inst,
                         labelled_certs(4)),
               InvalidArgument);
}

TEST(RunLocal, AlwaysAccept) {
  auto inst = plain(Graph::cycle(5));
  auto v = run_local([](const LocalView&) { return Decision::accept(); }, inst, labelled_certs(5));
  EXPECT_TRUE(v.accepted());
  EXPECT_EQ(v.rejecting_count(), 0u);
  EXPECT_FALSE(v.first_rejecting().has_value());
}

TEST(RunLocal, DegreeRule) {
  auto inst = plain(Graph::path(3));
  auto v = run_local(
      [](const LocalView& view) {
        return view.neighbors.size() >= 2 ? Decision::reject("degree") : Decision::accept();
      },
      inst, labelled_certs(3));
  EXPECT_FALSE(v.accepted());
  EXPECT_EQ(v.rejecting_count(), 1u);
  EXPECT_EQ(v.first_rejecting(), Vertex{1});
  EXPECT_EQ(v.decisions[1].step, "degree");
}

TEST(RunLocal, HonestDfsRenaming) {
  auto inst = plain(Graph::cycle(6));
  auto proof = prove_dfs(inst.graph, inst.ids);
  inst.inputs = renaming_inputs(proof.renaming);
  EXPECT_TRUE(run_local(DfsRenamingVerifier(6, 6), inst, proof.certs).accepted());
}

TEST(RunGlobal, AlwaysAcceptAndViews) {
  auto inst = make_instance(Graph::path(3), {2, 3, 1}, 3);
  BitString c = BitString::from_string("101");
  std::size_t calls = 0;
  auto v = run_global(
      [&](const GlobalView& view) {
        ++calls;
        EXPECT_EQ(view.global_cert, c);
        return Decision::accept();
      },
      inst, c);
  EXPECT_TRUE(v.accepted());
  EXPECT_EQ(calls, 3u);
  auto view = global_view(inst, c, 1);
  ASSERT_EQ(view.neighbors.size(), 2u);
  EXPECT_EQ(view.neighbors[0].id, 1u);
  EXPECT_EQ(view.neighbors[1].id, 2u);
}

TEST(Sizes, MaxCertificateBits) {
  std::vector<Certificate> empty(4);
  EXPECT_EQ(max_certificate_bits(empty), 0u);
  std::vector<Certificate> mixed{BitString(3), BitString(11), BitString(0)};
  EXPECT_EQ(max_certificate_bits(mixed), 11u);
  EXPECT_EQ(max_certificate_bits(std::vector<Certificate>{}), 0u);
}

TEST(Sizes, ReferenceTreeLayouts) {
  auto lg = testing::load_graph("tree20.graph");
  auto proof = prove_dfs(lg.graph, lg.ids);
  EXPECT_EQ(max_certificate_bits(proof.certs), 36u);
  auto perm = prove_perm(lg.graph, lg.ids, proof.renaming);
  EXPECT_EQ(max_certificate_bits(perm), 51u);
}

TEST(IdentifierRange, FixedAndPower) {
  EXPECT_EQ(IdentifierRange::fixed(77).at(5), 77u);
  EXPECT_EQ(IdentifierRange::power(3).at(5), 125u);
  EXPECT_EQ(IdentifierRange::power(1).at(9), 9u);
  EXPECT_EQ(IdentifierRange::power(2).at(std::uint64_t{1} << 32), std::nullopt);
  EXPECT_EQ(IdentifierRange::power(2).at((std::uint64_t{1} << 32) - 1),
            ((std::uint64_t{1} << 32) - 1) * ((std::uint64_t{1} << 32) - 1));
}

}  // namespace
}  // namespace lcert
