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

#include <gtest/gtest.h>

#include <set>

#include "lcert/error.hpp"
#include "lcert/oracles.hpp"
#include "lcert/renaming.hpp"
#include "test_support.hpp"

namespace lcert {
namespace {

using testing::load_graph;
using testing::make_instance;
using testing::plain;

struct Case {
  std::string scheme;
  SchemeParams params;
  Instance yes;
  Instance no;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  out.push_back({"dfs-renaming", {}, plain(Graph::path(3), std::vector<InputValue>{2, 1, 3}),
                 plain(Graph::path(3), std::vector<InputValue>{1, 3, 2})});
  out.push_back({"permutation", {}, plain(Graph::path(3), std::vector<InputValue>{3, 1, 2}),
                 plain(Graph::path(3), std::vector<InputValue>{1, 1, 2})});
  out.push_back({"kfree", {}, plain(Graph::cycle(4)), plain(Graph::complete(3))});
  SchemeParams diam;
  diam.diameter_bound = 1;
  out.push_back({"diameter", diam, plain(Graph::complete(3)), plain(Graph::path(3))});
  out.push_back({"distinctness", {}, plain(Graph::path(3), std::vector<InputValue>{2, 3, 1}),
                 plain(Graph::path(3), std::vector<InputValue>{2, 3, 2})});
  out.push_back({"bipartite-global", {}, plain(Graph::cycle(4)), plain(Graph::cycle(3))});
  SchemeParams hom;
  hom.target = Graph::complete(3);
  out.push_back({"hom-global", hom, plain(Graph::cycle(5)), plain(Graph::complete(4))});
  return out;
}

TEST(Registry, NamesAndErrors) {
  const auto names = scheme_names();
  EXPECT_EQ(names.size(), 7u);
  SchemeParams p;
  p.target = Graph::complete(2);
  for (const auto& n : names) EXPECT_EQ(make_scheme(n, p)->name(), n);
  EXPECT_THROW(make_scheme("nope"), InvalidArgument);
  EXPECT_THROW(make_scheme("hom-global"), InvalidArgument);
  EXPECT_TRUE(make_scheme("bipartite-global")->global());
  EXPECT_FALSE(make_scheme("kfree")->global());
}

TEST(Registry, Strategies) {
  for (auto s : {Strategy::kMutation, Strategy::kRandom, Strategy::kStructured, Strategy::kExhaustive}) {
    EXPECT_EQ(parse_strategy(strategy_name(s)), s);
  }
  EXPECT_FALSE(parse_strategy("bogus").has_value());
}

TEST(Adapters, HonestRunsOnYesInstances) {
  for (const auto& c : cases()) {
    auto scheme = make_scheme(c.scheme, c.params);
    ASSERT_TRUE(scheme->holds(c.yes)) << c.scheme;
    ASSERT_FALSE(scheme->holds(c.no)) << c.scheme;
    auto certs = scheme->prove(c.yes);
    EXPECT_EQ(certs.size(), scheme->global() ? 1u : c.yes.n()) << c.scheme;
    for (const auto& cert : certs) EXPECT_EQ(cert.size(), scheme->certificate_bits(c.yes)) << c.scheme;
    auto verdict = scheme->verify(c.yes, certs);
    EXPECT_TRUE(verdict.accepted()) << c.scheme;
    for (Vertex v = 0; v < c.yes.n(); ++v) EXPECT_EQ(scheme->decide(c.yes, certs, v), verdict.decisions[v]);
    EXPECT_FALSE(scheme->check_accepted(c.yes, certs).has_value()) << c.scheme;
    EXPECT_THROW(scheme->prove(c.no), PredicateFalse) << c.scheme;
  }
}

TEST(Adapters, ForgersAndAdversariesHaveHonestShape) {
  Rng rng(1);
  for (const auto& c : cases()) {
    auto scheme = make_scheme(c.scheme, c.params);
    const std::size_t count = scheme->global() ? 1 : c.no.n();
    auto forged = scheme->forge(c.no);
    ASSERT_EQ(forged.size(), count) << c.scheme;
    for (const auto& cert : forged) EXPECT_EQ(cert.size(), scheme->certificate_bits(c.no)) << c.scheme;
    auto advs = scheme->adversaries();
    EXPECT_GE(advs.size(), 3u) << c.scheme;
    std::set<std::string> names;
    for (const auto& a : advs) {
      names.insert(a.name);
      for (int k = 0; k < 5; ++k) {
        auto certs = a.generate(c.no, rng);
        EXPECT_EQ(certs.size(), count) << c.scheme << "/" << a.name;
        EXPECT_FALSE(scheme->verify(c.no, certs).accepted()) << c.scheme << "/" << a.name;
      }
    }
    EXPECT_EQ(names.size(), advs.size()) << c.scheme;
  }
}

TEST(Fuzz, NoInstancesStayClean) {
  for (const auto& c : cases()) {
    auto scheme = make_scheme(c.scheme, c.params);
    FuzzOptions opt;
    opt.budget = 3000;
    opt.description = "unit";
    auto r = fuzz_soundness(*scheme, c.no, opt);
    EXPECT_EQ(r.trials, 3000u);
    EXPECT_EQ(r.accepting, 0u) << c.scheme << "\n" << r.to_text();
    EXPECT_TRUE(r.clean());
    EXPECT_EQ(r.trials_by_strategy.at("mutation"), 1000u);
    EXPECT_EQ(r.trials_by_strategy.at("random"), 1000u);
    EXPECT_EQ(r.trials_by_strategy.at("structured"), 1000u);
  }
}

TEST(Fuzz, YesInstancesAreRefusedUnlessAllowed) {
  auto c = cases()[0];
  auto scheme = make_scheme(c.scheme);
  EXPECT_THROW(fuzz_soundness(*scheme, c.yes), InvalidArgument);
  FuzzOptions opt;
  opt.budget = 200;
  opt.require_no_instance = false;
  auto r = fuzz_soundness(*scheme, c.yes, opt);
  EXPECT_FALSE(r.no_instance);
  EXPECT_TRUE(r.clean());
  opt.budget = 0;
  EXPECT_THROW(fuzz_soundness(*scheme, c.yes, opt), InvalidArgument);
  opt.budget = 10;
  opt.strategies = {Strategy::kExhaustive};
  EXPECT_THROW(fuzz_soundness(*scheme, c.yes, opt), InvalidArgument);
}

TEST(Fuzz, ResultsDoNotDependOnJobs) {
  auto c = cases()[1];
  auto scheme = make_scheme(c.scheme);
  FuzzOptions opt;
  opt.budget = 2000;
  auto one = fuzz_soundness(*scheme, c.no, opt);
  opt.jobs = 3;
  auto three = fuzz_soundness(*scheme, c.no, opt);
  EXPECT_EQ(one.to_summary(), three.to_summary());
  opt.seed = 99;
  auto other = fuzz_soundness(*scheme, c.no, opt);
  EXPECT_NE(one.rejections_by_step, other.rejections_by_step);
}

// A verifier that accepts everything must be caught.
class AcceptAll final : public Scheme {
 public:
  std::string_view name() const override { return "accept-all"; }
  bool global() const override { return false; }
  bool holds(const Instance&) const override { return false; }
  std::size_t certificate_bits(const Instance&) const override { return 2; }
  std::vector<Certificate> prove(const Instance&) const override { throw PredicateFalse("never"); }
  std::vector<Certificate> forge(const Instance& inst) const override {
    return std::vector<Certificate>(inst.n(), BitString(2));
  }
  std::vector<Adversary> adversaries() const override {
    return {{"zeros", [this](const Instance& inst, Rng&) { return forge(inst); }}};
  }
  Decision decide(const Instance&, std::span<const Certificate>, Vertex) const override {
    return Decision::accept();
  }
};

TEST(Fuzz, DetectsAnUnsoundVerifier) {
  AcceptAll scheme;
  Instance inst = plain(Graph::path(2));
  FuzzOptions opt;
  opt.budget = 30;
  auto r = fuzz_soundness(scheme, inst, opt);
  EXPECT_EQ(r.accepting, 30u);
  EXPECT_FALSE(r.clean());
  EXPECT_EQ(r.counterexamples.size(), 5u);
  EXPECT_NE(r.to_text().find("SOUNDNESS VIOLATION"), std::string::npos);

  auto e = exhaustive_soundness(scheme, inst);
  EXPECT_EQ(e.trials, 16u);
  EXPECT_EQ(e.accepting, 16u);
}

TEST(Exhaustive, PermutationOnTwoVertices) {
  auto scheme = make_scheme("permutation");
  Instance inst = make_instance(Graph::path(2), {1, 2}, 3, std::vector<InputValue>{1, 1});
  ASSERT_EQ(scheme->certificate_bits(inst), 8u);
  auto r = exhaustive_soundness(*scheme, inst);
  EXPECT_EQ(r.trials, 65536u);
  EXPECT_EQ(r.accepting, 0u);
  EXPECT_TRUE(r.clean());

  // Sanity: the same space contains accepting assignments for a YES instance.
  Instance yes = make_instance(Graph::path(2), {1, 2}, 3, std::vector<InputValue>{2, 1});
  ExhaustiveOptions opt;
  opt.require_no_instance = false;
  auto y = exhaustive_soundness(*scheme, yes, opt);
  EXPECT_GT(y.accepting, 0u);
  EXPECT_FALSE(y.no_instance);
}

TEST(Exhaustive, RangeCheckIsNeeded) {
  // Inputs (3,3) with M = 3 exercise the root-cycle forgery.
  auto scheme = make_scheme("permutation");
  Instance inst = make_instance(Graph::path(2), {1, 2}, 3, std::vector<InputValue>{3, 3});
  auto r = exhaustive_soundness(*scheme, inst);
  EXPECT_EQ(r.accepting, 0u);
  EXPECT_GT(r.rejections_by_step.at("step-iv"), 0u);
}

TEST(Exhaustive, GlobalBipartiteOnATriangle) {
  auto scheme = make_scheme("bipartite-global");
  Instance inst = plain(Graph::cycle(3));
  ASSERT_EQ(scheme->certificate_bits(inst), 64u + 7u + 3u);
  auto blocks = scheme->exhaustive_blocks(inst);
  EXPECT_EQ(blocks.size(), 5u);
  auto r = exhaustive_soundness(*scheme, inst);
  EXPECT_EQ(r.trials, 5u * 1024u);
  EXPECT_EQ(r.accepting, 0u);
  EXPECT_EQ(r.reconstruction_violations, 0u);

  Instance edge = plain(Graph::path(2));
  ExhaustiveOptions opt;
  opt.require_no_instance = false;
  auto y = exhaustive_soundness(*scheme, edge, opt);
  EXPECT_GT(y.accepting, 0u);
  EXPECT_EQ(y.reconstruction_violations, 0u);
}

TEST(Exhaustive, Limits) {
  auto scheme = make_scheme("permutation");
  Instance inst = make_instance(Graph::path(2), {1, 2}, 3, std::vector<InputValue>{1, 1});
  ExhaustiveOptions opt;
  opt.limit = 1000;
  EXPECT_THROW(exhaustive_soundness(*scheme, inst, opt), CapacityError);
  Instance big = plain(Graph::path(5), std::vector<InputValue>{1, 1, 2, 3, 4});
  EXPECT_THROW(exhaustive_soundness(*scheme, big), CapacityError);
}

TEST(Report, SummaryFormat) {
  SoundnessReport r;
  r.scheme = "kfree";
  r.instance = "k3";
  r.strategies = {Strategy::kMutation, Strategy::kRandom};
  r.trials = 10;
  r.trials_by_strategy = {{"mutation", 5}, {"random", 5}};
  r.rejections_by_step = {{"clique", 7}, {"decode", 12}};
  EXPECT_EQ(r.to_summary(),
            "scheme=kfree\ninstance=k3\nstrategies=mutation,random\ntrials=10\naccepting=0\n"
            "reconstruction_violations=0\nno_instance=1\ntrials.mutation=5\ntrials.random=5\n"
            "reject.clique=7\nreject.decode=12\n");
  EXPECT_TRUE(r.clean());
  r.accepting = 1;
  EXPECT_FALSE(r.clean());
  r.no_instance = false;
  EXPECT_TRUE(r.clean());
  r.reconstruction_violations = 1;
  EXPECT_FALSE(r.clean());
}

TEST(Generators, Shapes) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    Graph g = random_connected_graph(n, 0.2, rng);
    EXPECT_EQ(g.n(), n);
    EXPECT_GE(g.edge_count(), n - 1);
    IdAssignment ids = random_ids(n, 2 * n, rng);
    EXPECT_EQ(ids.max_id(), 2 * n);
    std::set<Identifier> seen(ids.values().begin(), ids.values().end());
    EXPECT_EQ(seen.size(), n);
    auto t = random_spanning_tree(g, ids, rng);
    EXPECT_EQ(t.parent[t.root], t.root);
    for (Vertex v = 0; v < n; ++v) {
      if (v != t.root) {
        EXPECT_TRUE(g.adjacent(v, t.parent[v]));
      }
    }
    EXPECT_TRUE(oracle_is_permutation(dfs_renaming(g, ids, t)));
  }
  EXPECT_EQ(random_connected_graph(6, 1.0, rng).edge_count(), 15u);
  EXPECT_EQ(random_connected_graph(6, 0.0, rng).edge_count(), 5u);
}

}  // namespace
}  // namespace lcert
