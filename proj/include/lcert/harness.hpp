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

// Completeness and soundness drivers.
//
// Every scheme is wrapped in a Scheme adapter that knows its oracle, its
// honest prover, an honest-shaped forger for NO instances and a list of
// structured adversaries. fuzz_soundness and exhaustive_soundness only talk
// to adapters.
//
// Summary file format (one `key=value` per line, keys fixed):
//
//   scheme=<name>
//   instance=<description>
//   strategies=<comma separated>
//   trials=<count>
//   accepting=<count>
//   reconstruction_violations=<count>
//   no_instance=<0|1>
//   trials.<strategy>=<count>
//   reject.<step>=<number of rejecting vertices over all trials>

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcert/cert_model.hpp"
#include "lcert/graph.hpp"
#include "lcert/hashing.hpp"

namespace lcert {

using Rng = std::mt19937_64;

// Produces one certificate assignment (one per vertex, or a single global
// certificate) for the instance.
struct Adversary {
  std::string name;
  std::function<std::vector<Certificate>(const Instance&, Rng&)> generate;
};

struct SchemeParams {
  std::size_t clique_size = 3;      // kfree
  std::uint64_t diameter_bound = 2;  // diameter
  std::optional<Graph> target;       // hom-global; K2 for bipartite-global
  // hom-global identifier range; the instance's declared M when absent.
  std::optional<IdentifierRange> range;
  SeedSearchOptions seeds;
};

class Scheme {
 public:
  virtual ~Scheme() = default;

  virtual std::string_view name() const = 0;
  virtual bool global() const = 0;
  // Ground truth from the oracles.
  virtual bool holds(const Instance& inst) const = 0;

  // Exact certificate length for the instance (per vertex, or the global one).
  virtual std::size_t certificate_bits(const Instance& inst) const = 0;

  // Honest prover. Throws PredicateFalse or CapacityError.
  virtual std::vector<Certificate> prove(const Instance& inst) const = 0;
  // Certificates shaped like the honest ones, for any instance.
  virtual std::vector<Certificate> forge(const Instance& inst) const = 0;
  virtual std::vector<Adversary> adversaries() const = 0;

  virtual Decision decide(const Instance& inst, std::span<const Certificate> certs,
                          Vertex v) const = 0;
  virtual Verdict verify(const Instance& inst, std::span<const Certificate> certs) const;

  // Post-condition of an all-accept run; the reason when it fails.
  virtual std::optional<std::string> check_accepted(const Instance& inst,
                                                    std::span<const Certificate> certs) const;

  // Certificate space for exhaustive search: blocks of assignments with a
  // fixed prefix (global only) and free remaining bits.
  struct Block {
    BitString prefix;
    std::size_t free_bits = 0;
  };
  virtual std::vector<Block> exhaustive_blocks(const Instance& inst) const;
};

// Names: dfs-renaming, permutation, kfree, diameter, distinctness,
// hom-global, bipartite-global. Throws InvalidArgument for unknown names or
// missing parameters.
std::unique_ptr<Scheme> make_scheme(std::string_view name, const SchemeParams& params = {});
std::vector<std::string> scheme_names();

enum class Strategy { kMutation, kRandom, kStructured, kExhaustive };
std::string_view strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view s);

struct Counterexample {
  std::string strategy;
  std::vector<Certificate> certs;
};

struct SoundnessReport {
  std::string scheme;
  std::string instance;
  std::vector<Strategy> strategies;
  bool no_instance = true;
  std::uint64_t trials = 0;
  std::uint64_t accepting = 0;
  std::uint64_t reconstruction_violations = 0;
  std::map<std::string, std::uint64_t> trials_by_strategy;
  std::map<std::string, std::uint64_t> rejections_by_step;
  // First few accepting assignments.
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> violation_messages;

  // Soundness bug: an all-accept run on a NO instance, or a failed
  // post-condition on any instance.
  bool clean() const { return (!no_instance || accepting == 0) && reconstruction_violations == 0; }

  std::string to_text() const;
  std::string to_summary() const;
};

inline constexpr std::uint64_t kDefaultFuzzSeed = 0x6c63657274ULL;
inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 24;

struct FuzzOptions {
  std::uint64_t budget = 100000;
  std::vector<Strategy> strategies = {Strategy::kMutation, Strategy::kRandom, Strategy::kStructured};
  std::uint64_t seed = kDefaultFuzzSeed;
  unsigned jobs = 1;
  // Refuse YES instances.
  bool require_no_instance = true;
  std::string description;
};

// Trials are split round-robin over the strategies; trial t draws from an
// RNG seeded by (seed, t), so results do not depend on `jobs`.
// Throws InvalidArgument on a YES instance (when guarded) or a zero budget.
SoundnessReport fuzz_soundness(const Scheme& scheme, const Instance& inst,
                               const FuzzOptions& options = {});

struct ExhaustiveOptions {
  bool require_no_instance = true;
  std::uint64_t limit = kExhaustiveLimit;
  std::string description;
};

// Every assignment of the exact certificate length. Throws CapacityError
// when the space exceeds options.limit.
SoundnessReport exhaustive_soundness(const Scheme& scheme, const Instance& inst,
                                     const ExhaustiveOptions& options = {});

// Random connected graph: a random tree plus each other edge with
// probability p.
Graph random_connected_graph(std::size_t n, double p, Rng& rng);
// n distinct identifiers drawn uniformly from 1..max_id.
IdAssignment random_ids(std::size_t n, std::uint64_t max_id, Rng& rng);
// Random spanning tree of g with a random root, children sorted by id.
SpanningTree random_spanning_tree(const Graph& g, const IdAssignment& ids, Rng& rng);

}  // namespace lcert
