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

// The certification framework: what a node sees, how a verifier is run over
// every node, and how certificate sizes are accounted.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lcert/bits.hpp"
#include "lcert/graph.hpp"

namespace lcert {

using Certificate = BitString;

// A graph with identifiers and, for properties of graphs with inputs, an
// input function.
struct Instance {
  Graph graph;
  IdAssignment ids;
  std::optional<InputAssignment> inputs;

  std::size_t n() const { return graph.n(); }
  std::optional<InputValue> input(Vertex v) const {
    if (!inputs) return std::nullopt;
    return (*inputs)[v];
  }
};

struct NeighborTuple {
  Identifier id = 0;
  std::optional<InputValue> input;
  Certificate cert;
};

// Everything a node may use under local certification. Neighbours form a set:
// they are listed by increasing identifier and carry no vertex index.
struct LocalView {
  Identifier own_id = 0;
  std::optional<InputValue> own_input;
  Certificate own_cert;
  std::vector<NeighborTuple> neighbors;
};

struct GlobalNeighbor {
  Identifier id = 0;
  std::optional<InputValue> input;
};

// Everything a node may use under global certification: the one shared
// certificate and the identifiers/inputs of its neighbours.
struct GlobalView {
  Identifier own_id = 0;
  std::optional<InputValue> own_input;
  Certificate global_cert;
  std::vector<GlobalNeighbor> neighbors;
};

// A node's decision. `step` labels the verification step that rejected
// ("step-ii", "decode", ...); it is empty on accept and carries no meaning
// beyond diagnostics.
struct Decision {
  bool accepted = true;
  std::string_view step;

  static Decision accept() { return {true, {}}; }
  static Decision reject(std::string_view step) { return {false, step}; }

  friend bool operator==(const Decision&, const Decision&) = default;
};

struct Verdict {
  std::vector<Decision> decisions;

  // The instance is accepted iff every vertex accepts.
  bool accepted() const;
  std::optional<Vertex> first_rejecting() const;
  std::size_t rejecting_count() const;
};

using LocalVerifier = std::function<Decision(const LocalView&)>;
using GlobalVerifier = std::function<Decision(const GlobalView&)>;

LocalView local_view(const Instance& inst, std::span<const Certificate> certs, Vertex v);
GlobalView global_view(const Instance& inst, const Certificate& cert, Vertex v);

// Throws InvalidArgument if certs does not hold one certificate per vertex.
std::vector<LocalView> assemble_local_views(const Instance& inst,
                                            std::span<const Certificate> certs);

Verdict run_local(const LocalVerifier& verifier, const Instance& inst,
                  std::span<const Certificate> certs);
Verdict run_global(const GlobalVerifier& verifier, const Instance& inst, const Certificate& cert);

std::size_t max_certificate_bits(std::span<const Certificate> certs);

// The identifier range M as a function of n: either a declared constant or
// n^c. at() returns nullopt when n^c overflows 64 bits.
class IdentifierRange {
 public:
  static IdentifierRange fixed(std::uint64_t max_id) { return IdentifierRange(max_id, 0); }
  static IdentifierRange power(unsigned exponent) { return IdentifierRange(0, exponent); }

  std::optional<std::uint64_t> at(std::uint64_t n) const;
  bool is_fixed() const { return exponent_ == 0; }

 private:
  IdentifierRange(std::uint64_t m, unsigned c) : fixed_(m), exponent_(c) {}
  std::uint64_t fixed_;
  unsigned exponent_;
};

}  // namespace lcert
