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

#include <algorithm>

#include "lcert/error.hpp"

namespace lcert {

bool Verdict::accepted() const {
  return std::all_of(decisions.begin(), decisions.end(),
                     [](const Decision& d) { return d.accepted; });
}

std::optional<Vertex> Verdict::first_rejecting() const {
  for (Vertex v = 0; v < decisions.size(); ++v) {
    if (!decisions[v].accepted) return v;
  }
  return std::nullopt;
}

std::size_t Verdict::rejecting_count() const {
  return static_cast<std::size_t>(std::count_if(
      decisions.begin(), decisions.end(), [](const Decision& d) { return !d.accepted; }));
}

LocalView local_view(const Instance& inst, std::span<const Certificate> certs, Vertex v) {
  LocalView view;
  view.own_id = inst.ids[v];
  view.own_input = inst.input(v);
  view.own_cert = certs[v];
  auto nb = inst.graph.neighbors(v);
  view.neighbors.reserve(nb.size());
  for (Vertex w : nb) view.neighbors.push_back({inst.ids[w], inst.input(w), certs[w]});
  std::sort(view.neighbors.begin(), view.neighbors.end(),
            [](const NeighborTuple& a, const NeighborTuple& b) { return a.id < b.id; });
  return view;
}

GlobalView global_view(const Instance& inst, const Certificate& cert, Vertex v) {
  GlobalView view;
  view.own_id = inst.ids[v];
  view.own_input = inst.input(v);
  view.global_cert = cert;
  auto nb = inst.graph.neighbors(v);
  view.neighbors.reserve(nb.size());
  for (Vertex w : nb) view.neighbors.push_back({inst.ids[w], inst.input(w)});
  std::sort(view.neighbors.begin(), view.neighbors.end(),
            [](const GlobalNeighbor& a, const GlobalNeighbor& b) { return a.id < b.id; });
  return view;
}

std::vector<LocalView> assemble_local_views(const Instance& inst,
                                            std::span<const Certificate> certs) {
  if (certs.size() != inst.n()) {
    throw InvalidArgument("expected " + std::to_string(inst.n()) + " certificates, got " +
                          std::to_string(certs.size()));
  }
  std::vector<LocalView> views;
  views.reserve(inst.n());
  for (Vertex v = 0; v < inst.n(); ++v) views.push_back(local_view(inst, certs, v));
  return views;
}

Verdict run_local(const LocalVerifier& verifier, const Instance& inst,
                  std::span<const Certificate> certs) {
  if (certs.size() != inst.n()) {
    throw InvalidArgument("expected " + std::to_string(inst.n()) + " certificates, got " +
                          std::to_string(certs.size()));
  }
  Verdict out;
  out.decisions.reserve(inst.n());
  for (Vertex v = 0; v < inst.n(); ++v) out.decisions.push_back(verifier(local_view(inst, certs, v)));
  return out;
}

Verdict run_global(const GlobalVerifier& verifier, const Instance& inst, const Certificate& cert) {
  Verdict out;
  out.decisions.reserve(inst.n());
  for (Vertex v = 0; v < inst.n(); ++v) out.decisions.push_back(verifier(global_view(inst, cert, v)));
  return out;
}

std::size_t max_certificate_bits(std::span<const Certificate> certs) {
  std::size_t best = 0;
  for (const auto& c : certs) best = std::max(best, c.size());
  return best;
}

std::optional<std::uint64_t> IdentifierRange::at(std::uint64_t n) const {
  if (exponent_ == 0) return fixed_;
  unsigned __int128 m = 1;
  for (unsigned i = 0; i < exponent_; ++i) {
    m *= n;
    if (m > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(m);
}

}  // namespace lcert
