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
// lcert: prove, verify and fuzz local certification schemes.
//
// Exit status: 0 accept / clean, 1 rejection / soundness violation /
// property false (oracle), 2 usage or I/O error, 3 prover refused (the
// property does not hold), 4 capacity (hash-family cap, exhaustive space).

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcert/error.hpp"
#include "lcert/harness.hpp"
#include "lcert/io.hpp"
#include "lcert/oracles.hpp"
#include "lcert/renaming.hpp"
#include "lcert/schemes.hpp"

namespace {

using namespace lcert;

enum Exit { kAccept = 0, kReject = 1, kUsage = 2, kPredicateFalse = 3, kCapacity = 4 };

struct Config {
  std::string scheme;
  std::string graph;
  std::string inputs;
  std::string certs;
  std::string out;
  std::string write_inputs;
  std::string target;
  std::string report;
  std::string summary;
  std::string strategies = "mutation,random,structured";
  std::string flip_bit;
  std::optional<std::uint64_t> l;
  std::optional<std::uint64_t> m;
  std::optional<unsigned> id_exponent;
  std::uint64_t budget = 100000;
  std::uint64_t seed = kDefaultFuzzSeed;
  std::uint64_t limit = kExhaustiveLimit;
  std::uint64_t max_k = kDefaultMaxPerfectK;
  unsigned jobs = 1;
  bool allow_yes = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

bool is_hom(const std::string& s) { return s == "hom-global" || s == "bipartite-global"; }

SchemeParams params_for(const Config& c, const Instance& inst) {
  SchemeParams p;
  if (c.scheme == "kfree") p.clique_size = c.l.value_or(3);
  if (c.scheme == "diameter") p.diameter_bound = c.l.value_or(2);
  if (c.l && c.scheme != "kfree" && c.scheme != "diameter") {
    throw UsageError("--l applies to kfree and diameter only");
  }
  if (c.scheme == "hom-global") {
    if (c.target.empty()) throw UsageError("hom-global needs --H <graph file>");
    p.target = parse_graph(read_file(c.target)).graph;
  } else if (!c.target.empty()) {
    throw UsageError("--H applies to hom-global only");
  }
  if (c.id_exponent) {
    if (!is_hom(c.scheme)) throw UsageError("--id-exponent applies to the global schemes only");
    if (*c.id_exponent == 0) throw UsageError("--id-exponent must be at least 1");
    p.range = IdentifierRange::power(*c.id_exponent);
    auto max = p.range->at(inst.n());
    if (!max) throw CapacityError("n^c overflows 64 bits");
    for (auto id : inst.ids.values()) {
      if (id > *max) {
        throw UsageError("identifier " + std::to_string(id) + " exceeds n^c = " + std::to_string(*max));
      }
    }
  }
  if (c.m && c.scheme != "distinctness") throw UsageError("--m applies to distinctness only");
  p.seeds.max_k = c.max_k;
  p.seeds.jobs = c.jobs;
  return p;
}

Instance load_instance(const Config& c) {
  if (c.graph.empty()) throw UsageError("--graph is required");
  auto lg = parse_graph(read_file(c.graph));
  std::optional<InputAssignment> inputs;
  if (!c.inputs.empty()) inputs = parse_inputs(read_file(c.inputs), lg.ids, c.m);
  return Instance{std::move(lg.graph), std::move(lg.ids), std::move(inputs)};
}

void require_inputs(const Config& c, const Instance& inst) {
  const bool needs = c.scheme == "dfs-renaming" || c.scheme == "permutation" || c.scheme == "distinctness";
  if (needs && !inst.inputs) throw UsageError(c.scheme + " needs --inputs");
}

// Closed-form certificate length, written out term by term.
std::string size_formula(const Config& c, const Instance& inst, const SchemeParams& p) {
  const std::uint64_t n = inst.n();
  const std::uint64_t M = inst.ids.max_id();
  const unsigned wid = width_for(M);
  const unsigned wn = width_for(n);
  std::ostringstream f;
  if (c.scheme == "dfs-renaming") {
    f << "2*ceil(log2(M+1)) + 2*ceil(log2(n+1)) = 2*" << wid << " + 2*" << wn << " = "
      << 2 * wid + 2 * wn;
  } else if (c.scheme == "permutation") {
    f << "2*ceil(log2(M+1)) + ceil(log2(n+1)) + n = 2*" << wid << " + " << wn << " + " << n
      << " = " << 2 * wid + wn + n;
  } else if (c.scheme == "kfree") {
    f << "3*ceil(log2(n+1)) + 2*ceil(log2(M+1)) + n = 3*" << wn << " + 2*" << wid << " + " << n
      << " = " << 3 * wn + 2 * wid + n;
  } else if (c.scheme == "diameter") {
    const unsigned we = width_for(p.diameter_bound);
    f << "3*ceil(log2(n+1)) + 2*ceil(log2(M+1)) + n*ceil(log2(l+1)) = 3*" << wn << " + 2*" << wid
      << " + " << n << "*" << we << " = " << 3 * wn + 2 * wid + n * we;
  } else if (c.scheme == "distinctness") {
    const std::uint64_t m = inst.inputs->max_input();
    const unsigned ws = seed_bit_length(n, m);
    f << "ceil(log2(ceil(n*e^n*log2 m))) + 2*ceil(log2(M+1)) + ceil(log2(n+1)) + n = " << ws
      << " + 2*" << wid << " + " << wn << " + " << n << " = " << ws + 2 * wid + wn + n;
  } else {
    const IdentifierRange range = p.range.value_or(IdentifierRange::fixed(M));
    const std::uint64_t mm = *range.at(n);
    const unsigned ws = seed_bit_length(n, mm);
    const std::size_t hn = c.scheme == "bipartite-global" ? 2 : p.target->n();
    const unsigned we = target_entry_bits(hn);
    f << "64 + ceil(log2(ceil(n*e^n*log2 M))) + n*ceil(log2 |V(H)|) = 64 + " << ws << " + " << n
      << "*" << we << " = " << 64 + ws + n * we << "  (M = " << mm << ")";
  }
  return f.str();
}

void print_sizes(const Config& c, const Instance& inst, const SchemeParams& p, const Scheme& scheme,
                 std::span<const Certificate> certs) {
  std::size_t lo = certs.empty() ? 0 : certs[0].size();
  std::size_t hi = 0;
  for (const auto& x : certs) {
    lo = std::min(lo, x.size());
    hi = std::max(hi, x.size());
  }
  std::cout << "scheme: " << scheme.name() << '\n';
  std::cout << "nodes: " << inst.n() << "  M: " << inst.ids.max_id() << '\n';
  if (scheme.global()) {
    std::cout << "certificate: " << hi << " bits (global)\n";
  } else {
    std::cout << "certificate: " << hi << " bits/node (min " << lo << ")\n";
  }
  std::cout << "formula: " << size_formula(c, inst, p) << '\n';
}

std::vector<Strategy> parse_strategies(const std::string& text) {
  std::vector<Strategy> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto s = parse_strategy(tok);
    if (!s) throw UsageError("unknown strategy '" + tok + "'");
    out.push_back(*s);
  }
  if (out.empty()) throw UsageError("no strategy given");
  return out;
}

void apply_flip(const Config& c, const Instance& inst, CertificateFile& file) {
  if (c.flip_bit.empty()) return;
  std::size_t idx = 0;
  std::string bit = c.flip_bit;
  if (auto colon = c.flip_bit.find(':'); colon != std::string::npos) {
    if (file.global) throw UsageError("--flip-bit on a global certificate takes K only");
    const Identifier id = std::stoull(c.flip_bit.substr(0, colon));
    auto v = inst.ids.vertex_of(id);
    if (!v) throw UsageError("--flip-bit: unknown identifier " + std::to_string(id));
    idx = *v;
    bit = c.flip_bit.substr(colon + 1);
  } else if (!file.global) {
    throw UsageError("--flip-bit on local certificates takes ID:K");
  }
  const std::size_t k = std::stoull(bit);
  if (k >= file.certs[idx].size()) throw UsageError("--flip-bit: bit index out of range");
  file.certs[idx].flip(k);
}

int cmd_prove(const Config& c) {
  Instance inst = load_instance(c);
  const SchemeParams p = params_for(c, inst);
  auto scheme = make_scheme(c.scheme, p);
  if (c.out.empty()) throw UsageError("--out is required");
  std::vector<Certificate> certs;
  if (c.scheme == "dfs-renaming" && !inst.inputs) {
    auto proof = prove_dfs(inst.graph, inst.ids);
    certs = std::move(proof.certs);
    inst.inputs = renaming_inputs(proof.renaming);
    if (!c.write_inputs.empty()) write_file(c.write_inputs, format_inputs(inst.ids, proof.renaming));
  } else {
    if (!c.write_inputs.empty()) throw UsageError("--write-inputs applies to dfs-renaming without --inputs");
    require_inputs(c, inst);
    certs = scheme->prove(inst);
  }
  write_file(c.out, scheme->global() ? format_global_certificate(certs[0])
                                     : format_local_certificates(inst.ids, certs));
  print_sizes(c, inst, p, *scheme, certs);
  return kAccept;
}

int cmd_verify(const Config& c) {
  Instance inst = load_instance(c);
  const SchemeParams p = params_for(c, inst);
  auto scheme = make_scheme(c.scheme, p);
  require_inputs(c, inst);
  if (c.certs.empty()) throw UsageError("--certs is required");
  CertificateFile file = parse_certificates(read_file(c.certs), inst.ids);
  if (file.global != scheme->global()) {
    throw UsageError(std::string(c.scheme) + " expects " + (scheme->global() ? "a gcert line" : "cert lines"));
  }
  apply_flip(c, inst, file);
  const Verdict v = scheme->verify(inst, file.certs);
  for (Vertex u = 0; u < inst.n(); ++u) {
    const auto& d = v.decisions[u];
    std::cout << "node " << inst.ids[u] << ' ' << (d.accepted ? "accept" : "reject " + std::string(d.step))
              << '\n';
  }
  if (v.accepted()) {
    std::cout << "result: accept (" << inst.n() << "/" << inst.n() << " nodes)\n";
    if (auto bad = scheme->check_accepted(inst, file.certs)) {
      std::cout << "post-condition failed: " << *bad << '\n';
      return kReject;
    }
    return kAccept;
  }
  std::cout << "result: reject (" << v.rejecting_count() << "/" << inst.n() << " nodes reject)\n";
  return kReject;
}

int cmd_fuzz(const Config& c) {
  Instance inst = load_instance(c);
  const SchemeParams p = params_for(c, inst);
  auto scheme = make_scheme(c.scheme, p);
  require_inputs(c, inst);
  const auto strategies = parse_strategies(c.strategies);
  const bool exhaustive =
      std::find(strategies.begin(), strategies.end(), Strategy::kExhaustive) != strategies.end();
  if (exhaustive && strategies.size() != 1) throw UsageError("exhaustive cannot be combined with other strategies");
  if (!c.allow_yes && scheme->holds(inst)) {
    throw UsageError("instance satisfies the property; fuzzing needs a NO instance (--allow-yes to override)");
  }
  SoundnessReport r;
  if (exhaustive) {
    ExhaustiveOptions opt;
    opt.require_no_instance = !c.allow_yes;
    opt.limit = c.limit;
    opt.description = c.graph;
    r = exhaustive_soundness(*scheme, inst, opt);
  } else {
    if (c.budget == 0) throw UsageError("--budget must be positive");
    FuzzOptions opt;
    opt.budget = c.budget;
    opt.strategies = strategies;
    opt.seed = c.seed;
    opt.jobs = c.jobs;
    opt.require_no_instance = !c.allow_yes;
    opt.description = c.graph;
    r = fuzz_soundness(*scheme, inst, opt);
  }
  const std::string text = r.to_text();
  std::cout << text;
  if (!c.report.empty()) write_file(c.report, text);
  if (!c.summary.empty()) write_file(c.summary, r.to_summary());
  return r.clean() ? kAccept : kReject;
}

int cmd_oracle(const Config& c) {
  Instance inst = load_instance(c);
  const SchemeParams p = params_for(c, inst);
  auto scheme = make_scheme(c.scheme, p);
  require_inputs(c, inst);
  const bool holds = scheme->holds(inst);
  std::cout << "scheme: " << scheme->name() << '\n';
  if (c.scheme == "diameter") std::cout << "diameter: " << oracle_diameter(inst.graph) << '\n';
  if (is_hom(c.scheme)) {
    const Graph h = c.scheme == "bipartite-global" ? Graph::complete(2) : *p.target;
    if (auto phi = oracle_homomorphism(inst.graph, h)) {
      for (Vertex v = 0; v < inst.n(); ++v) std::cout << "map " << inst.ids[v] << ' ' << (*phi)[v] << '\n';
    }
  }
  std::cout << "holds: " << (holds ? "yes" : "no") << '\n';
  return holds ? kAccept : kReject;
}

int cmd_stats(const Config& c) {
  Instance inst = load_instance(c);
  const SchemeParams p = params_for(c, inst);
  auto scheme = make_scheme(c.scheme, p);
  require_inputs(c, inst);
  std::vector<Certificate> certs;
  if (!c.certs.empty()) {
    auto file = parse_certificates(read_file(c.certs), inst.ids);
    certs = std::move(file.certs);
  } else {
    certs.assign(scheme->global() ? 1 : inst.n(), BitString(scheme->certificate_bits(inst)));
  }
  print_sizes(c, inst, p, *scheme, certs);
  std::cout << "layout: " << scheme->certificate_bits(inst) << " bits\n";
  return kAccept;
}

void add_instance_options(CLI::App* sub, Config& c) {
  std::string names;
  for (const auto& n : scheme_names()) names += (names.empty() ? "" : ", ") + n;
  sub->add_option("--scheme", c.scheme, "Scheme: " + names)->required()->check(CLI::IsMember(scheme_names()));
  sub->add_option("--graph", c.graph, "Graph file (graph <n> <M>, e <id> <id>)")->required();
  sub->add_option("--inputs", c.inputs, "Input file (in <id> <value>): renamings or distinctness inputs");
  sub->add_option("--l", c.l, "Clique size for kfree (default 3), diameter bound for diameter (default 2)");
  sub->add_option("--m", c.m, "Input range m for distinctness (default: largest input)");
  sub->add_option("--H", c.target, "Target graph file for hom-global");
  sub->add_option("--id-exponent", c.id_exponent, "Global schemes: identifier range M = n^c instead of the declared M");
  sub->add_option("--max-k", c.max_k, "Largest n for which a perfect-hash seed is searched");
  sub->add_option("--jobs", c.jobs, "Worker threads for seed search and fuzzing");
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"lcert: local and global certification schemes"};
  app.require_subcommand(1);

  auto* prove = app.add_subcommand("prove", "Run the honest prover and write certificates");
  add_instance_options(prove, c);
  prove->add_option("--out", c.out, "Certificate file to write")->required();
  prove->add_option("--write-inputs", c.write_inputs, "dfs-renaming without --inputs: write the DFS renaming here");

  auto* verify = app.add_subcommand("verify", "Run every node's verifier on a certificate file");
  add_instance_options(verify, c);
  verify->add_option("--certs", c.certs, "Certificate file")->required();
  verify->add_option("--flip-bit", c.flip_bit, "Debug: flip bit K of node ID's certificate (ID:K, or K for global)");

  auto* fuzz = app.add_subcommand("fuzz", "Search for accepting certificates on a NO instance");
  add_instance_options(fuzz, c);
  fuzz->add_option("--budget", c.budget, "Number of trials");
  fuzz->add_option("--seed", c.seed, "Random seed");
  fuzz->add_option("--strategies", c.strategies, "Comma list of mutation, random, structured; or exhaustive");
  fuzz->add_option("--limit", c.limit, "Largest certificate space for exhaustive search");
  fuzz->add_option("--report", c.report, "Write the text report here");
  fuzz->add_option("--summary", c.summary, "Write the key=value summary here");
  fuzz->add_flag("--allow-yes", c.allow_yes, "Allow instances that satisfy the property");

  auto* oracle = app.add_subcommand("oracle", "Evaluate the property centrally (exit 0 iff it holds)");
  add_instance_options(oracle, c);

  auto* stats = app.add_subcommand("stats", "Certificate sizes against the closed-form lengths");
  add_instance_options(stats, c);
  stats->add_option("--certs", c.certs, "Measure this certificate file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kAccept : kUsage;
  }

  try {
    if (*prove) return cmd_prove(c);
    if (*verify) return cmd_verify(c);
    if (*fuzz) return cmd_fuzz(c);
    if (*oracle) return cmd_oracle(c);
    return cmd_stats(c);
  } catch (const PredicateFalse& e) {
    std::cerr << "predicate false: " << e.what() << '\n';
    return kPredicateFalse;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const ParseError& e) {
    std::cerr << "malformed file: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: bad number: " << e.what() << '\n';
    return kUsage;
  }
}
