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

#include "lcert/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lcert/error.hpp"

namespace lcert {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t pos = 0;
  std::size_t number = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) l.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.tokens.empty() && l.tokens[0].front() != '#') out.push_back(std::move(l));
  }
  return out;
}

std::uint64_t to_u64(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  }
  return v;
}

Certificate to_cert(std::string_view hex, std::string_view len, std::size_t line) {
  try {
    return BitString::from_hex(hex, to_u64(len, line));
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(e.what(), line);
  }
}

Vertex vertex_for(const IdAssignment& ids, std::string_view tok, std::size_t line) {
  const Identifier id = to_u64(tok, line);
  auto v = ids.vertex_of(id);
  if (!v) throw ParseError("unknown identifier " + std::to_string(id), line);
  return *v;
}

}  // namespace

std::string format_local_certificates(const IdAssignment& ids, std::span<const Certificate> certs) {
  std::ostringstream out;
  for (Vertex v = 0; v < certs.size(); ++v) {
    out << "cert " << ids[v] << ' ' << certs[v].to_hex() << ' ' << certs[v].size() << '\n';
  }
  return out.str();
}

std::string format_global_certificate(const Certificate& cert) {
  return "gcert " + cert.to_hex() + ' ' + std::to_string(cert.size()) + '\n';
}

CertificateFile parse_certificates(std::string_view text, const IdAssignment& ids) {
  CertificateFile file;
  std::vector<std::optional<Certificate>> local(ids.size());
  bool saw_local = false;
  bool saw_global = false;
  for (const auto& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "cert") {
      if (saw_global) throw ParseError("cert line in a global certificate file", line.number);
      if (t.size() != 4) throw ParseError("expected 'cert <id> <hex> <bit-length>'", line.number);
      saw_local = true;
      const Vertex v = vertex_for(ids, t[1], line.number);
      if (local[v]) throw ParseError("repeated certificate for identifier " + std::string(t[1]), line.number);
      local[v] = to_cert(t[2], t[3], line.number);
    } else if (t[0] == "gcert") {
      if (saw_local || saw_global) throw ParseError("unexpected gcert line", line.number);
      if (t.size() != 3) throw ParseError("expected 'gcert <hex> <bit-length>'", line.number);
      saw_global = true;
      file.global = true;
      file.certs.push_back(to_cert(t[1], t[2], line.number));
    } else {
      throw ParseError("unknown record '" + std::string(t[0]) + "'", line.number);
    }
  }
  if (saw_global) return file;
  if (!saw_local) throw ParseError("no certificates found", 0);
  for (Vertex v = 0; v < local.size(); ++v) {
    if (!local[v]) throw ParseError("missing certificate for identifier " + std::to_string(ids[v]), 0);
    file.certs.push_back(std::move(*local[v]));
  }
  return file;
}

std::string format_inputs(const IdAssignment& ids, std::span<const std::uint64_t> values) {
  std::ostringstream out;
  for (Vertex v = 0; v < values.size(); ++v) out << "in " << ids[v] << ' ' << values[v] << '\n';
  return out.str();
}

InputAssignment parse_inputs(std::string_view text, const IdAssignment& ids,
                             std::optional<std::uint64_t> max_input) {
  std::vector<std::optional<std::uint64_t>> values(ids.size());
  for (const auto& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] != "in" || t.size() != 3) throw ParseError("expected 'in <id> <value>'", line.number);
    const Vertex v = vertex_for(ids, t[1], line.number);
    if (values[v]) throw ParseError("repeated input for identifier " + std::string(t[1]), line.number);
    values[v] = to_u64(t[2], line.number);
    if (*values[v] == 0) throw ParseError("inputs start at 1", line.number);
    if (max_input && *values[v] > *max_input) {
      throw ParseError("input " + std::to_string(*values[v]) + " exceeds range " +
                           std::to_string(*max_input),
                       line.number);
    }
  }
  std::vector<InputValue> out;
  std::uint64_t largest = 1;
  for (Vertex v = 0; v < values.size(); ++v) {
    if (!values[v]) throw ParseError("missing input for identifier " + std::to_string(ids[v]), 0);
    out.push_back(*values[v]);
    largest = std::max(largest, *values[v]);
  }
  return InputAssignment(std::move(out), max_input.value_or(largest));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed for " + path);
}

}  // namespace lcert
