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

// Text formats for certificates and inputs.
//
//   cert <id> <hex> <bit-length>     one per vertex (local certificates)
//   gcert <hex> <bit-length>         a single line (global certificate)
//   in <id> <value>                  one per vertex (inputs / renamings)
//
// The bit length is authoritative; the last hex digit is zero-padded and
// the pad bits must be zero. An empty certificate is written as "-".

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcert/cert_model.hpp"
#include "lcert/graph.hpp"

namespace lcert {

struct CertificateFile {
  bool global = false;
  // One per vertex in vertex order, or exactly one when global.
  std::vector<Certificate> certs;
};

std::string format_local_certificates(const IdAssignment& ids, std::span<const Certificate> certs);
std::string format_global_certificate(const Certificate& cert);
// Throws ParseError on malformed lines, unknown or repeated identifiers,
// missing vertices, or a mix of cert and gcert lines.
CertificateFile parse_certificates(std::string_view text, const IdAssignment& ids);

std::string format_inputs(const IdAssignment& ids, std::span<const std::uint64_t> values);
// Range m defaults to the largest value present. Throws ParseError.
InputAssignment parse_inputs(std::string_view text, const IdAssignment& ids,
                             std::optional<std::uint64_t> max_input = std::nullopt);

// Throws Error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace lcert
