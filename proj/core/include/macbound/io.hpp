// Copyright 2026 The macbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Document formats: channel files, parameter files and sigma-triple files
// (JSON), plus CSV number formatting, digests and atomic file output.
//
// Channel file:
//   {"kind": "classical", "n1": 2, "n2": 2, "m": 3, "w": [x1][x2][y]}
//   {"kind": "quantum", "n1": 2, "n2": 2, "dim": 2, "states": [x1][x2][row][col]}
// with complex entries written as [re, im] (a bare number means im = 0).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "macbound/model.hpp"
#include "macbound/quantum_bounds.hpp"
#include "macbound/spectrum.hpp"

namespace macbound {

enum class ChannelKind { kClassical, kQuantum };

struct ChannelSpec {
  ChannelKind kind = ChannelKind::kClassical;
  std::optional<ClassicalMAC> classical;
  std::optional<CqMAC> quantum;

  std::size_t n1() const;
  std::size_t n2() const;
  // The quantum channel, or the diagonal embedding of the classical one.
  CqMAC as_quantum() const;
};

// Throws ParseError for malformed documents (with the offending location)
// and PreconditionViolation naming (x1,x2) for a state that is not PSD.
ChannelSpec parse_channel(const std::string& text);
std::string serialize_channel(const ClassicalMAC& w);
std::string serialize_channel(const CqMAC& wq);

// One requested bound family in a parameter file.
struct BoundRequest {
  std::string name;
  // Weight triples: "alpha", "alpha_grid", "gammas".
  std::vector<std::array<double, 3>> triples;
  // Scalars: "gamma" (number or array).
  std::vector<double> scalars;
  std::vector<double> pi;
  std::string family;
  double mix = 0.0;
  // Optional auxiliary conditional, same [x1][x2][y] layout as a channel.
  std::optional<std::vector<std::vector<std::vector<double>>>> qcond;
};

struct ParamsSpec {
  // p(x1,x2) flattened over x1*n2+x2.
  std::optional<Distribution> input;
  // Set when the input was given as a product {"p1": ..., "p2": ...}.
  std::optional<Distribution> p1;
  std::optional<Distribution> p2;
  std::optional<EncoderPair> encoders;
  std::optional<CodebookPair> codebooks;
  std::vector<BoundRequest> bounds;
};

// Parameter file:
//   {"input": [[p(x1,x2)]] | {"p1": [...], "p2": [...]},
//    "encoders": {"f1": [[f1(x1|m1)]]_m1, "f2": ...},
//    "codebooks": {"c1": [...], "c2": [...]},
//    "bounds": [{"name": ..., "alpha": [a1,a2,a3], ...}]}
// Every field is optional. Shapes are checked against n1, n2.
ParamsSpec parse_params(const std::string& text, std::size_t n1, std::size_t n2);

// {"sigma": M, "sigma1": [M per x1], "sigma2": [M per x2]} with M a complex
// matrix; p1, p2 are the averaging weights.
SigmaTriple parse_triple(const std::string& text, const Distribution& p1, const Distribution& p2);

// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_text_file(const std::string& path);
// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

// 17 significant digits, '.' decimal point.
std::string format_double(double v);
// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace macbound
