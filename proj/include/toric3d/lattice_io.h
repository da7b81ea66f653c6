// Copyright 2026 The toric3d Authors
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

// Line-oriented lattice interchange format:
//
//   lattice3d v1
//   vertices N
//   periodic true|false          (optional, default false)
//   family <name> <d0> <d1> <d2> (optional; must match the built-in exactly)
//   edge <id> <v1> [<v2>]        (one endpoint => partial edge)
//   face <id> <edge ids...>
//   volume <id> <face ids...>
//   xlogical <face ids...>       (optional, repeated, in pairing order)
//   zlogical <face ids...>
//
// Ids are dense and ascending per record kind, and cells are declared before
// anything refers to them. '#' starts a comment.

#ifndef TORIC3D_LATTICE_IO_H_
#define TORIC3D_LATTICE_IO_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toric3d/lattice.h"

namespace toric3d {

class LatticeParseError : public std::runtime_error {
 public:
  LatticeParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class LatticeValidationError : public std::runtime_error {
 public:
  explicit LatticeValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct LatticeDocument {
  ChainComplex3 complex;
  std::vector<std::vector<FaceId>> xlogical;
  std::vector<std::vector<FaceId>> zlogical;
};

/// Parses and validates. Throws LatticeParseError or LatticeValidationError.
LatticeDocument load_lattice(std::string_view text);
LatticeDocument load_lattice_file(const std::string& path);

std::string serialize_lattice(const ChainComplex3& c,
                              const std::vector<std::vector<FaceId>>& xlogical = {},
                              const std::vector<std::vector<FaceId>>& zlogical = {});

/// Same cells with the same incidences under the identity id map.
bool same_structure(const ChainComplex3& a, const ChainComplex3& b);

}  // namespace toric3d

#endif  // TORIC3D_LATTICE_IO_H_
