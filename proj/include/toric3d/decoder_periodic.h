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

#ifndef TORIC3D_DECODER_PERIODIC_H_
#define TORIC3D_DECODER_PERIODIC_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "toric3d/decoder_boundary.h"
#include "toric3d/lattice.h"
#include "toric3d/stabilizer.h"

namespace toric3d {

/// Face set 𝓧 holding one X logical representative per logical qubit and no
/// stabilizer support. Excluding it makes every logical operator visible to
/// the cut-set test.
struct ArtificialBoundary {
  FaceSet faces;
  std::vector<FaceSet> reps;
  /// Edges on more than two faces of 𝓧.
  EdgeSet high_degree;
  /// Edges on at least one face of 𝓧.
  EdgeSet support;
  bool reps_disjoint = false;
  /// No face set inside 𝓧 has a nonempty boundary made of high_degree edges.
  bool high_degree_acyclic = false;
};

/// Union of `reps`, after replacing representatives as needed so that the
/// union holds no stabilizer support.
ArtificialBoundary make_artificial_boundary(const ChainComplex3& c, std::vector<FaceSet> reps);

/// Three face planes of the cubic torus, normal to x, y and z, through the
/// cell at `origin`.
ArtificialBoundary torus_artificial_boundary(const ChainComplex3& c, std::array<int, 3> origin);

struct ProjectionOutcome {
  FaceSet estimate;
  EdgeSet residual;
  FaceSet unpeeled;
  std::size_t peeled = 0;
  /// residual lies on edges of 𝓧.
  bool projected = false;
};

/// Decoder for periodic lattices. The first boundary is the primary one; the
/// rest are tried in turn on retries. Keeps a reference to the complex.
class PeriodicDecoder {
 public:
  PeriodicDecoder(const ChainComplex3& c, const LogicalBasis& basis, DecoderOptions options = {});
  PeriodicDecoder(const ChainComplex3& c, std::vector<ArtificialBoundary> boundaries,
                  DecoderOptions options = {});

  const ChainComplex3& complex() const { return *c_; }
  const VolumeGraph& graph() const { return graph_; }
  const std::vector<ArtificialBoundary>& boundaries() const { return boundaries_; }
  const DecoderOptions& options() const { return options_; }

  /// Exploration with 𝓧 excluded from the start and never explored.
  Exploration explore(const ArtificialBoundary& x, const EdgeSet& s) const;
  /// Peels the erasure while counting 𝓧 in edge degrees.
  ProjectionOutcome peel_project(const ArtificialBoundary& x, const FaceSet& erasure,
                                 const EdgeSet& s) const;
  /// Faces of 𝓧 with boundary s, for s on edges of 𝓧.
  std::optional<FaceSet> estimate_residual_general(const ArtificialBoundary& x,
                                                   const EdgeSet& s) const;
  /// Per-plane two-colouring. Needs face-disjoint reps.
  std::optional<FaceSet> estimate_residual_cubic(const ArtificialBoundary& x,
                                                 const EdgeSet& s) const;
  DecodeOutcome decode(const EdgeSet& s) const;

 private:
  std::optional<FaceSet> estimate_residual(const ArtificialBoundary& x, const EdgeSet& s) const;

  const ChainComplex3* c_;
  VolumeGraph graph_;
  std::vector<ArtificialBoundary> boundaries_;
  DecoderOptions options_;
};

/// Primary and retry boundaries: for the cubic torus the planes through the
/// origin and through (L/2, L/2, L/2); otherwise the basis reps alone.
std::vector<ArtificialBoundary> default_boundaries(const ChainComplex3& c,
                                                   const LogicalBasis& basis);

}  // namespace toric3d

#endif  // TORIC3D_DECODER_PERIODIC_H_
