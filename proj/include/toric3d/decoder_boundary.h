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

#ifndef TORIC3D_DECODER_BOUNDARY_H_
#define TORIC3D_DECODER_BOUNDARY_H_

#include <cstddef>
#include <string>
#include <vector>

#include "toric3d/cutset.h"
#include "toric3d/lattice.h"
#include "toric3d/stabilizer.h"

namespace toric3d {

enum class DecodeStatus {
  kSuccess,
  /// Erasure left with no degree-one edge while syndrome remains.
  kPeelingStuck,
  /// Erasure drained, syndrome not.
  kResidualSyndrome,
  /// Projection onto the artificial boundary failed after all retries.
  kKleinBottleSuspected,
};

std::string status_name(DecodeStatus status);

enum class ResidualEstimator { kGeneral, kCubic };

struct DecoderOptions {
  CutStrategy cut_strategy = CutStrategy::kIncremental;
  /// Solve the leftover system by elimination when peeling cannot finish.
  bool gf2_fallback = true;
  /// Periodic decoding only.
  int retries = 1;
  ResidualEstimator estimator = ResidualEstimator::kCubic;
};

struct DecodeDiagnostics {
  std::size_t erasure_size = 0;
  std::size_t rejected_faces = 0;
  std::size_t waves = 0;
  std::size_t reseeds = 0;
  std::size_t peeled = 0;
  bool retried = false;
  std::size_t projection_failures = 0;
  bool fallback_used = false;
};

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::kSuccess;
  FaceSet estimate;
  DecodeDiagnostics diagnostics;

  bool success() const { return status == DecodeStatus::kSuccess; }
};

/// Erasure grown from a syndrome, with the order faces were accepted in.
struct Exploration {
  FaceSet erasure;
  std::vector<FaceId> order;
  std::size_t waves = 0;
  std::size_t rejected = 0;
  std::size_t reseeds = 0;
};

struct PeelOutcome {
  DecodeStatus status = DecodeStatus::kSuccess;
  FaceSet estimate;
  EdgeSet residual;
  FaceSet unpeeled;
  std::size_t peeled = 0;
};

/// Peeling decoder for lattices with boundaries. Keeps a reference to the
/// complex, which must outlive it.
class BoundaryDecoder {
 public:
  explicit BoundaryDecoder(const ChainComplex3& c, DecoderOptions options = {});

  const ChainComplex3& complex() const { return *c_; }
  const AugmentedLattice& augmented() const { return augmented_; }
  const DecoderOptions& options() const { return options_; }

  /// Largest face set grown from s that is not a cut set of the augmented
  /// lattice.
  Exploration explore(const EdgeSet& s) const;
  PeelOutcome peel(const FaceSet& erasure, const EdgeSet& s) const;
  DecodeOutcome decode(const EdgeSet& s) const;

 private:
  const ChainComplex3* c_;
  AugmentedLattice augmented_;
  DecoderOptions options_;
};

}  // namespace toric3d

#endif  // TORIC3D_DECODER_BOUNDARY_H_
