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

#ifndef TORIC3D_STABILIZER_H_
#define TORIC3D_STABILIZER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "toric3d/lattice.h"

namespace toric3d {

/// Bit-flip syndrome: edge e fires iff an odd number of faces of iota(e) are
/// in error.
EdgeSet syndrome(const ChainComplex3& c, const FaceSet& error);

/// Partition of the degree-one faces into face-equivalence classes.
struct BoundaryClasses {
  std::vector<FaceSet> classes;
  /// Class index per face, or -1 for faces on two volumes.
  std::vector<int> class_of;

  std::size_t count() const { return classes.size(); }
};

BoundaryClasses face_equivalence_classes(const ChainComplex3& c);

/// The lattice plus one dummy volume per boundary class, so that every face
/// joins exactly two volumes. Dummy i is graph node volume_count() + i.
struct AugmentedLattice {
  BoundaryClasses classes;
  VolumeGraph graph;

  std::size_t dummy_count() const { return classes.count(); }
};

AugmentedLattice augment(const ChainComplex3& c, BoundaryClasses classes);

/// Paired X and Z logical representatives; |x_i ∩ z_j| is odd iff i == j.
struct LogicalBasis {
  std::vector<FaceSet> x_reps;
  std::vector<FaceSet> z_reps;

  std::size_t size() const { return x_reps.size(); }
};

/// Basis for built-in families and, for lattices with boundaries, one derived
/// from the boundary classes. Periodic custom lattices need a declared basis.
LogicalBasis logical_basis(const ChainComplex3& c, const BoundaryClasses& classes);

/// Basis from face-id lists, e.g. the xlogical/zlogical sections of a file.
LogicalBasis basis_from_lists(const ChainComplex3& c,
                              const std::vector<std::vector<FaceId>>& xlogical,
                              const std::vector<std::vector<FaceId>>& zlogical);

/// Empty string when every x rep has zero syndrome, every z rep meets every
/// volume boundary evenly and the pairing matrix is the identity.
std::string check_logical_basis(const ChainComplex3& c, const LogicalBasis& basis);

/// Overlap parities of a zero-syndrome face set with each z representative.
struct HomologyClass {
  std::vector<std::uint8_t> parity;

  bool trivial() const;
  std::string str() const;
};

/// Throws std::logic_error when `residual` has a nonzero syndrome.
HomologyClass classify_zero_syndrome(const ChainComplex3& c, const LogicalBasis& basis,
                                     const FaceSet& residual);

}  // namespace toric3d

#endif  // TORIC3D_STABILIZER_H_
