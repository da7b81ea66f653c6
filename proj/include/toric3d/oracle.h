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

// Linear-algebra reference implementations. Nothing here shares code with the
// decoders; tests use these to check them.

#ifndef TORIC3D_ORACLE_H_
#define TORIC3D_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "toric3d/lattice.h"

namespace toric3d {

/// Dense matrix over GF(2) with bit-packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1; }
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c) { row(r)[c / 64] ^= std::uint64_t{1} << (c % 64); }

  /// Reduced row echelon form in place. Returns the pivot column of each
  /// leading row; rank is the size of the result.
  std::vector<std::size_t> row_reduce();

  /// Basis of {x : Ax = 0}, each vector of length cols().
  std::vector<std::vector<std::uint8_t>> nullspace() const;

 private:
  std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

enum class SolveStatus { kUnique, kNonUnique, kInfeasible };

struct Gf2Solution {
  SolveStatus status = SolveStatus::kInfeasible;
  /// One solution with free variables at zero; empty when infeasible.
  FaceSet solution;
  std::size_t nullity = 0;
};

/// Solves ∂F = s for F inside `allowed` (every face when empty).
Gf2Solution solve_syndrome(const ChainComplex3& c, const EdgeSet& s,
                           const FaceSet& allowed = FaceSet());

/// True iff F = ∂V for some volume set V. Throws std::invalid_argument when F
/// has a nonzero syndrome.
bool is_stabilizer_support(const ChainComplex3& c, const FaceSet& f);

/// True iff some volume set V, neither empty nor everything, has ∂V ⊆ k in the
/// lattice augmented by the given dummy boundaries. Agrees with is_cut_set on
/// the matching VolumeGraph whenever that graph is connected.
bool encloses_volume_set(const ChainComplex3& c, std::span<const FaceSet> dummy_boundaries,
                         const FaceSet& k);

/// Minimum-weight F with ∂F = s by enumerating the full solution coset.
/// Throws std::length_error when the solution space has dimension above
/// `max_nullity`, and std::invalid_argument when s has no solution.
FaceSet min_weight_decode(const ChainComplex3& c, const EdgeSet& s, std::size_t max_nullity = 24);

}  // namespace toric3d

#endif  // TORIC3D_ORACLE_H_
