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

#include "toric3d/oracle.h"

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"
#include "toric3d/stabilizer.h"

namespace toric3d {
namespace {

TEST(Gf2Matrix, RowReduceSmall) {
  // [1 1 0]
  // [0 1 1]
  // [1 0 1]   rank 2, null vector 111
  Gf2Matrix m(3, 3);
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 1, true);
  m.set(1, 2, true);
  m.set(2, 0, true);
  m.set(2, 2, true);
  Gf2Matrix copy = m;
  const auto pivots = copy.row_reduce();
  EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 1}));
  const auto null = m.nullspace();
  ASSERT_EQ(null.size(), 1u);
  EXPECT_EQ(null[0], (std::vector<std::uint8_t>{1, 1, 1}));
}

TEST(Gf2Matrix, WideRowsAcrossWords) {
  Gf2Matrix m(2, 130);
  m.set(0, 129, true);
  m.set(1, 64, true);
  m.flip(1, 0);
  EXPECT_TRUE(m.get(0, 129));
  EXPECT_TRUE(m.get(1, 0));
  m.set(1, 0, false);
  EXPECT_FALSE(m.get(1, 0));
  EXPECT_EQ(m.nullspace().size(), 128u);
}

TEST(Gf2MatrixProperty, NullspaceVectorsAnnihilate) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng() % 12;
    const std::size_t cols = 1 + rng() % 80;
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() % 3 == 0);
    }
    Gf2Matrix reduced = m;
    const std::size_t rank = reduced.row_reduce().size();
    const auto null = m.nullspace();
    EXPECT_EQ(rank + null.size(), cols);
    for (const auto& x : null) {
      for (std::size_t r = 0; r < rows; ++r) {
        int sum = 0;
        for (std::size_t c = 0; c < cols; ++c) sum ^= m.get(r, c) & x[c];
        EXPECT_EQ(sum, 0);
      }
    }
  }
}

TEST(SolveSyndrome, TorusDimensions) {
  // Solutions of a fixed syndrome differ by cycles: stabilizer space plus
  // three logicals. On the L-torus that is L^3 - 1 + 3.
  const auto c = build_cubic_torus(3);
  const FaceSet e(c.face_count(), {0, 5});
  const auto sol = solve_syndrome(c, syndrome(c, e));
  EXPECT_EQ(sol.status, SolveStatus::kNonUnique);
  EXPECT_EQ(sol.nullity, 27u - 1 + 3);
  EXPECT_EQ(syndrome(c, sol.solution), syndrome(c, e));
}

TEST(SolveSyndrome, RestrictedMask) {
  const auto c = build_cubic_torus(3);
  const CubicTorusIndex ix{3};
  const FaceId f = ix.face(1, 1, 1, 0);
  const EdgeSet s = syndrome(c, FaceSet(c.face_count(), {f}));
  const auto only = solve_syndrome(c, s, FaceSet(c.face_count(), {f}));
  EXPECT_EQ(only.status, SolveStatus::kUnique);
  EXPECT_EQ(only.solution, FaceSet(c.face_count(), {f}));

  const auto none = solve_syndrome(c, s, FaceSet(c.face_count(), {ix.face(0, 0, 0, 1)}));
  EXPECT_EQ(none.status, SolveStatus::kInfeasible);
  EXPECT_TRUE(none.solution.empty());

  // A whole cube gives two solutions: f or the other five faces.
  FaceSet cube(c.face_count(), c.volume_faces(ix.volume(1, 1, 1)));
  ASSERT_TRUE(cube.contains(f));
  const auto two = solve_syndrome(c, s, cube);
  EXPECT_EQ(two.status, SolveStatus::kNonUnique);
  EXPECT_EQ(two.nullity, 1u);
}

TEST(SolveSyndrome, EmptySyndrome) {
  const auto c = build_boundary_slab(2, 2, 2);
  const auto sol = solve_syndrome(c, c.empty_edges(), FaceSet(c.face_count(), {0, 1}));
  EXPECT_EQ(sol.status, SolveStatus::kUnique);
  EXPECT_TRUE(sol.solution.empty());
}

TEST(IsStabilizerSupport, Examples) {
  const auto c = build_cubic_torus(3);
  const auto basis = logical_basis(c, face_equivalence_classes(c));
  EXPECT_TRUE(is_stabilizer_support(c, c.empty_faces()));
  EXPECT_TRUE(is_stabilizer_support(c, FaceSet(c.face_count(), c.volume_faces(3))));
  EXPECT_FALSE(is_stabilizer_support(c, basis.x_reps[1]));
  EXPECT_THROW(is_stabilizer_support(c, FaceSet(c.face_count(), {0})), std::invalid_argument);

  // The full boundary of a closed slab is the product of all its cubes.
  const auto slab = build_boundary_slab(2, 2, 2);
  FaceSet outer = slab.empty_faces();
  for (FaceId f = 0; f < slab.face_count(); ++f) {
    if (slab.face_volumes(f).size() == 1) outer.insert(f);
  }
  EXPECT_TRUE(is_stabilizer_support(slab, outer));
}

TEST(EnclosesVolumeSet, Examples) {
  const auto c = build_cubic_torus(3);
  EXPECT_FALSE(encloses_volume_set(c, {}, c.empty_faces()));
  EXPECT_TRUE(encloses_volume_set(c, {}, FaceSet(c.face_count(), c.volume_faces(0))));
  // Every face: each single volume is enclosed.
  FaceSet all = c.empty_faces();
  for (FaceId f = 0; f < c.face_count(); ++f) all.insert(f);
  EXPECT_TRUE(encloses_volume_set(c, {}, all));
}

TEST(MinWeightDecode, SmallCases) {
  const auto c = build_cubic_torus(2);
  for (FaceId f = 0; f < c.face_count(); ++f) {
    const FaceSet e(c.face_count(), {f});
    const FaceSet m = min_weight_decode(c, syndrome(c, e));
    EXPECT_EQ(m.weight(), 1u);
    EXPECT_EQ(syndrome(c, m), syndrome(c, e));
  }
  EXPECT_TRUE(min_weight_decode(c, c.empty_edges()).empty());
}

TEST(MinWeightDecode, Guards) {
  const auto c = build_cubic_torus(3);
  EXPECT_THROW(min_weight_decode(c, c.empty_edges()), std::length_error);
  const auto small = build_cubic_torus(2);
  EdgeSet odd = small.empty_edges();
  odd.insert(0);
  EXPECT_THROW(min_weight_decode(small, odd), std::invalid_argument);
}

TEST(MinWeightDecodeProperty, NoLighterSolutionBySampling) {
  std::mt19937_64 rng(32);
  const auto c = build_cubic_torus(2);
  for (int trial = 0; trial < 30; ++trial) {
    const FaceSet e = testing::random_low_weight(c.face_count(), 6, rng);
    const EdgeSet s = syndrome(c, e);
    const FaceSet m = min_weight_decode(c, s);
    ASSERT_EQ(syndrome(c, m), s);
    EXPECT_LE(m.weight(), e.weight());
    for (int k = 0; k < 20; ++k) {
      const FaceSet alt = e ^ boundary_of_volumes(c, testing::random_volumes(c.volume_count(), rng));
      EXPECT_LE(m.weight(), alt.weight());
    }
  }
}

}  // namespace
}  // namespace toric3d
