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

#include "toric3d/decoder_boundary.h"

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"
#include "toric3d/oracle.h"

namespace toric3d {
namespace {

std::vector<ChainComplex3> slabs() {
  std::vector<ChainComplex3> out;
  out.push_back(build_boundary_slab(1, 1, 1));
  out.push_back(build_boundary_slab(2, 2, 2));
  out.push_back(build_boundary_slab(2, 2, 2, SlabBoundary::kRoughSides));
  out.push_back(build_boundary_slab(3, 3, 2, SlabBoundary::kRoughSides));
  out.push_back(build_boundary_slab(3, 2, 4));
  return out;
}

TEST(BoundaryDecoder, RejectsPeriodic) {
  const auto t = build_cubic_torus(2);
  EXPECT_THROW(BoundaryDecoder{t}, std::invalid_argument);
}

TEST(BoundaryDecoder, StatusNames) {
  EXPECT_EQ(status_name(DecodeStatus::kSuccess), "success");
  EXPECT_EQ(status_name(DecodeStatus::kPeelingStuck), "peeling-stuck");
  EXPECT_EQ(status_name(DecodeStatus::kResidualSyndrome), "residual-syndrome");
  EXPECT_EQ(status_name(DecodeStatus::kKleinBottleSuspected), "klein-bottle-suspected");
}

TEST(BoundaryDecoder, EmptySyndrome) {
  const auto c = build_boundary_slab(2, 2, 2, SlabBoundary::kRoughSides);
  const BoundaryDecoder d(c);
  const auto out = d.decode(c.empty_edges());
  EXPECT_TRUE(out.success());
  EXPECT_TRUE(out.estimate.empty());
}

TEST(BoundaryDecoder, CubeErrorHasNoSyndrome) {
  const auto c = build_boundary_slab(2, 2, 2);
  const BoundaryDecoder d(c);
  const FaceSet cube(c.face_count(), c.volume_faces(slab_volume(c, 1, 0, 1)));
  const auto out = d.decode(syndrome(c, cube));
  EXPECT_TRUE(out.success());
  EXPECT_TRUE(is_stabilizer_support(c, cube ^ out.estimate));
}

TEST(BoundaryDecoder, ExhaustiveWeightOne) {
  for (const auto& c : slabs()) {
    const BoundaryDecoder d(c);
    for (FaceId f = 0; f < c.face_count(); ++f) {
      const FaceSet e(c.face_count(), {f});
      const auto out = d.decode(syndrome(c, e));
      ASSERT_TRUE(out.success()) << status_name(out.status);
      EXPECT_TRUE(is_stabilizer_support(c, e ^ out.estimate)) << "face " << f;
    }
  }
}

TEST(BoundaryDecoder, PeelingStuckOnClosedErasure) {
  const auto c = build_boundary_slab(2, 2, 2);
  const BoundaryDecoder d(c);
  const auto faces = c.volume_faces(slab_volume(c, 0, 0, 0));
  const FaceSet erasure(c.face_count(), faces);
  const EdgeSet s = syndrome(c, FaceSet(c.face_count(), {faces[0]}));
  const auto out = d.peel(erasure, s);
  EXPECT_EQ(out.status, DecodeStatus::kPeelingStuck);
  EXPECT_EQ(out.unpeeled, erasure);
  EXPECT_EQ(out.residual, s);
}

TEST(BoundaryDecoder, ResidualSyndromeWhenErasureMisses) {
  const auto c = build_boundary_slab(2, 2, 2);
  const BoundaryDecoder d(c);
  const FaceId f = slab_face(c, 0, 0, 0, 2);
  const FaceId g = slab_face(c, 1, 1, 2, 2);
  const auto out = d.peel(FaceSet(c.face_count(), {f}), syndrome(c, FaceSet(c.face_count(), {g})));
  EXPECT_EQ(out.status, DecodeStatus::kResidualSyndrome);
  EXPECT_TRUE(out.unpeeled.empty());
  EXPECT_FALSE(out.residual.empty());
}

TEST(BoundaryDecoder, PeelsTree) {
  // Two adjacent faces peel one at a time through their leaf edges.
  const auto c = build_boundary_slab(2, 2, 2);
  const BoundaryDecoder d(c);
  const FaceSet e(c.face_count(), {slab_face(c, 0, 0, 1, 2), slab_face(c, 1, 0, 1, 2)});
  const auto out = d.peel(e, syndrome(c, e));
  EXPECT_EQ(out.status, DecodeStatus::kSuccess);
  EXPECT_EQ(out.estimate, e);
  EXPECT_EQ(out.peeled, 2u);
}

TEST(BoundaryDecoderProperty, ErasureIsSoundAndMaximal) {
  std::mt19937_64 rng(41);
  for (const auto& c : slabs()) {
    const BoundaryDecoder d(c);
    const VolumeGraph& g = d.augmented().graph;
    for (int trial = 0; trial < 15; ++trial) {
      const FaceSet e = testing::random_low_weight(c.face_count(), 5, rng);
      const auto ex = d.explore(syndrome(c, e));
      EXPECT_FALSE(is_cut_set(g, ex.erasure));
      EXPECT_LT(ex.erasure.weight(), c.face_count());
      EXPECT_EQ(ex.order.size(), ex.erasure.weight());
      // No nonzero cycle lives inside the erasure.
      const auto kernel = solve_syndrome(c, c.empty_edges(), ex.erasure);
      EXPECT_EQ(kernel.status, SolveStatus::kUnique);
      for (FaceId f = 0; f < c.face_count(); ++f) {
        if (ex.erasure.contains(f)) continue;
        FaceSet with = ex.erasure;
        with.insert(f);
        EXPECT_TRUE(is_cut_set(g, with)) << "face " << f << " could have joined";
      }
    }
  }
}

TEST(BoundaryDecoderProperty, EstimateIsTheUniqueErasureSolution) {
  std::mt19937_64 rng(42);
  for (const auto& c : slabs()) {
    const BoundaryDecoder d(c);
    for (int trial = 0; trial < 30; ++trial) {
      const FaceSet e = testing::random_low_weight(c.face_count(), 6, rng);
      const EdgeSet s = syndrome(c, e);
      const auto ex = d.explore(s);
      const auto out = d.decode(s);
      ASSERT_TRUE(out.success());
      EXPECT_EQ(syndrome(c, out.estimate), s);
      EXPECT_TRUE(out.estimate.is_subset_of(ex.erasure));
      const auto oracle = solve_syndrome(c, s, ex.erasure);
      ASSERT_EQ(oracle.status, SolveStatus::kUnique);
      EXPECT_EQ(oracle.solution, out.estimate);
      EXPECT_FALSE(out.diagnostics.fallback_used);
      if (e.is_subset_of(ex.erasure)) {
        EXPECT_EQ(out.estimate, e);
      }
    }
  }
}

TEST(BoundaryDecoderProperty, StrategiesGiveTheSameEstimate) {
  std::mt19937_64 rng(43);
  const auto c = build_boundary_slab(3, 3, 3, SlabBoundary::kRoughSides);
  const BoundaryDecoder fresh(c, {.cut_strategy = CutStrategy::kFreshTraversal});
  const BoundaryDecoder incremental(c, {.cut_strategy = CutStrategy::kIncremental});
  for (int trial = 0; trial < 30; ++trial) {
    const EdgeSet s = syndrome(c, testing::random_low_weight(c.face_count(), 10, rng));
    const auto a = fresh.decode(s);
    const auto b = incremental.decode(s);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.estimate, b.estimate);
    EXPECT_EQ(a.diagnostics.erasure_size, b.diagnostics.erasure_size);
  }
}

}  // namespace
}  // namespace toric3d
