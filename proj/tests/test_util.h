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

#ifndef TORIC3D_TESTS_TEST_UTIL_H_
#define TORIC3D_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "toric3d/lattice.h"

namespace toric3d::testing {

/// k distinct faces drawn uniformly.
template <class Tag>
IdSet<Tag> random_subset(std::size_t universe, std::size_t k, std::mt19937_64& rng) {
  std::vector<CellId> all(universe);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(k, universe));
  return IdSet<Tag>(universe, all);
}

inline FaceSet random_faces(std::size_t universe, std::size_t k, std::mt19937_64& rng) {
  return random_subset<FaceTag>(universe, k, rng);
}

/// Each volume independently with probability one half.
inline VolumeSet random_volumes(std::size_t universe, std::mt19937_64& rng) {
  VolumeSet v(universe);
  for (std::size_t i = 0; i < universe; ++i) {
    if (rng() & 1) v.insert(static_cast<CellId>(i));
  }
  return v;
}

/// Error of weight uniform in [1, max_weight].
inline FaceSet random_low_weight(std::size_t universe, std::size_t max_weight,
                                 std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> w(1, max_weight);
  return random_faces(universe, w(rng), rng);
}

/// Non-periodic complex made of unit cubes at the given integer corners,
/// with cells shared where the cubes touch. Every cell is full; outer faces
/// end up on one volume.
class CubeComplexBuilder {
 public:
  void add_cube(int x, int y, int z) { cubes_.push_back({x, y, z}); }

  ChainComplex3 build() {
    std::vector<std::vector<FaceId>> volumes;
    for (const auto& c : cubes_) {
      std::vector<FaceId> faces;
      for (int a = 0; a < 3; ++a) {
        for (int side = 0; side < 2; ++side) {
          auto corner = c;
          corner[a] += side;
          faces.push_back(face(corner, a));
        }
      }
      volumes.push_back(faces);
    }
    return ChainComplex3(vertices_.size(), edges_, faces_, volumes, false);
  }

 private:
  using Point = std::array<int, 3>;

  VertexId vertex(Point p) {
    auto [it, fresh] = vertices_.try_emplace(p, static_cast<VertexId>(vertices_.size()));
    return it->second;
  }
  EdgeId edge(Point p, int axis) {
    const auto key = std::make_pair(p, axis);
    if (auto it = edge_ids_.find(key); it != edge_ids_.end()) return it->second;
    Point q = p;
    ++q[axis];
    const auto id = static_cast<EdgeId>(edges_.size());
    const VertexId a = vertex(p);
    const VertexId b = vertex(q);
    edges_.push_back({a, b});
    edge_ids_.emplace(key, id);
    return id;
  }
  FaceId face(Point p, int normal) {
    const auto key = std::make_pair(p, normal);
    if (auto it = face_ids_.find(key); it != face_ids_.end()) return it->second;
    const int b = (normal + 1) % 3;
    const int c = (normal + 2) % 3;
    Point pb = p;
    ++pb[b];
    Point pc = p;
    ++pc[c];
    std::vector<EdgeId> boundary = {edge(p, b), edge(p, c), edge(pb, c), edge(pc, b)};
    const auto id = static_cast<FaceId>(faces_.size());
    faces_.push_back(boundary);
    face_ids_.emplace(key, id);
    return id;
  }

  std::vector<Point> cubes_;
  std::map<Point, VertexId> vertices_;
  std::map<std::pair<Point, int>, EdgeId> edge_ids_;
  std::map<std::pair<Point, int>, FaceId> face_ids_;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<EdgeId>> faces_;
};

}  // namespace toric3d::testing

#endif  // TORIC3D_TESTS_TEST_UTIL_H_
