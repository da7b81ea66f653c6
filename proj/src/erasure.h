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

// Growth and peeling loops shared by both decoders. Not installed.

#ifndef TORIC3D_SRC_ERASURE_H_
#define TORIC3D_SRC_ERASURE_H_

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "toric3d/lattice.h"

namespace toric3d::internal {

struct WaveResult {
  FaceSet accepted;
  std::vector<FaceId> order;
  std::size_t waves = 0;
  std::size_t rejected = 0;
  std::size_t reseeds = 0;
};

/// Breadth-first growth from `syndrome`. Each wave visits every unexplored
/// face touching the frontier, those meeting more frontier edges first and
/// ties by ascending id; `accept(f)` decides whether f joins the result, and
/// the next frontier is the boundary of the accepted faces minus the old
/// frontier. Faces with explored[f] set on entry are never visited.
///
/// When the frontier dies with faces left, growth restarts from, in order:
/// syndrome edges that still touch unexplored faces, edges of rejected faces
/// that do, or the boundary of the lowest unexplored face.
template <class Accept>
WaveResult explore_waves(const ChainComplex3& c, std::vector<char> explored,
                         const EdgeSet& syndrome, Accept&& accept) {
  WaveResult r;
  r.accepted = c.empty_faces();
  std::size_t remaining = std::count(explored.begin(), explored.end(), 0);
  EdgeSet frontier = syndrome;
  std::vector<EdgeId> deferred;
  std::vector<FaceId> candidates;
  std::vector<std::pair<std::size_t, FaceId>> ranked;
  std::size_t cursor = 0;
  auto touches_unexplored = [&](EdgeId e) {
    for (FaceId f : c.edge_faces(e)) {
      if (!explored[f]) return true;
    }
    return false;
  };

  while (remaining > 0) {
    candidates.clear();
    frontier.for_each([&](EdgeId e) {
      for (FaceId f : c.edge_faces(e)) {
        if (!explored[f]) candidates.push_back(f);
      }
    });
    if (candidates.empty()) {
      ++r.reseeds;
      frontier.clear();
      syndrome.for_each([&](EdgeId e) {
        if (touches_unexplored(e)) frontier.insert(e);
      });
      if (frontier.empty()) {
        for (EdgeId e : deferred) {
          if (touches_unexplored(e)) frontier.insert(e);
        }
        deferred.clear();
      }
      if (frontier.empty()) {
        while (explored[cursor]) ++cursor;
        for (EdgeId e : c.face_edges(static_cast<FaceId>(cursor))) frontier.insert(e);
      }
      continue;
    }
    // A face listed once per frontier edge it touches. Faces touching more of
    // the frontier go first, then lower ids.
    std::sort(candidates.begin(), candidates.end());
    ranked.clear();
    for (std::size_t i = 0; i < candidates.size();) {
      std::size_t j = i;
      while (j < candidates.size() && candidates[j] == candidates[i]) ++j;
      ranked.emplace_back(j - i, candidates[i]);
      i = j;
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    EdgeSet next = c.empty_edges();
    for (const auto& [touching, f] : ranked) {
      explored[f] = 1;
      --remaining;
      if (accept(f)) {
        r.accepted.insert(f);
        r.order.push_back(f);
        for (EdgeId e : c.face_edges(f)) next.insert(e);
      } else {
        ++r.rejected;
        deferred.insert(deferred.end(), c.face_edges(f).begin(), c.face_edges(f).end());
      }
    }
    frontier = next - frontier;
    ++r.waves;
  }
  return r;
}

struct PeelResult {
  FaceSet estimate;
  EdgeSet residual;
  /// Erasure faces that were never peeled.
  FaceSet remaining;
  std::size_t peeled = 0;
};

/// Leaf peeling of `erasure` against `syndrome`. Faces in `pinned` count
/// towards edge degrees but are never peeled. Pass an empty set for none.
PeelResult peel_leaves(const ChainComplex3& c, FaceSet erasure, const FaceSet& pinned,
                       EdgeSet syndrome);

}  // namespace toric3d::internal

#endif  // TORIC3D_SRC_ERASURE_H_
