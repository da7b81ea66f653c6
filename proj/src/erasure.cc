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

#include "erasure.h"

#include <deque>

namespace toric3d::internal {

PeelResult peel_leaves(const ChainComplex3& c, FaceSet erasure, const FaceSet& pinned,
                       EdgeSet syndrome) {
  auto in_pool = [&](FaceId f) { return erasure.contains(f) || pinned.contains(f); };
  std::vector<std::uint32_t> degree(c.edge_count(), 0);
  std::deque<EdgeId> leaves;
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    for (FaceId f : c.edge_faces(e)) degree[e] += in_pool(f);
    if (degree[e] == 1) leaves.push_back(e);
  }

  PeelResult r;
  r.estimate = c.empty_faces();
  while (!leaves.empty()) {
    const EdgeId e = leaves.front();
    leaves.pop_front();
    if (degree[e] != 1) continue;
    FaceId leaf = kNoCell;
    for (FaceId f : c.edge_faces(e)) {
      if (in_pool(f)) {
        leaf = f;
        break;
      }
    }
    if (!erasure.contains(leaf)) continue;
    // e is covered only by `leaf`, so its syndrome bit decides the leaf.
    if (syndrome.contains(e)) {
      r.estimate.insert(leaf);
      for (EdgeId g : c.face_edges(leaf)) syndrome.toggle(g);
    }
    erasure.erase(leaf);
    ++r.peeled;
    for (EdgeId g : c.face_edges(leaf)) {
      if (--degree[g] == 1) leaves.push_back(g);
    }
  }
  r.residual = std::move(syndrome);
  r.remaining = std::move(erasure);
  return r;
}

}  // namespace toric3d::internal
