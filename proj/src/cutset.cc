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

#include "toric3d/cutset.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace toric3d {

bool is_cut_set(const VolumeGraph& graph, const FaceSet& k) {
  return volume_adjacency(graph, k).count > 1;
}

CutSession::CutSession(const VolumeGraph& graph, FaceSet base, CutStrategy strategy)
    : graph_(&graph),
      excluded_(std::move(base)),
      removed_(graph.face_count(), 0),
      strategy_(strategy),
      stamp_(graph.node_count(), 0) {
  if (excluded_.universe() != graph.face_count()) {
    throw std::invalid_argument("CutSession: base set has the wrong universe");
  }
  excluded_.for_each([&](FaceId f) { removed_[f] = 1; });
  base_disconnected_ = is_cut_set(graph, excluded_);
}

bool CutSession::test_and_add(FaceId f) {
  if (f >= removed_.size()) throw std::out_of_range("CutSession: face id out of range");
  if (base_disconnected_) return true;
  if (removed_[f]) return false;
  const bool cut = graph_->is_arc(f) && (strategy_ == CutStrategy::kIncremental
                                             ? bridge(f)
                                             : disconnected_without(f));
  if (!cut) {
    removed_[f] = 1;
    excluded_.insert(f);
  }
  return cut;
}

bool CutSession::disconnected_without(FaceId f) {
  FaceSet k = excluded_;
  k.insert(f);
  return is_cut_set(*graph_, k);
}

bool CutSession::bridge(FaceId f) {
  const auto [u, v] = graph_->arc(f);
  if (u == v) return false;
  if (epoch_ > UINT32_MAX - 4) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 0;
  }
  epoch_ += 2;
  const std::uint32_t side_a = epoch_;
  const std::uint32_t side_b = epoch_ + 1;
  queue_a_.assign(1, u);
  queue_b_.assign(1, v);
  stamp_[u] = side_a;
  stamp_[v] = side_b;
  std::size_t head_a = 0;
  std::size_t head_b = 0;

  // Expand one node per side in turn. If the sides meet, f is not a bridge;
  // if one side runs dry, its component is cut off. Work is bounded by about
  // twice the smaller side.
  bool turn_a = true;
  while (head_a < queue_a_.size() && head_b < queue_b_.size()) {
    auto& queue = turn_a ? queue_a_ : queue_b_;
    auto& head = turn_a ? head_a : head_b;
    const std::uint32_t mine = turn_a ? side_a : side_b;
    const std::uint32_t theirs = turn_a ? side_b : side_a;
    const CellId x = queue[head++];
    for (FaceId g : graph_->node_faces(x)) {
      if (g == f || removed_[g]) continue;
      const CellId y = graph_->other_end(g, x);
      if (stamp_[y] == theirs) return false;
      if (stamp_[y] != mine) {
        stamp_[y] = mine;
        queue.push_back(y);
      }
    }
    turn_a = !turn_a;
  }
  return true;
}

}  // namespace toric3d
