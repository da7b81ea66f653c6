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

#ifndef TORIC3D_CUTSET_H_
#define TORIC3D_CUTSET_H_

#include <cstdint>
#include <vector>

#include "toric3d/lattice.h"

namespace toric3d {

/// True iff removing the arcs in `k` disconnects the volume graph.
bool is_cut_set(const VolumeGraph& graph, const FaceSet& k);

enum class CutStrategy {
  /// Full traversal per query.
  kFreshTraversal,
  /// Bridge test on the current remainder: a face is a cut iff it is a bridge
  /// of G - K, found by a bidirectional search from its two ends.
  kIncremental,
};

/// Grows an excluded face set K one face at a time, keeping only faces whose
/// addition does not make K a cut set. The graph must outlive the session.
class CutSession {
 public:
  CutSession(const VolumeGraph& graph, FaceSet base,
             CutStrategy strategy = CutStrategy::kIncremental);

  /// Returns is_cut_set(K ∪ {f}). When false, f joins K; otherwise K is
  /// unchanged.
  bool test_and_add(FaceId f);

  const FaceSet& excluded() const { return excluded_; }
  /// The base set was already a cut set; every query then answers true.
  bool base_disconnected() const { return base_disconnected_; }
  CutStrategy strategy() const { return strategy_; }

 private:
  bool bridge(FaceId f);
  bool disconnected_without(FaceId f);

  const VolumeGraph* graph_;
  FaceSet excluded_;
  std::vector<char> removed_;
  CutStrategy strategy_;
  bool base_disconnected_ = false;

  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<CellId> queue_a_;
  std::vector<CellId> queue_b_;
};

/// Free-function form of CutSession::test_and_add.
inline bool is_cut_set_incremental(CutSession& session, FaceId f) {
  return session.test_and_add(f);
}

}  // namespace toric3d

#endif  // TORIC3D_CUTSET_H_
