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

#include <stdexcept>

#include "erasure.h"
#include "toric3d/oracle.h"

namespace toric3d {

std::string status_name(DecodeStatus status) {
  switch (status) {
    case DecodeStatus::kSuccess:
      return "success";
    case DecodeStatus::kPeelingStuck:
      return "peeling-stuck";
    case DecodeStatus::kResidualSyndrome:
      return "residual-syndrome";
    case DecodeStatus::kKleinBottleSuspected:
      return "klein-bottle-suspected";
  }
  return "unknown";
}

BoundaryDecoder::BoundaryDecoder(const ChainComplex3& c, DecoderOptions options)
    : c_(&c), augmented_(augment(c, face_equivalence_classes(c))), options_(options) {
  if (c.periodic()) throw std::invalid_argument("BoundaryDecoder needs a lattice with boundaries");
}

Exploration BoundaryDecoder::explore(const EdgeSet& s) const {
  if (s.universe() != c_->edge_count()) {
    throw std::invalid_argument("explore: syndrome has the wrong universe");
  }
  CutSession session(augmented_.graph, c_->empty_faces(), options_.cut_strategy);
  auto r = internal::explore_waves(*c_, std::vector<char>(c_->face_count(), 0), s,
                                   [&](FaceId f) { return !session.test_and_add(f); });
  return {std::move(r.accepted), std::move(r.order), r.waves, r.rejected, r.reseeds};
}

PeelOutcome BoundaryDecoder::peel(const FaceSet& erasure, const EdgeSet& s) const {
  auto r = internal::peel_leaves(*c_, erasure, FaceSet(), s);
  PeelOutcome out;
  out.peeled = r.peeled;
  if (r.residual.empty()) {
    out.status = DecodeStatus::kSuccess;
  } else if (!r.remaining.empty()) {
    out.status = DecodeStatus::kPeelingStuck;
  } else {
    out.status = DecodeStatus::kResidualSyndrome;
  }
  out.estimate = std::move(r.estimate);
  out.residual = std::move(r.residual);
  out.unpeeled = std::move(r.remaining);
  return out;
}

DecodeOutcome BoundaryDecoder::decode(const EdgeSet& s) const {
  Exploration ex = explore(s);
  PeelOutcome peeled = peel(ex.erasure, s);
  DecodeOutcome out;
  out.diagnostics.erasure_size = ex.erasure.weight();
  out.diagnostics.rejected_faces = ex.rejected;
  out.diagnostics.waves = ex.waves;
  out.diagnostics.reseeds = ex.reseeds;
  out.diagnostics.peeled = peeled.peeled;
  out.status = peeled.status;
  out.estimate = std::move(peeled.estimate);
  if (out.status == DecodeStatus::kPeelingStuck && options_.gf2_fallback) {
    out.diagnostics.fallback_used = true;
    Gf2Solution rest = solve_syndrome(*c_, peeled.residual, peeled.unpeeled);
    if (rest.status != SolveStatus::kInfeasible) {
      out.estimate ^= rest.solution;
      out.status = DecodeStatus::kSuccess;
    }
  }
  return out;
}

}  // namespace toric3d
