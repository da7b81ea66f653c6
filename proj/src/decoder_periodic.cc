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

#include "toric3d/decoder_periodic.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "erasure.h"
#include "toric3d/cutset.h"
#include "toric3d/oracle.h"

namespace toric3d {

namespace {

void fill_derived_fields(const ChainComplex3& c, ArtificialBoundary& x) {
  x.faces = c.empty_faces();
  x.reps_disjoint = true;
  for (const auto& rep : x.reps) {
    if (x.faces.intersects(rep)) x.reps_disjoint = false;
    x.faces |= rep;
  }
  x.support = c.empty_edges();
  x.high_degree = c.empty_edges();
  std::vector<std::uint32_t> degree(c.edge_count(), 0);
  x.faces.for_each([&](FaceId f) {
    for (EdgeId e : c.face_edges(f)) {
      x.support.insert(e);
      ++degree[e];
    }
  });
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    if (degree[e] > 2) x.high_degree.insert(e);
  }

  // Faces of 𝓧 glued along edges outside high_degree. A component touching an
  // ordinary edge of 𝓧-degree one cannot have its boundary inside high_degree;
  // any other component does, and must then have empty boundary.
  std::vector<int> comp(c.face_count(), -1);
  x.high_degree_acyclic = true;
  int next = 0;
  for (FaceId start = 0; start < c.face_count(); ++start) {
    if (!x.faces.contains(start) || comp[start] >= 0) continue;
    std::vector<FaceId> members{start};
    comp[start] = next;
    bool open = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (EdgeId e : c.face_edges(members[i])) {
        if (x.high_degree.contains(e)) continue;
        if (degree[e] == 1) open = true;
        for (FaceId g : c.edge_faces(e)) {
          if (x.faces.contains(g) && comp[g] < 0) {
            comp[g] = next;
            members.push_back(g);
          }
        }
      }
    }
    ++next;
    if (open) continue;
    FaceSet part(c.face_count(), members);
    if (!boundary_of_faces(c, part).empty()) x.high_degree_acyclic = false;
  }
}

}  // namespace

ArtificialBoundary make_artificial_boundary(const ChainComplex3& c, std::vector<FaceSet> reps) {
  const VolumeGraph graph(c);
  // Each pass removes at least one face from the union, so this terminates.
  for (std::size_t pass = 0; pass <= c.face_count(); ++pass) {
    FaceSet all = c.empty_faces();
    for (const auto& rep : reps) all |= rep;
    const VolumeComponents comps = volume_adjacency(graph, all);
    if (comps.count <= 1) break;

    // S = ∂V for the smallest component V of G - 𝓧; S lies inside 𝓧.
    std::vector<std::size_t> sizes(comps.count, 0);
    for (auto label : comps.component) ++sizes[label];
    const auto smallest = static_cast<std::uint32_t>(
        std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
    VolumeSet v = c.empty_volumes();
    for (VolumeId u = 0; u < c.volume_count(); ++u) {
      if (comps.component[u] == smallest) v.insert(u);
    }
    const FaceSet s = boundary_of_volumes(c, v);

    FaceSet t;
    std::size_t first = reps.size();
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (reps[j].intersects(s)) {
        t = reps[j] & s;
        first = j;
        break;
      }
    }
    if (first == reps.size()) {
      throw std::logic_error("make_artificial_boundary: stabilizer support outside every rep");
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (i != first && reps[i].intersects(t)) t &= reps[i];
    }
    for (auto& rep : reps) {
      if (rep.intersects(t)) rep ^= s;
    }
  }
  ArtificialBoundary x;
  x.reps = std::move(reps);
  fill_derived_fields(c, x);
  if (is_cut_set(graph, x.faces)) {
    throw std::runtime_error("make_artificial_boundary: could not remove stabilizer supports");
  }
  return x;
}

ArtificialBoundary torus_artificial_boundary(const ChainComplex3& c, std::array<int, 3> origin) {
  if (c.family().kind != LatticeFamily::kCubicTorus) {
    throw std::invalid_argument("torus_artificial_boundary needs a cubic torus");
  }
  const CubicTorusIndex idx{c.family().dims[0]};
  std::vector<FaceSet> reps;
  for (int a = 0; a < 3; ++a) {
    FaceSet plane = c.empty_faces();
    for (int u = 0; u < idx.L; ++u) {
      for (int w = 0; w < idx.L; ++w) {
        std::array<int, 3> p{};
        p[a] = origin[a];
        p[(a + 1) % 3] = u;
        p[(a + 2) % 3] = w;
        plane.insert(idx.face(p[0], p[1], p[2], a));
      }
    }
    reps.push_back(std::move(plane));
  }
  return make_artificial_boundary(c, std::move(reps));
}

std::vector<ArtificialBoundary> default_boundaries(const ChainComplex3& c,
                                                   const LogicalBasis& basis) {
  if (c.family().kind == LatticeFamily::kCubicTorus) {
    const int h = c.family().dims[0] / 2;
    return {torus_artificial_boundary(c, {0, 0, 0}), torus_artificial_boundary(c, {h, h, h})};
  }
  return {make_artificial_boundary(c, basis.x_reps)};
}

PeriodicDecoder::PeriodicDecoder(const ChainComplex3& c, const LogicalBasis& basis,
                                 DecoderOptions options)
    : PeriodicDecoder(c, default_boundaries(c, basis), options) {}

PeriodicDecoder::PeriodicDecoder(const ChainComplex3& c, std::vector<ArtificialBoundary> boundaries,
                                 DecoderOptions options)
    : c_(&c), graph_(c), boundaries_(std::move(boundaries)), options_(options) {
  if (!c.periodic()) throw std::invalid_argument("PeriodicDecoder needs a periodic lattice");
  if (boundaries_.empty()) throw std::invalid_argument("PeriodicDecoder needs a boundary");
  if (options_.retries < 0) throw std::invalid_argument("retries must be non-negative");
}

Exploration PeriodicDecoder::explore(const ArtificialBoundary& x, const EdgeSet& s) const {
  if (s.universe() != c_->edge_count()) {
    throw std::invalid_argument("explore: syndrome has the wrong universe");
  }
  CutSession session(graph_, x.faces, options_.cut_strategy);
  std::vector<char> skip(c_->face_count(), 0);
  x.faces.for_each([&](FaceId f) { skip[f] = 1; });
  auto r = internal::explore_waves(*c_, std::move(skip), s,
                                   [&](FaceId f) { return !session.test_and_add(f); });
  return {std::move(r.accepted), std::move(r.order), r.waves, r.rejected, r.reseeds};
}

ProjectionOutcome PeriodicDecoder::peel_project(const ArtificialBoundary& x,
                                                const FaceSet& erasure, const EdgeSet& s) const {
  auto r = internal::peel_leaves(*c_, erasure, x.faces, s);
  ProjectionOutcome out;
  out.projected = r.residual.is_subset_of(x.support);
  out.peeled = r.peeled;
  out.estimate = std::move(r.estimate);
  out.residual = std::move(r.residual);
  out.unpeeled = std::move(r.remaining);
  return out;
}

std::optional<FaceSet> PeriodicDecoder::estimate_residual_general(const ArtificialBoundary& x,
                                                                  const EdgeSet& s) const {
  // Grow inside 𝓧, refusing any face that would complete a whole rep, then
  // peel what was grown.
  std::vector<std::vector<std::uint32_t>> member_of(c_->face_count());
  for (std::uint32_t i = 0; i < x.reps.size(); ++i) {
    x.reps[i].for_each([&](FaceId f) { member_of[f].push_back(i); });
  }
  std::vector<std::size_t> missing(x.reps.size());
  for (std::size_t i = 0; i < x.reps.size(); ++i) missing[i] = x.reps[i].weight();

  std::vector<char> skip(c_->face_count(), 1);
  x.faces.for_each([&](FaceId f) { skip[f] = 0; });
  auto grown = internal::explore_waves(*c_, std::move(skip), s, [&](FaceId f) {
    for (auto i : member_of[f]) {
      if (missing[i] == 1) return false;
    }
    for (auto i : member_of[f]) --missing[i];
    return true;
  });
  auto r = internal::peel_leaves(*c_, std::move(grown.accepted), FaceSet(), s);
  if (!r.residual.empty()) return std::nullopt;
  return std::move(r.estimate);
}

std::optional<FaceSet> PeriodicDecoder::estimate_residual_cubic(const ArtificialBoundary& x,
                                                                const EdgeSet& s) const {
  if (!x.reps_disjoint) return std::nullopt;
  FaceSet out = c_->empty_faces();
  std::vector<int> colour(c_->face_count(), -1);
  for (const auto& rep : x.reps) {
    // x_f + x_g = s(e) for every ordinary edge e shared by faces f, g of the
    // plane. Each component is seeded with its lowest face; the first one
    // starts in the estimate.
    std::vector<FaceId> members = rep.ids();
    FaceSet chosen = c_->empty_faces();
    bool first_component = true;
    for (FaceId seed : members) {
      if (colour[seed] >= 0) continue;
      colour[seed] = first_component ? 1 : 0;
      first_component = false;
      std::deque<FaceId> queue{seed};
      while (!queue.empty()) {
        const FaceId f = queue.front();
        queue.pop_front();
        if (colour[f]) chosen.insert(f);
        for (EdgeId e : c_->face_edges(f)) {
          if (x.high_degree.contains(e)) continue;
          const int want = colour[f] ^ static_cast<int>(s.contains(e));
          for (FaceId g : c_->edge_faces(e)) {
            if (g == f || !rep.contains(g)) continue;
            if (colour[g] < 0) {
              colour[g] = want;
              queue.push_back(g);
            } else if (colour[g] != want) {
              return std::nullopt;
            }
          }
        }
      }
    }
    if (2 * chosen.weight() > members.size()) chosen ^= rep;
    out |= chosen;
  }
  if (!(boundary_of_faces(*c_, out) == s)) return std::nullopt;
  return out;
}

std::optional<FaceSet> PeriodicDecoder::estimate_residual(const ArtificialBoundary& x,
                                                          const EdgeSet& s) const {
  if (options_.estimator == ResidualEstimator::kCubic && x.reps_disjoint) {
    return estimate_residual_cubic(x, s);
  }
  return estimate_residual_general(x, s);
}

DecodeOutcome PeriodicDecoder::decode(const EdgeSet& s) const {
  DecodeOutcome out;
  auto& diag = out.diagnostics;
  out.estimate = c_->empty_faces();
  EdgeSet rest = s;
  const ArtificialBoundary* x = nullptr;
  FaceSet unpeeled;
  bool projected = false;
  for (int attempt = 0; attempt <= options_.retries; ++attempt) {
    x = &boundaries_[attempt % boundaries_.size()];
    Exploration ex = explore(*x, rest);
    diag.erasure_size = ex.erasure.weight();
    diag.rejected_faces += ex.rejected;
    diag.waves += ex.waves;
    diag.reseeds += ex.reseeds;
    ProjectionOutcome p = peel_project(*x, ex.erasure, rest);
    diag.peeled += p.peeled;
    out.estimate ^= p.estimate;
    rest = std::move(p.residual);
    unpeeled = std::move(p.unpeeled);
    if (p.projected) {
      projected = true;
      break;
    }
    ++diag.projection_failures;
    if (attempt < options_.retries) diag.retried = true;
  }

  if (!projected) {
    if (!options_.gf2_fallback) {
      out.status = DecodeStatus::kKleinBottleSuspected;
      return out;
    }
    diag.fallback_used = true;
    Gf2Solution sol = solve_syndrome(*c_, rest, unpeeled | x->faces);
    if (sol.status == SolveStatus::kInfeasible) {
      out.status = DecodeStatus::kKleinBottleSuspected;
      return out;
    }
    const FaceSet outside = sol.solution - x->faces;
    out.estimate ^= outside;
    rest ^= boundary_of_faces(*c_, outside);
  }

  std::optional<FaceSet> on_boundary = estimate_residual(*x, rest);
  if (!on_boundary) {
    out.status = DecodeStatus::kResidualSyndrome;
    return out;
  }
  out.estimate ^= *on_boundary;
  out.status = DecodeStatus::kSuccess;
  return out;
}

}  // namespace toric3d
