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

#include "toric3d/lattice.h"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace toric3d {

Incidence::Incidence(const std::vector<std::vector<CellId>>& rows) {
  offsets_.reserve(rows.size() + 1);
  offsets_.push_back(0);
  for (const auto& row : rows) {
    data_.insert(data_.end(), row.begin(), row.end());
    offsets_.push_back(static_cast<std::uint32_t>(data_.size()));
  }
}

Incidence Incidence::transpose(std::size_t columns) const {
  std::vector<std::vector<CellId>> rows(columns);
  for (std::size_t r = 0; r < size(); ++r) {
    for (CellId c : (*this)[r]) {
      if (c >= columns) throw std::out_of_range("incidence column out of range");
      rows[c].push_back(static_cast<CellId>(r));
    }
  }
  return Incidence(rows);
}

std::string family_name(LatticeFamily kind) {
  switch (kind) {
    case LatticeFamily::kCubicTorus: return "cubic-torus";
    case LatticeFamily::kClosedSlab: return "slab";
    case LatticeFamily::kRoughSlab: return "slab-rough";
    case LatticeFamily::kCustom: break;
  }
  return "custom";
}

ChainComplex3::ChainComplex3(std::size_t vertex_count, std::vector<std::vector<VertexId>> edges,
                             std::vector<std::vector<EdgeId>> faces,
                             std::vector<std::vector<FaceId>> volumes, bool periodic,
                             FamilyInfo family)
    : vertex_count_(vertex_count), periodic_(periodic), family_(family) {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& ends = edges[e];
    if (ends.empty() || ends.size() > 2) {
      throw std::invalid_argument("edge " + std::to_string(e) + " must have one or two endpoints");
    }
    for (VertexId v : ends) {
      if (v >= vertex_count) {
        throw std::invalid_argument("edge " + std::to_string(e) + " references missing vertex " +
                                    std::to_string(v));
      }
    }
    if (ends.size() == 2 && ends[0] == ends[1]) {
      throw std::invalid_argument("edge " + std::to_string(e) + " is a loop");
    }
  }
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (EdgeId e : faces[f]) {
      if (e >= edges.size()) {
        throw std::invalid_argument("face " + std::to_string(f) + " references missing edge " +
                                    std::to_string(e));
      }
    }
  }
  for (std::size_t v = 0; v < volumes.size(); ++v) {
    for (FaceId f : volumes[v]) {
      if (f >= faces.size()) {
        throw std::invalid_argument("volume " + std::to_string(v) + " references missing face " +
                                    std::to_string(f));
      }
    }
  }
  edges_ = Incidence(edges);
  faces_ = Incidence(faces);
  volumes_ = Incidence(volumes);
  edge_faces_ = faces_.transpose(edges.size());
  face_volumes_ = volumes_.transpose(faces.size());
}

// ---------------------------------------------------------------------------
// Cubic torus

CellId CubicTorusIndex::site(int x, int y, int z) const {
  auto wrap = [this](int a) { return ((a % L) + L) % L; };
  return static_cast<CellId>(wrap(x) + L * (wrap(y) + L * wrap(z)));
}

std::array<int, 3> CubicTorusIndex::coords(CellId site_index) const {
  int s = static_cast<int>(site_index);
  return {s % L, (s / L) % L, s / (L * L)};
}

ChainComplex3 build_cubic_torus(int L) {
  if (L < 2) throw std::invalid_argument("cubic torus needs L >= 2, got " + std::to_string(L));
  const CubicTorusIndex idx{L};
  const std::size_t sites = static_cast<std::size_t>(L) * L * L;
  std::vector<std::vector<VertexId>> edges(3 * sites);
  std::vector<std::vector<EdgeId>> faces(3 * sites);
  std::vector<std::vector<FaceId>> volumes(sites);
  constexpr int kStep[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int z = 0; z < L; ++z) {
    for (int y = 0; y < L; ++y) {
      for (int x = 0; x < L; ++x) {
        const CellId s = idx.site(x, y, z);
        for (int a = 0; a < 3; ++a) {
          const auto& d = kStep[a];
          edges[idx.edge(x, y, z, a)] = {s, idx.site(x + d[0], y + d[1], z + d[2])};
          // Face normal to a, spanned by the two other axes b < c.
          const int b = (a + 1) % 3 < (a + 2) % 3 ? (a + 1) % 3 : (a + 2) % 3;
          const int c = 3 - a - b;
          const auto& db = kStep[b];
          const auto& dc = kStep[c];
          faces[idx.face(x, y, z, a)] = {idx.edge(x, y, z, b), idx.edge(x, y, z, c),
                                         idx.edge(x + db[0], y + db[1], z + db[2], c),
                                         idx.edge(x + dc[0], y + dc[1], z + dc[2], b)};
        }
        auto& vol = volumes[idx.volume(x, y, z)];
        for (int a = 0; a < 3; ++a) {
          const auto& d = kStep[a];
          vol.push_back(idx.face(x, y, z, a));
          vol.push_back(idx.face(x + d[0], y + d[1], z + d[2], a));
        }
      }
    }
  }
  return ChainComplex3(sites, std::move(edges), std::move(faces), std::move(volumes), true,
                       FamilyInfo{LatticeFamily::kCubicTorus, {L, L, L}});
}

// ---------------------------------------------------------------------------
// Slabs

namespace {

// Coordinate bookkeeping shared by the slab builder and the id lookups.
// Points (x, y, z) range over [0, L] per axis, cells over [0, L).
class SlabLayout {
 public:
  SlabLayout(int lx, int ly, int lz, SlabBoundary kind) : n_{lx, ly, lz}, kind_(kind) {
    if (lx < 1 || ly < 1 || lz < 1) {
      throw std::invalid_argument("slab sides must be >= 1");
    }
    if (kind == SlabBoundary::kRoughSides && (lx < 2 || ly < 2)) {
      throw std::invalid_argument("rough-sided slab needs Lx, Ly >= 2");
    }
    build();
  }

  ChainComplex3 complex() && {
    const LatticeFamily fam =
        kind_ == SlabBoundary::kClosed ? LatticeFamily::kClosedSlab : LatticeFamily::kRoughSlab;
    return ChainComplex3(vertex_count_, std::move(edges_), std::move(faces_), std::move(volumes_),
                         false, FamilyInfo{fam, n_});
  }

  CellId face(int x, int y, int z, int normal) const { return lookup(face_ids_, x, y, z, normal); }
  CellId volume(int x, int y, int z) const {
    if (!in_range(x, y, z, n_[0] - 1, n_[1] - 1, n_[2] - 1)) return kNoCell;
    return volume_ids_[cell_index(x, y, z)];
  }

 private:
  static bool in_range(int x, int y, int z, int mx, int my, int mz) {
    return x >= 0 && y >= 0 && z >= 0 && x <= mx && y <= my && z <= mz;
  }
  std::size_t point_index(int x, int y, int z) const {
    return static_cast<std::size_t>(x + (n_[0] + 1) * (y + (n_[1] + 1) * z));
  }
  std::size_t cell_index(int x, int y, int z) const {
    return static_cast<std::size_t>(x + n_[0] * (y + n_[1] * z));
  }
  CellId lookup(const std::vector<CellId>& table, int x, int y, int z, int axis) const {
    if (axis < 0 || axis > 2 || !in_range(x, y, z, n_[0], n_[1], n_[2])) return kNoCell;
    return table[3 * point_index(x, y, z) + axis];
  }

  // Rough sides drop every point on the x and y walls.
  bool point_exists(int x, int y, int z) const {
    if (!in_range(x, y, z, n_[0], n_[1], n_[2])) return false;
    if (kind_ == SlabBoundary::kClosed) return true;
    return x > 0 && x < n_[0] && y > 0 && y < n_[1];
  }

  void build() {
    const std::size_t points = static_cast<std::size_t>(n_[0] + 1) * (n_[1] + 1) * (n_[2] + 1);
    std::vector<CellId> vertex_ids(points, kNoCell);
    edge_ids_.assign(3 * points, kNoCell);
    face_ids_.assign(3 * points, kNoCell);
    volume_ids_.assign(static_cast<std::size_t>(n_[0]) * n_[1] * n_[2], kNoCell);
    constexpr int kStep[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    for (int z = 0; z <= n_[2]; ++z)
      for (int y = 0; y <= n_[1]; ++y)
        for (int x = 0; x <= n_[0]; ++x)
          if (point_exists(x, y, z)) vertex_ids[point_index(x, y, z)] = vertex_count_++;

    // An edge survives when at least one endpoint does and it does not lie
    // inside a removed side wall.
    for (int z = 0; z <= n_[2]; ++z) {
      for (int y = 0; y <= n_[1]; ++y) {
        for (int x = 0; x <= n_[0]; ++x) {
          for (int a = 0; a < 3; ++a) {
            const auto& d = kStep[a];
            const int x2 = x + d[0], y2 = y + d[1], z2 = z + d[2];
            if (!in_range(x2, y2, z2, n_[0], n_[1], n_[2])) continue;
            if (kind_ == SlabBoundary::kRoughSides && on_side_wall_edge(x, y, a)) continue;
            std::vector<VertexId> ends;
            if (point_exists(x, y, z)) ends.push_back(vertex_ids[point_index(x, y, z)]);
            if (point_exists(x2, y2, z2)) ends.push_back(vertex_ids[point_index(x2, y2, z2)]);
            if (ends.empty()) continue;
            edge_ids_[3 * point_index(x, y, z) + a] = static_cast<CellId>(edges_.size());
            edges_.push_back(std::move(ends));
          }
        }
      }
    }

    for (int z = 0; z <= n_[2]; ++z) {
      for (int y = 0; y <= n_[1]; ++y) {
        for (int x = 0; x <= n_[0]; ++x) {
          for (int a = 0; a < 3; ++a) {
            const int b = a == 0 ? 1 : 0;
            const int c = a == 2 ? 1 : 2;
            const auto& db = kStep[b];
            const auto& dc = kStep[c];
            // The face spans [x, x+db+dc] etc.; it must fit inside the block.
            if (!in_range(x + db[0] + dc[0], y + db[1] + dc[1], z + db[2] + dc[2], n_[0], n_[1],
                          n_[2]))
              continue;
            if (kind_ == SlabBoundary::kRoughSides && on_side_wall_face(x, y, a)) continue;
            std::vector<EdgeId> fe;
            for (CellId e : {edge_at(x, y, z, b), edge_at(x, y, z, c),
                             edge_at(x + db[0], y + db[1], z + db[2], c),
                             edge_at(x + dc[0], y + dc[1], z + dc[2], b)}) {
              if (e != kNoCell) fe.push_back(e);
            }
            face_ids_[3 * point_index(x, y, z) + a] = static_cast<CellId>(faces_.size());
            faces_.push_back(std::move(fe));
          }
        }
      }
    }

    for (int z = 0; z < n_[2]; ++z) {
      for (int y = 0; y < n_[1]; ++y) {
        for (int x = 0; x < n_[0]; ++x) {
          std::vector<FaceId> vf;
          for (int a = 0; a < 3; ++a) {
            const auto& d = kStep[a];
            for (CellId f : {face(x, y, z, a), face(x + d[0], y + d[1], z + d[2], a)}) {
              if (f != kNoCell) vf.push_back(f);
            }
          }
          volume_ids_[cell_index(x, y, z)] = static_cast<CellId>(volumes_.size());
          volumes_.push_back(std::move(vf));
        }
      }
    }
  }

  CellId edge_at(int x, int y, int z, int axis) const { return lookup(edge_ids_, x, y, z, axis); }

  // Edges along y on an x wall, along x on a y wall, and vertical edges on
  // either wall lie inside the removed walls.
  bool on_side_wall_edge(int x, int y, int axis) const {
    const bool x_wall = x == 0 || x == n_[0];
    const bool y_wall = y == 0 || y == n_[1];
    if (axis == 0) return y_wall;
    if (axis == 1) return x_wall;
    return x_wall || y_wall;
  }
  bool on_side_wall_face(int x, int y, int normal) const {
    if (normal == 0) return x == 0 || x == n_[0];
    if (normal == 1) return y == 0 || y == n_[1];
    return false;
  }

  std::array<int, 3> n_;
  SlabBoundary kind_;
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<EdgeId>> faces_;
  std::vector<std::vector<FaceId>> volumes_;
  std::vector<CellId> edge_ids_;
  std::vector<CellId> face_ids_;
  std::vector<CellId> volume_ids_;
};

SlabLayout layout_of(const ChainComplex3& slab) {
  const auto& fam = slab.family();
  if (fam.kind != LatticeFamily::kClosedSlab && fam.kind != LatticeFamily::kRoughSlab) {
    throw std::invalid_argument("complex is not a built-in slab");
  }
  return SlabLayout(fam.dims[0], fam.dims[1], fam.dims[2],
                    fam.kind == LatticeFamily::kClosedSlab ? SlabBoundary::kClosed
                                                           : SlabBoundary::kRoughSides);
}

}  // namespace

ChainComplex3 build_boundary_slab(int lx, int ly, int lz, SlabBoundary kind) {
  return SlabLayout(lx, ly, lz, kind).complex();
}

ChainComplex3 build_family(const FamilyInfo& family) {
  switch (family.kind) {
    case LatticeFamily::kCubicTorus: return build_cubic_torus(family.dims[0]);
    case LatticeFamily::kClosedSlab:
      return build_boundary_slab(family.dims[0], family.dims[1], family.dims[2],
                                 SlabBoundary::kClosed);
    case LatticeFamily::kRoughSlab:
      return build_boundary_slab(family.dims[0], family.dims[1], family.dims[2],
                                 SlabBoundary::kRoughSides);
    case LatticeFamily::kCustom: break;
  }
  throw std::invalid_argument("custom lattices cannot be rebuilt from a family descriptor");
}

CellId slab_face(const ChainComplex3& slab, int x, int y, int z, int normal) {
  return layout_of(slab).face(x, y, z, normal);
}

CellId slab_volume(const ChainComplex3& slab, int x, int y, int z) {
  return layout_of(slab).volume(x, y, z);
}

// ---------------------------------------------------------------------------
// Validation

namespace {

bool has_duplicates(std::span<const CellId> ids) {
  std::vector<CellId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

// Faces of iota(e) are nodes; every volume touching them must hold exactly two
// of them, and those pairs must link all faces into one path or one cycle.
std::string check_edge_face_path(const ChainComplex3& c, EdgeId e) {
  const auto faces = c.edge_faces(e);
  if (faces.empty()) return "edge has no incident faces";
  std::map<VolumeId, std::vector<FaceId>> by_volume;
  for (FaceId f : faces) {
    for (VolumeId v : c.face_volumes(f)) by_volume[v].push_back(f);
  }
  std::unordered_map<FaceId, std::vector<FaceId>> links;
  for (const auto& [v, members] : by_volume) {
    if (members.size() != 2) {
      return "volume " + std::to_string(v) + " holds " + std::to_string(members.size()) +
             " faces of the edge coboundary";
    }
    links[members[0]].push_back(members[1]);
    links[members[1]].push_back(members[0]);
  }
  std::size_t terminals = 0;
  for (FaceId f : faces) {
    const std::size_t deg = c.face_volumes(f).size();
    if (deg == 1) ++terminals;
    if (deg == 0) return "face " + std::to_string(f) + " lies on no volume";
  }
  if (terminals != 0 && terminals != 2) {
    return std::to_string(terminals) + " degree-one faces in the edge coboundary";
  }
  // Connectivity of the face/volume chain.
  std::vector<FaceId> stack{faces[0]};
  std::vector<FaceId> seen{faces[0]};
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    for (FaceId g : links[f]) {
      if (std::find(seen.begin(), seen.end(), g) == seen.end()) {
        seen.push_back(g);
        stack.push_back(g);
      }
    }
  }
  if (seen.size() != faces.size()) return "edge coboundary splits into disjoint face paths";
  return {};
}

std::string check_face_boundary(const ChainComplex3& c, FaceId f) {
  const auto edges = c.face_edges(f);
  if (edges.empty()) return "face has empty boundary";
  std::unordered_map<VertexId, int> degree;
  std::size_t partial = 0;
  for (EdgeId e : edges) {
    if (c.is_partial(e)) ++partial;
    for (VertexId v : c.endpoints(e)) ++degree[v];
  }
  if (partial != 0 && partial != 2) {
    return "boundary has " + std::to_string(partial) + " partial edges";
  }
  for (const auto& [v, d] : degree) {
    if (d != 2) return "vertex " + std::to_string(v) + " has degree " + std::to_string(d);
  }
  // All degrees two: the boundary is a disjoint union of loops/paths. Require
  // a single component.
  std::unordered_map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : edges)
    for (VertexId v : c.endpoints(e)) at[v].push_back(e);
  std::vector<EdgeId> stack{edges[0]};
  std::vector<EdgeId> seen{edges[0]};
  while (!stack.empty()) {
    EdgeId e = stack.back();
    stack.pop_back();
    for (VertexId v : c.endpoints(e)) {
      for (EdgeId g : at[v]) {
        if (std::find(seen.begin(), seen.end(), g) == seen.end()) {
          seen.push_back(g);
          stack.push_back(g);
        }
      }
    }
  }
  if (seen.size() != edges.size()) return "boundary is a disjoint union of paths";
  return {};
}

}  // namespace

ValidationReport validate(const ChainComplex3& c) {
  ValidationReport report;
  report.interior_boundary_free_verified = c.family().kind != LatticeFamily::kCustom;
  auto add = [&](ViolationKind kind, CellId cell, std::string msg) {
    report.violations.push_back({kind, cell, std::move(msg)});
  };

  for (FaceId f = 0; f < c.face_count(); ++f) {
    if (has_duplicates(c.face_edges(f))) add(ViolationKind::kDuplicateIncidence, f, "face " + std::to_string(f) + " repeats an edge");
    if (c.face_volumes(f).size() > 2) {
      add(ViolationKind::kFaceOverIncident, f,
          "face " + std::to_string(f) + " is incident on " +
              std::to_string(c.face_volumes(f).size()) + " volumes");
    }
    if (auto msg = check_face_boundary(c, f); !msg.empty()) {
      add(ViolationKind::kFaceBoundaryShape, f, "face " + std::to_string(f) + ": " + msg);
    }
  }
  for (VolumeId v = 0; v < c.volume_count(); ++v) {
    if (has_duplicates(c.volume_faces(v))) {
      add(ViolationKind::kDuplicateIncidence, v, "volume " + std::to_string(v) + " repeats a face");
      continue;
    }
    std::map<EdgeId, int> count;
    for (FaceId f : c.volume_faces(v))
      for (EdgeId e : c.face_edges(f)) ++count[e];
    for (const auto& [e, n] : count) {
      if (n % 2 != 0) {
        add(ViolationKind::kOddVolumeEdge, v,
            "volume " + std::to_string(v) + " meets edge " + std::to_string(e) + " " +
                std::to_string(n) + " times");
        break;
      }
    }
  }
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    if (auto msg = check_edge_face_path(c, e); !msg.empty()) {
      add(ViolationKind::kEdgeNotFacePath, e,
          "edge " + std::to_string(e) + " violates the face-path condition (L2): " + msg);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Boundary maps

EdgeSet boundary_of_faces(const ChainComplex3& c, const FaceSet& faces) {
  if (faces.universe() != c.face_count()) throw std::invalid_argument("face set size mismatch");
  EdgeSet out = c.empty_edges();
  faces.for_each([&](FaceId f) {
    for (EdgeId e : c.face_edges(f)) out.toggle(e);
  });
  return out;
}

FaceSet coboundary_of_edges(const ChainComplex3& c, const EdgeSet& edges) {
  if (edges.universe() != c.edge_count()) throw std::invalid_argument("edge set size mismatch");
  FaceSet out = c.empty_faces();
  edges.for_each([&](EdgeId e) {
    for (FaceId f : c.edge_faces(e)) out.toggle(f);
  });
  return out;
}

FaceSet boundary_of_volumes(const ChainComplex3& c, const VolumeSet& volumes) {
  if (volumes.universe() != c.volume_count()) {
    throw std::invalid_argument("volume set size mismatch");
  }
  FaceSet out = c.empty_faces();
  volumes.for_each([&](VolumeId v) {
    for (FaceId f : c.volume_faces(v)) out.toggle(f);
  });
  return out;
}

std::string check_face_path(const ChainComplex3& c, const FacePath& path) {
  if (path.faces.empty()) return "empty face path";
  if (path.interior.size() + 1 != path.faces.size()) return "interior volume count mismatch";
  auto on = [&](FaceId f, VolumeId v) {
    auto vols = c.face_volumes(f);
    return std::find(vols.begin(), vols.end(), v) != vols.end();
  };
  for (std::size_t i = 0; i < path.interior.size(); ++i) {
    if (!on(path.faces[i], path.interior[i]) || !on(path.faces[i + 1], path.interior[i])) {
      return "faces " + std::to_string(i) + " and " + std::to_string(i + 1) +
             " do not share their interior volume";
    }
  }
  std::vector<VolumeId> sorted = path.interior;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "interior volumes repeat";
  }
  auto interior_or_end = [&](VolumeId v) {
    return std::binary_search(sorted.begin(), sorted.end(), v) || path.start == v || path.end == v;
  };
  if (path.start && !on(path.faces.front(), *path.start)) return "start volume not on first face";
  if (path.end && !on(path.faces.back(), *path.end)) return "end volume not on last face";
  for (FaceId f : path.faces) {
    for (VolumeId v : c.face_volumes(f)) {
      if (!interior_or_end(v)) return "face " + std::to_string(f) + " touches a foreign volume";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Volume graph

VolumeGraph::VolumeGraph(const ChainComplex3& c) : VolumeGraph(c, {}) {}

VolumeGraph::VolumeGraph(const ChainComplex3& c, std::span<const FaceSet> dummy_boundaries) {
  const std::size_t nodes = c.volume_count() + dummy_boundaries.size();
  std::vector<std::vector<CellId>> node_faces(nodes);
  std::vector<std::vector<CellId>> ends(c.face_count());
  for (FaceId f = 0; f < c.face_count(); ++f) {
    for (VolumeId v : c.face_volumes(f)) ends[f].push_back(v);
  }
  for (std::size_t i = 0; i < dummy_boundaries.size(); ++i) {
    dummy_boundaries[i].for_each(
        [&](FaceId f) { ends[f].push_back(static_cast<CellId>(c.volume_count() + i)); });
  }
  arcs_.assign(c.face_count(), {kNoCell, kNoCell});
  for (FaceId f = 0; f < c.face_count(); ++f) {
    if (ends[f].size() != 2) continue;
    arcs_[f] = {ends[f][0], ends[f][1]};
    node_faces[ends[f][0]].push_back(f);
    if (ends[f][1] != ends[f][0]) node_faces[ends[f][1]].push_back(f);
  }
  finish(node_faces);
}

void VolumeGraph::finish(std::vector<std::vector<CellId>>& node_faces) {
  node_faces_ = Incidence(node_faces);
}

VolumeComponents volume_adjacency(const VolumeGraph& graph, const FaceSet& excluded) {
  VolumeComponents out;
  out.component.assign(graph.node_count(), static_cast<std::uint32_t>(-1));
  std::deque<CellId> queue;
  for (CellId start = 0; start < graph.node_count(); ++start) {
    if (out.component[start] != static_cast<std::uint32_t>(-1)) continue;
    const auto label = static_cast<std::uint32_t>(out.count++);
    out.component[start] = label;
    queue.push_back(start);
    while (!queue.empty()) {
      CellId u = queue.front();
      queue.pop_front();
      for (FaceId f : graph.node_faces(u)) {
        if (excluded.contains(f)) continue;
        CellId w = graph.other_end(f, u);
        if (out.component[w] == static_cast<std::uint32_t>(-1)) {
          out.component[w] = label;
          queue.push_back(w);
        }
      }
    }
  }
  return out;
}

VolumeComponents volume_adjacency(const ChainComplex3& c, const FaceSet& excluded) {
  return volume_adjacency(VolumeGraph(c), excluded);
}

}  // namespace toric3d
