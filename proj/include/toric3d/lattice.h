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

#ifndef TORIC3D_LATTICE_H_
#define TORIC3D_LATTICE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric3d/id_set.h"

namespace toric3d {

inline constexpr CellId kNoCell = static_cast<CellId>(-1);

/// Compressed row storage for the ragged incidence lists of a complex.
class Incidence {
 public:
  Incidence() = default;
  explicit Incidence(const std::vector<std::vector<CellId>>& rows);

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<const CellId> operator[](std::size_t row) const {
    return {data_.data() + offsets_[row], data_.data() + offsets_[row + 1]};
  }
  /// Row-major transpose with `columns` rows; entries stay in ascending order.
  Incidence transpose(std::size_t columns) const;

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<CellId> data_;
};

enum class LatticeFamily { kCustom, kCubicTorus, kClosedSlab, kRoughSlab };

/// Which built-in construction produced a complex. Custom lattices carry no
/// geometry and only what their file declares.
struct FamilyInfo {
  LatticeFamily kind = LatticeFamily::kCustom;
  std::array<int, 3> dims = {0, 0, 0};

  friend bool operator==(const FamilyInfo&, const FamilyInfo&) = default;
};

std::string family_name(LatticeFamily kind);

/// Immutable 3D cell complex: vertices, edges (one endpoint for a partial
/// edge), faces as edge sets and volumes as face sets, together with the
/// derived coboundary maps edge -> faces and face -> volumes.
class ChainComplex3 {
 public:
  ChainComplex3(std::size_t vertex_count, std::vector<std::vector<VertexId>> edges,
                std::vector<std::vector<EdgeId>> faces, std::vector<std::vector<FaceId>> volumes,
                bool periodic, FamilyInfo family = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t volume_count() const { return volumes_.size(); }
  bool periodic() const { return periodic_; }
  const FamilyInfo& family() const { return family_; }

  std::span<const VertexId> endpoints(EdgeId e) const { return edges_[e]; }
  bool is_partial(EdgeId e) const { return edges_[e].size() == 1; }
  std::span<const EdgeId> face_edges(FaceId f) const { return faces_[f]; }
  std::span<const FaceId> volume_faces(VolumeId v) const { return volumes_[v]; }
  /// Faces whose boundary contains `e`.
  std::span<const FaceId> edge_faces(EdgeId e) const { return edge_faces_[e]; }
  /// Volumes whose boundary contains `f`.
  std::span<const VolumeId> face_volumes(FaceId f) const { return face_volumes_[f]; }

  FaceSet empty_faces() const { return FaceSet(face_count()); }
  EdgeSet empty_edges() const { return EdgeSet(edge_count()); }
  VolumeSet empty_volumes() const { return VolumeSet(volume_count()); }

 private:
  std::size_t vertex_count_;
  Incidence edges_;
  Incidence faces_;
  Incidence volumes_;
  Incidence edge_faces_;
  Incidence face_volumes_;
  bool periodic_;
  FamilyInfo family_;
};

/// Id arithmetic for the L x L x L periodic cubic lattice. Vertex and volume
/// (x, y, z) share the index x + L(y + Lz); the edge along `axis` leaving a
/// vertex and the face normal to `axis` at a vertex both use 3*index + axis.
struct CubicTorusIndex {
  int L;

  CellId site(int x, int y, int z) const;
  CellId edge(int x, int y, int z, int axis) const { return 3 * site(x, y, z) + axis; }
  CellId face(int x, int y, int z, int normal) const { return 3 * site(x, y, z) + normal; }
  CellId volume(int x, int y, int z) const { return site(x, y, z); }
  std::array<int, 3> coords(CellId site_index) const;
};

ChainComplex3 build_cubic_torus(int L);

enum class SlabBoundary {
  /// Every outer face kept; all edges full. Encodes no logical qubit.
  kClosed,
  /// Top and bottom faces kept; the four side walls removed so edges that
  /// crossed them become partial. Two boundary classes, one logical qubit.
  kRoughSides,
};

ChainComplex3 build_boundary_slab(int lx, int ly, int lz, SlabBoundary kind = SlabBoundary::kClosed);

/// Rebuilds the built-in lattice named by `family`.
ChainComplex3 build_family(const FamilyInfo& family);

/// Face id lookup for the built-in slabs by cell coordinates and normal axis;
/// kNoCell when the face is absent (removed side wall or out of range).
CellId slab_face(const ChainComplex3& slab, int x, int y, int z, int normal);
CellId slab_volume(const ChainComplex3& slab, int x, int y, int z);

enum class ViolationKind {
  kFaceOverIncident,   // |iota(f)| > 2
  kOddVolumeEdge,      // an edge meets a volume boundary an odd number of times
  kEdgeNotFacePath,    // iota(e) cannot be ordered as one face path or face cycle
  kFaceBoundaryShape,  // face boundary is neither a closed loop nor an open path
                       // ending in two partial edges
  kDuplicateIncidence, // a cell lists the same sub-cell twice
};

struct Violation {
  ViolationKind kind;
  CellId cell;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// No-interior-boundary is guaranteed by construction for built-in families
  /// and not checked for anything else.
  bool interior_boundary_free_verified = false;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const ChainComplex3& c);

/// Symmetric difference of the face boundaries.
EdgeSet boundary_of_faces(const ChainComplex3& c, const FaceSet& faces);
/// Symmetric difference of the edge coboundaries.
FaceSet coboundary_of_edges(const ChainComplex3& c, const EdgeSet& edges);
FaceSet boundary_of_volumes(const ChainComplex3& c, const VolumeSet& volumes);

/// A face path: consecutive faces share the listed interior volume.
struct FacePath {
  std::vector<FaceId> faces;
  std::vector<VolumeId> interior;
  std::optional<VolumeId> start;
  std::optional<VolumeId> end;
};

/// Empty string when `path` satisfies the face-path conditions on `c`,
/// otherwise a description of the first problem.
std::string check_face_path(const ChainComplex3& c, const FacePath& path);

/// Node/arc view over volumes: arcs are faces with exactly two incident
/// volumes. Augmentation adds extra (dummy) nodes without touching the complex.
class VolumeGraph {
 public:
  explicit VolumeGraph(const ChainComplex3& c);
  VolumeGraph(const ChainComplex3& c, std::span<const FaceSet> dummy_boundaries);

  std::size_t node_count() const { return node_faces_.size(); }
  std::size_t face_count() const { return arcs_.size(); }
  /// Endpoints of the arc carried by face f, or {kNoCell, kNoCell}.
  std::array<CellId, 2> arc(FaceId f) const { return arcs_[f]; }
  bool is_arc(FaceId f) const { return arcs_[f][0] != kNoCell; }
  std::span<const FaceId> node_faces(CellId node) const { return node_faces_[node]; }
  CellId other_end(FaceId f, CellId node) const {
    return arcs_[f][0] == node ? arcs_[f][1] : arcs_[f][0];
  }

 private:
  void finish(std::vector<std::vector<CellId>>& node_faces);

  std::vector<std::array<CellId, 2>> arcs_;
  Incidence node_faces_;
};

struct VolumeComponents {
  std::size_t count = 0;
  std::vector<std::uint32_t> component;  // per graph node
};

/// Connected components of the volume graph after removing `excluded` faces.
VolumeComponents volume_adjacency(const VolumeGraph& graph, const FaceSet& excluded);
VolumeComponents volume_adjacency(const ChainComplex3& c, const FaceSet& excluded);

}  // namespace toric3d

#endif  // TORIC3D_LATTICE_H_
