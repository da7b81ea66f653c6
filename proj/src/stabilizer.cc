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

#include "toric3d/stabilizer.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace toric3d {

EdgeSet syndrome(const ChainComplex3& c, const FaceSet& error) {
  return boundary_of_faces(c, error);
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

BoundaryClasses face_equivalence_classes(const ChainComplex3& c) {
  // Terminal faces of an open face path iota(e) are identified by B_e itself;
  // the transitive closure of those identifications is the partition.
  DisjointSets sets(c.face_count());
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    FaceId first = kNoCell;
    for (FaceId f : c.edge_faces(e)) {
      if (c.face_volumes(f).size() != 1) continue;
      if (first == kNoCell) {
        first = f;
      } else {
        sets.unite(first, f);
      }
    }
  }
  BoundaryClasses out;
  out.class_of.assign(c.face_count(), -1);
  std::vector<int> class_of_root(c.face_count(), -1);
  for (FaceId f = 0; f < c.face_count(); ++f) {
    if (c.face_volumes(f).size() != 1) continue;
    const std::size_t root = sets.find(f);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<int>(out.classes.size());
      out.classes.emplace_back(c.face_count());
    }
    out.class_of[f] = class_of_root[root];
    out.classes[class_of_root[root]].insert(f);
  }
  return out;
}

AugmentedLattice augment(const ChainComplex3& c, BoundaryClasses classes) {
  VolumeGraph graph(c, classes.classes);
  return AugmentedLattice{std::move(classes), std::move(graph)};
}

namespace {

LogicalBasis torus_basis(const ChainComplex3& c) {
  const int L = c.family().dims[0];
  const CubicTorusIndex idx{L};
  LogicalBasis basis;
  for (int a = 0; a < 3; ++a) {
    FaceSet plane = c.empty_faces();
    FaceSet column = c.empty_faces();
    for (int u = 0; u < L; ++u) {
      for (int w = 0; w < L; ++w) {
        std::array<int, 3> p{};
        p[a] = 0;
        p[(a + 1) % 3] = u;
        p[(a + 2) % 3] = w;
        plane.insert(idx.face(p[0], p[1], p[2], a));
      }
      std::array<int, 3> q{};
      q[a] = u;
      column.insert(idx.face(q[0], q[1], q[2], a));
    }
    basis.x_reps.push_back(std::move(plane));
    basis.z_reps.push_back(std::move(column));
  }
  return basis;
}

// Shortest face path from the volume under `from` to any volume carrying a
// face of `to`, entering through `from` and leaving through that face.
FaceSet face_path_between(const ChainComplex3& c, FaceId from, const FaceSet& to) {
  const VolumeGraph graph(c);
  const VolumeId start = c.face_volumes(from)[0];
  std::vector<FaceId> via(c.volume_count(), kNoCell);
  std::vector<char> seen(c.volume_count(), 0);
  std::deque<VolumeId> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    const VolumeId v = queue.front();
    queue.pop_front();
    for (FaceId g : c.volume_faces(v)) {
      if (to.contains(g)) {
        FaceSet path = c.empty_faces();
        path.insert(g);
        path.insert(from);
        for (VolumeId u = v; u != start;) {
          path.insert(via[u]);
          u = graph.other_end(via[u], u);
        }
        return path;
      }
    }
    for (FaceId g : graph.node_faces(v)) {
      const VolumeId w = graph.other_end(g, v);
      if (!seen[w]) {
        seen[w] = 1;
        via[w] = g;
        queue.push_back(w);
      }
    }
  }
  throw std::runtime_error("boundary classes are not connected by any face path");
}

LogicalBasis boundary_basis(const ChainComplex3& c, const BoundaryClasses& classes) {
  LogicalBasis basis;
  if (classes.count() < 2) return basis;
  const FaceSet& last = classes.classes.back();
  for (std::size_t i = 0; i + 1 < classes.count(); ++i) {
    basis.x_reps.push_back(classes.classes[i]);
    const FaceId from = static_cast<FaceId>(classes.classes[i].next(0));
    basis.z_reps.push_back(face_path_between(c, from, last));
  }
  return basis;
}

}  // namespace

LogicalBasis logical_basis(const ChainComplex3& c, const BoundaryClasses& classes) {
  if (c.family().kind == LatticeFamily::kCubicTorus) return torus_basis(c);
  if (!c.periodic()) return boundary_basis(c, classes);
  throw std::invalid_argument(
      "no logical basis known for this periodic lattice; declare xlogical/zlogical sections");
}

LogicalBasis basis_from_lists(const ChainComplex3& c,
                              const std::vector<std::vector<FaceId>>& xlogical,
                              const std::vector<std::vector<FaceId>>& zlogical) {
  if (xlogical.size() != zlogical.size()) {
    throw std::invalid_argument("xlogical and zlogical counts differ");
  }
  LogicalBasis basis;
  for (const auto& ids : xlogical) basis.x_reps.emplace_back(c.face_count(), ids);
  for (const auto& ids : zlogical) basis.z_reps.emplace_back(c.face_count(), ids);
  if (auto msg = check_logical_basis(c, basis); !msg.empty()) throw std::invalid_argument(msg);
  return basis;
}

std::string check_logical_basis(const ChainComplex3& c, const LogicalBasis& basis) {
  if (basis.x_reps.size() != basis.z_reps.size()) return "x and z representative counts differ";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!syndrome(c, basis.x_reps[i]).empty()) {
      return "x representative " + std::to_string(i) + " has a nonzero syndrome";
    }
    for (VolumeId v = 0; v < c.volume_count(); ++v) {
      std::size_t hits = 0;
      for (FaceId f : c.volume_faces(v)) hits += basis.z_reps[i].contains(f);
      if (hits % 2) {
        return "z representative " + std::to_string(i) + " meets volume " + std::to_string(v) +
               " oddly";
      }
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const bool odd = (basis.x_reps[i] & basis.z_reps[j]).weight() % 2 == 1;
      if (odd != (i == j)) {
        return "pairing of x " + std::to_string(i) + " with z " + std::to_string(j) +
               " is not the identity";
      }
    }
  }
  return {};
}

bool HomologyClass::trivial() const {
  return std::all_of(parity.begin(), parity.end(), [](std::uint8_t b) { return b == 0; });
}

std::string HomologyClass::str() const {
  std::string out;
  for (auto b : parity) out += b ? '1' : '0';
  return out.empty() ? "-" : out;
}

HomologyClass classify_zero_syndrome(const ChainComplex3& c, const LogicalBasis& basis,
                                     const FaceSet& residual) {
  if (!syndrome(c, residual).empty()) {
    throw std::logic_error("classify_zero_syndrome: residual has a nonzero syndrome");
  }
  HomologyClass out;
  for (const auto& z : basis.z_reps) {
    out.parity.push_back(static_cast<std::uint8_t>((residual & z).weight() % 2));
  }
  return out;
}

}  // namespace toric3d
