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

#include "toric3d/oracle.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace toric3d {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  if (value) {
    row(r)[c / 64] |= mask;
  } else {
    row(r)[c / 64] &= ~mask;
  }
}

std::vector<std::size_t> Gf2Matrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t p = lead;
    while (p < rows_ && !get(p, c)) ++p;
    if (p == rows_) continue;
    if (p != lead) {
      std::swap_ranges(row(p), row(p) + words_, row(lead));
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != lead && get(r, c)) {
        std::uint64_t* dst = row(r);
        const std::uint64_t* src = row(lead);
        for (std::size_t w = c / 64; w < words_; ++w) dst[w] ^= src[w];
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::vector<std::vector<std::uint8_t>> Gf2Matrix::nullspace() const {
  Gf2Matrix m = *this;
  const auto pivots = m.row_reduce();
  std::vector<char> is_pivot(cols_, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<std::uint8_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint8_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (m.get(i, free)) v[pivots[i]] = 1;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Edge-by-face system restricted to the allowed faces, with the syndrome as
// an extra right-hand column.
struct SyndromeSystem {
  std::vector<FaceId> columns;
  Gf2Matrix matrix;
};

SyndromeSystem build_system(const ChainComplex3& c, const EdgeSet& s, const FaceSet& allowed) {
  std::vector<FaceId> columns;
  for (FaceId f = 0; f < c.face_count(); ++f) {
    if (allowed.universe() == 0 || allowed.contains(f)) columns.push_back(f);
  }
  Gf2Matrix m(c.edge_count(), columns.size() + 1);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (EdgeId e : c.face_edges(columns[j])) m.flip(e, j);
  }
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    if (s.contains(e)) m.set(e, columns.size(), true);
  }
  return {std::move(columns), std::move(m)};
}

}  // namespace

Gf2Solution solve_syndrome(const ChainComplex3& c, const EdgeSet& s, const FaceSet& allowed) {
  if (s.universe() != c.edge_count()) {
    throw std::invalid_argument("solve_syndrome: syndrome has the wrong universe");
  }
  if (allowed.universe() != 0 && allowed.universe() != c.face_count()) {
    throw std::invalid_argument("solve_syndrome: allowed set has the wrong universe");
  }
  auto [columns, m] = build_system(c, s, allowed);
  const std::size_t rhs = columns.size();
  const auto pivots = m.row_reduce();
  Gf2Solution out;
  if (!pivots.empty() && pivots.back() == rhs) return out;
  out.solution = c.empty_faces();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (m.get(i, rhs)) out.solution.insert(columns[pivots[i]]);
  }
  out.nullity = columns.size() - pivots.size();
  out.status = out.nullity == 0 ? SolveStatus::kUnique : SolveStatus::kNonUnique;
  return out;
}

bool is_stabilizer_support(const ChainComplex3& c, const FaceSet& f) {
  if (f.universe() != c.face_count()) {
    throw std::invalid_argument("is_stabilizer_support: face set has the wrong universe");
  }
  // ∂F computed directly here rather than through the lattice helpers.
  std::vector<char> parity(c.edge_count(), 0);
  f.for_each([&](FaceId g) {
    for (EdgeId e : c.face_edges(g)) parity[e] ^= 1;
  });
  for (char p : parity) {
    if (p) throw std::invalid_argument("is_stabilizer_support: face set has a nonzero syndrome");
  }
  // Face-by-volume system: F_g = sum over volumes v on g of V_v.
  const std::size_t nv = c.volume_count();
  Gf2Matrix m(c.face_count(), nv + 1);
  for (VolumeId v = 0; v < nv; ++v) {
    for (FaceId g : c.volume_faces(v)) m.flip(g, v);
  }
  f.for_each([&](FaceId g) { m.set(g, nv, true); });
  const auto pivots = m.row_reduce();
  return pivots.empty() || pivots.back() != nv;
}

bool encloses_volume_set(const ChainComplex3& c, std::span<const FaceSet> dummy_boundaries,
                         const FaceSet& k) {
  const std::size_t nodes = c.volume_count() + dummy_boundaries.size();
  std::vector<std::vector<std::size_t>> ends(c.face_count());
  for (VolumeId v = 0; v < c.volume_count(); ++v) {
    for (FaceId g : c.volume_faces(v)) ends[g].push_back(v);
  }
  for (std::size_t d = 0; d < dummy_boundaries.size(); ++d) {
    dummy_boundaries[d].for_each([&](FaceId g) { ends[g].push_back(c.volume_count() + d); });
  }
  // V is a nullspace vector iff every face outside k has an even number of
  // ends in V, i.e. ∂V ⊆ k.
  std::vector<FaceId> rows;
  for (FaceId g = 0; g < c.face_count(); ++g) {
    if (!k.contains(g)) rows.push_back(g);
  }
  Gf2Matrix m(rows.size(), nodes);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (auto node : ends[rows[r]]) m.flip(r, node);
  }
  const auto basis = m.nullspace();
  if (basis.size() >= 2) return true;
  if (basis.empty()) return false;
  for (auto bit : basis[0]) {
    if (!bit) return true;
  }
  return false;
}

FaceSet min_weight_decode(const ChainComplex3& c, const EdgeSet& s, std::size_t max_nullity) {
  auto [columns, reduced] = build_system(c, s, FaceSet());
  const std::size_t rhs = columns.size();
  const auto pivots = reduced.row_reduce();
  if (!pivots.empty() && pivots.back() == rhs) {
    throw std::invalid_argument("min_weight_decode: syndrome has no solution");
  }
  const std::size_t nullity = columns.size() - pivots.size();
  if (nullity > max_nullity) {
    throw std::length_error("min_weight_decode: solution space dimension " +
                            std::to_string(nullity) + " exceeds " + std::to_string(max_nullity));
  }
  const std::size_t n = columns.size();
  std::vector<std::uint8_t> current(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (reduced.get(i, rhs)) current[pivots[i]] = 1;
  }
  Gf2Matrix homogeneous(c.edge_count(), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (EdgeId e : c.face_edges(columns[j])) homogeneous.flip(e, j);
  }
  const auto basis = homogeneous.nullspace();

  std::size_t weight = 0;
  for (auto b : current) weight += b;
  std::vector<std::uint8_t> best = current;
  std::size_t best_weight = weight;
  // Gray-code walk: step i flips the basis vector at the lowest set bit of i.
  const std::uint64_t steps = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto& flip = basis[std::countr_zero(i)];
    for (std::size_t j = 0; j < n; ++j) {
      if (!flip[j]) continue;
      if (current[j]) {
        --weight;
      } else {
        ++weight;
      }
      current[j] ^= 1;
    }
    if (weight < best_weight) {
      best_weight = weight;
      best = current;
    }
  }
  FaceSet out = c.empty_faces();
  for (std::size_t j = 0; j < n; ++j) {
    if (best[j]) out.insert(columns[j]);
  }
  return out;
}

}  // namespace toric3d
