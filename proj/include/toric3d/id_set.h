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

#ifndef TORIC3D_ID_SET_H_
#define TORIC3D_ID_SET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace toric3d {

using CellId = std::uint32_t;
using VertexId = CellId;
using EdgeId = CellId;
using FaceId = CellId;
using VolumeId = CellId;

/// Dense bit-indexed subset of one kind of cell. The tag keeps face sets and
/// edge sets from being mixed up at compile time.
template <class Tag>
class IdSet {
 public:
  IdSet() = default;
  explicit IdSet(std::size_t universe) : bits_(universe) {}
  IdSet(std::size_t universe, std::span<const CellId> ids) : bits_(universe) {
    for (CellId id : ids) insert(id);
  }
  IdSet(std::size_t universe, std::initializer_list<CellId> ids) : bits_(universe) {
    for (CellId id : ids) insert(id);
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t weight() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(CellId id) const { return id < bits_.size() && bits_.test(id); }
  void insert(CellId id) { bits_.set(checked(id)); }
  void erase(CellId id) { bits_.reset(checked(id)); }
  void toggle(CellId id) { bits_.flip(checked(id)); }
  void clear() { bits_.reset(); }

  bool is_subset_of(const IdSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const IdSet& other) const { return bits_.intersects(other.bits_); }

  IdSet& operator^=(const IdSet& o) { bits_ ^= o.bits_; return *this; }
  IdSet& operator|=(const IdSet& o) { bits_ |= o.bits_; return *this; }
  IdSet& operator&=(const IdSet& o) { bits_ &= o.bits_; return *this; }
  IdSet& operator-=(const IdSet& o) { bits_ -= o.bits_; return *this; }
  friend IdSet operator^(IdSet a, const IdSet& b) { return a ^= b; }
  friend IdSet operator|(IdSet a, const IdSet& b) { return a |= b; }
  friend IdSet operator&(IdSet a, const IdSet& b) { return a &= b; }
  friend IdSet operator-(IdSet a, const IdSet& b) { return a -= b; }
  friend bool operator==(const IdSet& a, const IdSet& b) { return a.bits_ == b.bits_; }

  /// Calls fn(id) for every member in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      fn(static_cast<CellId>(i));
    }
  }

  std::vector<CellId> ids() const {
    std::vector<CellId> out;
    out.reserve(weight());
    for_each([&](CellId id) { out.push_back(id); });
    return out;
  }

  /// First member at or after `from`, or universe() when none.
  std::size_t next(std::size_t from) const {
    if (from == 0) return normalize(bits_.find_first());
    return normalize(bits_.find_next(from - 1));
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  std::size_t checked(CellId id) const {
    if (id >= bits_.size()) {
      throw std::out_of_range("cell id " + std::to_string(id) + " outside universe of " +
                              std::to_string(bits_.size()));
    }
    return id;
  }
  std::size_t normalize(std::size_t i) const { return i == Bits::npos ? bits_.size() : i; }

  Bits bits_;
};

struct FaceTag {};
struct EdgeTag {};
struct VolumeTag {};

using FaceSet = IdSet<FaceTag>;
using EdgeSet = IdSet<EdgeTag>;
using VolumeSet = IdSet<VolumeTag>;

}  // namespace toric3d

#endif  // TORIC3D_ID_SET_H_
