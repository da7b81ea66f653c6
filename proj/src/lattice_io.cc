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

#include "toric3d/lattice_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace toric3d {

namespace {

std::string describe(const ValidationReport& report) {
  std::string out = "lattice failed validation:";
  for (const auto& v : report.violations) out += "\n  " + v.message;
  return out;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LatticeDocument run() {
    bool header = false;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t eol = text_.find('\n', pos);
      if (eol == std::string_view::npos) eol = text_.size();
      std::string_view line = text_.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      auto words = split_words(line);
      if (words.empty()) continue;
      if (!header) {
        if (words.size() != 2 || words[0] != "lattice3d" || words[1] != "v1") {
          fail("expected header 'lattice3d v1'");
        }
        header = true;
        continue;
      }
      record(words);
    }
    if (!header) fail("missing header 'lattice3d v1'");
    if (!vertices_) fail("missing 'vertices' record");

    std::optional<ChainComplex3> complex;
    try {
      complex.emplace(*vertices_, std::move(edges_), std::move(faces_), std::move(volumes_),
                      periodic_, family_);
    } catch (const std::invalid_argument& e) {
      throw LatticeParseError(line_no_, e.what());
    }
    if (family_.kind != LatticeFamily::kCustom) {
      std::optional<ChainComplex3> rebuilt;
      try {
        rebuilt.emplace(build_family(family_));
      } catch (const std::invalid_argument& e) {
        throw LatticeParseError(family_line_, e.what());
      }
      if (!same_structure(*rebuilt, *complex) || rebuilt->periodic() != complex->periodic()) {
        throw LatticeParseError(family_line_, "declared family does not match the cells");
      }
    }
    ValidationReport report = validate(*complex);
    if (!report.ok()) throw LatticeValidationError(std::move(report));
    return {std::move(*complex), std::move(xlogical_), std::move(zlogical_)};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw LatticeParseError(line_no_, what); }

  std::uint64_t number(std::string_view w) const {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
      fail("expected a non-negative integer, got '" + std::string(w) + "'");
    }
    return value;
  }

  std::vector<CellId> id_list(const std::vector<std::string_view>& words, std::size_t from) const {
    std::vector<CellId> ids;
    for (std::size_t i = from; i < words.size(); ++i) {
      ids.push_back(static_cast<CellId>(number(words[i])));
    }
    return ids;
  }

  void expect_id(std::string_view w, std::size_t expected, const char* kind) const {
    if (number(w) != expected) {
      fail(std::string(kind) + " ids must be dense and ascending: expected " +
           std::to_string(expected) + ", got " + std::string(w));
    }
  }

  void record(const std::vector<std::string_view>& w) {
    const std::string_view kind = w[0];
    if (kind == "vertices") {
      if (w.size() != 2) fail("'vertices' takes one count");
      if (vertices_) fail("duplicate 'vertices' record");
      vertices_ = number(w[1]);
    } else if (kind == "periodic") {
      if (w.size() != 2 || (w[1] != "true" && w[1] != "false")) fail("'periodic' takes true|false");
      periodic_ = w[1] == "true";
    } else if (kind == "family") {
      if (w.size() != 5) fail("'family' takes a name and three sizes");
      family_line_ = line_no_;
      if (w[1] == "cubic-torus") {
        family_.kind = LatticeFamily::kCubicTorus;
      } else if (w[1] == "slab") {
        family_.kind = LatticeFamily::kClosedSlab;
      } else if (w[1] == "slab-rough") {
        family_.kind = LatticeFamily::kRoughSlab;
      } else {
        fail("unknown family '" + std::string(w[1]) + "'");
      }
      for (int i = 0; i < 3; ++i) family_.dims[i] = static_cast<int>(number(w[2 + i]));
    } else if (kind == "edge") {
      if (w.size() < 3 || w.size() > 4) fail("'edge' takes an id and one or two vertices");
      if (!vertices_) fail("'vertices' must come before the first edge");
      expect_id(w[1], edges_.size(), "edge");
      edges_.push_back(id_list(w, 2));
      references(edges_.back(), *vertices_, "vertex");
    } else if (kind == "face") {
      if (w.size() < 3) fail("'face' needs an id and at least one edge");
      expect_id(w[1], faces_.size(), "face");
      faces_.push_back(id_list(w, 2));
      references(faces_.back(), edges_.size(), "edge");
    } else if (kind == "volume") {
      if (w.size() < 3) fail("'volume' needs an id and at least one face");
      expect_id(w[1], volumes_.size(), "volume");
      volumes_.push_back(id_list(w, 2));
      references(volumes_.back(), faces_.size(), "face");
    } else if (kind == "xlogical") {
      xlogical_.push_back(id_list(w, 1));
      references(xlogical_.back(), faces_.size(), "face");
    } else if (kind == "zlogical") {
      zlogical_.push_back(id_list(w, 1));
      references(zlogical_.back(), faces_.size(), "face");
    } else {
      fail("unknown record '" + std::string(kind) + "'");
    }
  }

  /// Cells must be declared before they are referenced, so a dangling id is
  /// reported on the line that uses it.
  void references(const std::vector<CellId>& ids, std::size_t count, const char* kind) const {
    for (CellId id : ids) {
      if (id >= count) fail("references missing " + std::string(kind) + " " + std::to_string(id));
    }
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  std::size_t family_line_ = 0;
  std::optional<std::size_t> vertices_;
  bool periodic_ = false;
  FamilyInfo family_;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<EdgeId>> faces_;
  std::vector<std::vector<FaceId>> volumes_;
  std::vector<std::vector<FaceId>> xlogical_;
  std::vector<std::vector<FaceId>> zlogical_;
};

template <class Ids>
void write_ids(std::ostringstream& out, const Ids& ids) {
  for (auto id : ids) out << ' ' << id;
  out << '\n';
}

}  // namespace

LatticeValidationError::LatticeValidationError(ValidationReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)) {}

LatticeDocument load_lattice(std::string_view text) { return Parser(text).run(); }

LatticeDocument load_lattice_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open lattice file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_lattice(buf.str());
}

std::string serialize_lattice(const ChainComplex3& c,
                              const std::vector<std::vector<FaceId>>& xlogical,
                              const std::vector<std::vector<FaceId>>& zlogical) {
  std::ostringstream out;
  out << "lattice3d v1\n";
  out << "vertices " << c.vertex_count() << '\n';
  out << "periodic " << (c.periodic() ? "true" : "false") << '\n';
  if (c.family().kind != LatticeFamily::kCustom) {
    out << "family " << family_name(c.family().kind) << ' ' << c.family().dims[0] << ' '
        << c.family().dims[1] << ' ' << c.family().dims[2] << '\n';
  }
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    out << "edge " << e;
    write_ids(out, c.endpoints(e));
  }
  for (FaceId f = 0; f < c.face_count(); ++f) {
    out << "face " << f;
    write_ids(out, c.face_edges(f));
  }
  for (VolumeId v = 0; v < c.volume_count(); ++v) {
    out << "volume " << v;
    write_ids(out, c.volume_faces(v));
  }
  for (const auto& rep : xlogical) {
    out << "xlogical";
    write_ids(out, rep);
  }
  for (const auto& rep : zlogical) {
    out << "zlogical";
    write_ids(out, rep);
  }
  return out.str();
}

bool same_structure(const ChainComplex3& a, const ChainComplex3& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
      a.face_count() != b.face_count() || a.volume_count() != b.volume_count()) {
    return false;
  }
  auto same = [](auto x, auto y) { return std::equal(x.begin(), x.end(), y.begin(), y.end()); };
  for (EdgeId e = 0; e < a.edge_count(); ++e)
    if (!same(a.endpoints(e), b.endpoints(e))) return false;
  for (FaceId f = 0; f < a.face_count(); ++f)
    if (!same(a.face_edges(f), b.face_edges(f))) return false;
  for (VolumeId v = 0; v < a.volume_count(); ++v)
    if (!same(a.volume_faces(v), b.volume_faces(v))) return false;
  return true;
}

}  // namespace toric3d
