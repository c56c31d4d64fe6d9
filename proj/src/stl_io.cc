// Copyright 2026 The cdpr_ccd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cdpr_ccd/triangle_mesh.h"

namespace cdpr_ccd {
namespace {

constexpr std::size_t kBinaryHeaderSize = 80;
constexpr std::size_t kBinaryFacetSize = 50;

using RawFacet = std::array<Vec3, 3>;

class MeshBuilder {
 public:
  void Add(const RawFacet& f) {
    const Vec3 n = (f[1] - f[0]).cross(f[2] - f[0]);
    if (0.5 * n.norm() <= kDegenerateTriangleArea || !n.allFinite()) {
      ++dropped_;
      return;
    }
    faces_.push_back({Index(f[0]), Index(f[1]), Index(f[2])});
  }

  TriangleMesh Build(const std::string& origin) {
    if (faces_.empty()) {
      throw MeshError(origin + ": no non-degenerate triangle (" +
                      std::to_string(dropped_) + " dropped)");
    }
    return TriangleMesh(std::move(vertices_), std::move(faces_));
  }

 private:
  std::uint32_t Index(const Vec3& v) {
    const std::array<double, 3> key{v.x(), v.y(), v.z()};
    auto [it, inserted] =
        index_.try_emplace(key, static_cast<std::uint32_t>(vertices_.size()));
    if (inserted) vertices_.push_back(v);
    return it->second;
  }

  std::map<std::array<double, 3>, std::uint32_t> index_;
  std::vector<Vec3> vertices_;
  std::vector<TriangleMesh::Face> faces_;
  std::size_t dropped_ = 0;
};

bool LooksBinary(const std::string& bytes) {
  if (bytes.size() < kBinaryHeaderSize + 4) return false;
  std::uint32_t count = 0;
  std::memcpy(&count, bytes.data() + kBinaryHeaderSize, 4);
  const std::size_t expected =
      kBinaryHeaderSize + 4 + std::size_t{count} * kBinaryFacetSize;
  if (bytes.size() == expected) return true;
  // Some exporters write "solid" into binary headers; only trust the ASCII
  // reading when the prefix matches and the size does not.
  return bytes.compare(0, 5, "solid") != 0;
}

TriangleMesh ParseBinary(const std::string& bytes, const std::string& origin) {
  std::uint32_t count = 0;
  std::memcpy(&count, bytes.data() + kBinaryHeaderSize, 4);
  const std::size_t expected =
      kBinaryHeaderSize + 4 + std::size_t{count} * kBinaryFacetSize;
  if (bytes.size() < expected) {
    throw MeshError(origin + ": truncated binary STL (" +
                    std::to_string(count) + " facets declared)");
  }
  MeshBuilder builder;
  const char* p = bytes.data() + kBinaryHeaderSize + 4;
  for (std::uint32_t i = 0; i < count; ++i, p += kBinaryFacetSize) {
    std::array<float, 12> v{};  // normal + 3 vertices
    std::memcpy(v.data(), p, sizeof(v));
    RawFacet f;
    for (int k = 0; k < 3; ++k) {
      f[k] = Vec3(v[3 + 3 * k], v[4 + 3 * k], v[5 + 3 * k]);
    }
    builder.Add(f);
  }
  return builder.Build(origin);
}

TriangleMesh ParseAscii(const std::string& bytes, const std::string& origin) {
  std::istringstream in(bytes);
  MeshBuilder builder;
  std::string line;
  int line_no = 0;
  RawFacet facet;
  int n_vertices = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "facet") {
      n_vertices = 0;
    } else if (word == "vertex") {
      double x, y, z;
      if (!(ls >> x >> y >> z)) {
        throw MeshError(origin + ":" + std::to_string(line_no) +
                        ": malformed vertex");
      }
      if (n_vertices >= 3) {
        throw MeshError(origin + ":" + std::to_string(line_no) +
                        ": more than three vertices in facet");
      }
      facet[n_vertices++] = Vec3(x, y, z);
    } else if (word == "endfacet") {
      if (n_vertices != 3) {
        throw MeshError(origin + ":" + std::to_string(line_no) +
                        ": facet with " + std::to_string(n_vertices) +
                        " vertices");
      }
      builder.Add(facet);
    }
  }
  return builder.Build(origin);
}

}  // namespace

TriangleMesh ParseStl(const std::string& bytes, const std::string& origin) {
  if (LooksBinary(bytes)) return ParseBinary(bytes, origin);
  return ParseAscii(bytes, origin);
}

TriangleMesh LoadStl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MeshError("cannot open STL file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseStl(buffer.str(), path.string());
}

void WriteAsciiStl(const TriangleMesh& mesh, const std::filesystem::path& path,
                   const std::string& name) {
  std::ofstream out(path);
  if (!out) throw MeshError("cannot write " + path.string());
  out << std::setprecision(17);
  out << "solid " << name << "\n";
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const Triangle t = mesh.triangle(i);
    const Vec3 n = (t[1] - t[0]).cross(t[2] - t[0]).normalized();
    out << "  facet normal " << n.x() << " " << n.y() << " " << n.z() << "\n";
    out << "    outer loop\n";
    for (const Vec3& v : t) {
      out << "      vertex " << v.x() << " " << v.y() << " " << v.z() << "\n";
    }
    out << "    endloop\n  endfacet\n";
  }
  out << "endsolid " << name << "\n";
}

void WriteBinaryStl(const TriangleMesh& mesh,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MeshError("cannot write " + path.string());
  const std::string header(kBinaryHeaderSize, ' ');
  out.write(header.data(), header.size());
  const auto count = static_cast<std::uint32_t>(mesh.size());
  out.write(reinterpret_cast<const char*>(&count), 4);
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const Triangle t = mesh.triangle(i);
    const Vec3 n = (t[1] - t[0]).cross(t[2] - t[0]).normalized();
    std::array<float, 12> v{};
    for (int k = 0; k < 3; ++k) v[k] = static_cast<float>(n[k]);
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) v[3 + 3 * j + k] = static_cast<float>(t[j][k]);
    }
    out.write(reinterpret_cast<const char*>(v.data()), sizeof(v));
    const std::uint16_t attr = 0;
    out.write(reinterpret_cast<const char*>(&attr), 2);
  }
}

}  // namespace cdpr_ccd
