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

#ifndef CDPR_CCD_TRIANGLE_MESH_H_
#define CDPR_CCD_TRIANGLE_MESH_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdpr_ccd/geometry.h"

namespace cdpr_ccd {

// Triangles whose area is at or below this value are treated as degenerate.
inline constexpr double kDegenerateTriangleArea = 1e-12;

class MeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BoundingSphere {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
};

// Axis-aligned box.
struct Aabb {
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Zero();

  static Aabb Of(const Triangle& t);
  static Aabb Of(const Segment& s);

  // Distance between the boxes; 0 when they overlap.
  double Gap(const Aabb& other) const;
  bool Contains(const Vec3& p) const;
};

// Immutable indexed triangle mesh, expressed in its own body frame.
//
// Construction validates the indices and rejects degenerate triangles.
// Per-triangle bounding spheres are cached so distance queries can skip
// triangles that cannot improve the current best; results stay exact.
class TriangleMesh {
 public:
  using Face = std::array<std::uint32_t, 3>;

  TriangleMesh(std::vector<Vec3> vertices, std::vector<Face> faces);

  // Axis-aligned box with the given half extents, centered at `center`.
  static TriangleMesh Box(const Vec3& half_extents,
                          const Vec3& center = Vec3::Zero());

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }

  Triangle triangle(std::size_t i) const {
    const Face& f = faces_[i];
    return {vertices_[f[0]], vertices_[f[1]], vertices_[f[2]]};
  }
  Triangle triangle(std::size_t i, const Pose& pose) const {
    const Face& f = faces_[i];
    return {pose * vertices_[f[0]], pose * vertices_[f[1]],
            pose * vertices_[f[2]]};
  }

  const BoundingSphere& face_sphere(std::size_t i) const {
    return face_spheres_[i];
  }
  const BoundingSphere& bounding_sphere() const { return sphere_; }
  const Aabb& face_box(std::size_t i) const { return face_boxes_[i]; }
  const Aabb& box() const { return box_; }

  // Largest distance from the body-frame origin to any vertex.
  double max_vertex_norm() const { return max_vertex_norm_; }

  // True when every edge is shared by exactly two faces. Only closed meshes
  // get volume (containment) semantics in distance queries.
  bool closed() const { return closed_; }

  // Generalized winding number of a body-frame point: ~1 inside a closed,
  // consistently oriented mesh, ~0 outside.
  double WindingNumber(const Vec3& p) const;
  bool Contains(const Vec3& p) const;

 private:
  std::vector<Vec3> vertices_;
  std::vector<Face> faces_;
  std::vector<BoundingSphere> face_spheres_;
  std::vector<Aabb> face_boxes_;
  BoundingSphere sphere_;
  Aabb box_;
  double max_vertex_norm_ = 0.0;
  bool closed_ = false;
};

// Distance between a capsule (world frame) and a mesh placed at mesh_pose.
// Zero on contact, or when the capsule lies inside a closed mesh.
DistanceResult CapsuleMeshDistance(const Capsule& capsule,
                                   const TriangleMesh& mesh,
                                   const Pose& mesh_pose);

DistanceResult MeshMeshDistance(const TriangleMesh& m1, const Pose& pose1,
                                const TriangleMesh& m2, const Pose& pose2);

// Contact predicates. Equivalent to `Distance(...).InContact()` but skip
// every triangle pair whose bounding volumes are apart.
bool CapsuleMeshContact(const Capsule& capsule, const TriangleMesh& mesh,
                        const Pose& mesh_pose);
bool MeshMeshContact(const TriangleMesh& m1, const Pose& pose1,
                     const TriangleMesh& m2, const Pose& pose2);

// Loads a binary or ASCII STL file. Identical vertex coordinates are welded,
// degenerate facets are dropped; throws MeshError when nothing survives or
// the file is malformed.
TriangleMesh LoadStl(const std::filesystem::path& path);

// Parses STL content already in memory (format auto-detected).
TriangleMesh ParseStl(const std::string& bytes, const std::string& origin);

// Writes an ASCII STL. Used by tests and the fixture generator.
void WriteAsciiStl(const TriangleMesh& mesh, const std::filesystem::path& path,
                   const std::string& name = "mesh");
void WriteBinaryStl(const TriangleMesh& mesh,
                    const std::filesystem::path& path);

}  // namespace cdpr_ccd

#endif  // CDPR_CCD_TRIANGLE_MESH_H_
