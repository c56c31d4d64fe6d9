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

#include "cdpr_ccd/triangle_mesh.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <utility>

namespace cdpr_ccd {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

BoundingSphere FaceSphere(const Triangle& t) {
  // Centroid-centered; not minimal, but tight enough for culling.
  const Vec3 c = (t[0] + t[1] + t[2]) / 3.0;
  double r = 0.0;
  for (const Vec3& v : t) r = std::max(r, (v - c).norm());
  return BoundingSphere{c, r};
}

bool IsClosed(const std::vector<TriangleMesh::Face>& faces) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> edge_count;
  for (const auto& f : faces) {
    for (int i = 0; i < 3; ++i) {
      std::uint32_t u = f[i];
      std::uint32_t v = f[(i + 1) % 3];
      if (u > v) std::swap(u, v);
      ++edge_count[{u, v}];
    }
  }
  return std::all_of(edge_count.begin(), edge_count.end(),
                     [](const auto& e) { return e.second == 2; });
}

// Lower bound on the distance between a segment and anything inside the
// sphere.
double SegmentSphereGap(const Segment& s, const Vec3& center, double radius) {
  return PointSegmentDistance(center, s).distance - radius;
}

// A mesh placed in the world frame.
struct PlacedMesh {
  std::vector<Triangle> triangles;
  std::vector<BoundingSphere> spheres;
  std::vector<Aabb> boxes;
  Aabb box;
};

PlacedMesh Place(const TriangleMesh& mesh, const Pose& pose) {
  std::vector<Vec3> world(mesh.vertices().size());
  for (std::size_t k = 0; k < world.size(); ++k) {
    world[k] = pose * mesh.vertices()[k];
  }
  PlacedMesh out;
  out.triangles.reserve(mesh.size());
  out.spheres.reserve(mesh.size());
  out.boxes.reserve(mesh.size());
  out.box = Aabb{Vec3::Constant(kInfinity), Vec3::Constant(-kInfinity)};
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const TriangleMesh::Face& f = mesh.faces()[i];
    const Triangle t{world[f[0]], world[f[1]], world[f[2]]};
    out.triangles.push_back(t);
    out.spheres.push_back(
        {pose * mesh.face_sphere(i).center, mesh.face_sphere(i).radius});
    out.boxes.push_back(Aabb::Of(t));
    out.box.lo = out.box.lo.cwiseMin(out.boxes.back().lo);
    out.box.hi = out.box.hi.cwiseMax(out.boxes.back().hi);
  }
  return out;
}

// Closest triangle pair among those whose bounding volumes are closer than
// `cutoff`. Pairs are visited by increasing lower bound, so the search stops
// as soon as no remaining pair can beat the best distance. Infinite distance
// when every pair is culled.
DistanceResult ClosestTriangles(const PlacedMesh& a, const PlacedMesh& b,
                                double cutoff) {
  DistanceResult best{kInfinity, Vec3::Zero(), Vec3::Zero()};
  if (a.box.Gap(b.box) > cutoff) return best;

  struct Candidate {
    double bound;
    std::uint32_t i;
    std::uint32_t j;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < a.triangles.size(); ++i) {
    if (a.boxes[i].Gap(b.box) > cutoff) continue;
    for (std::size_t j = 0; j < b.triangles.size(); ++j) {
      const double sphere_gap = (a.spheres[i].center - b.spheres[j].center)
                                    .norm() -
                                a.spheres[i].radius - b.spheres[j].radius;
      const double bound = std::max(sphere_gap, a.boxes[i].Gap(b.boxes[j]));
      if (bound > cutoff) continue;
      candidates.push_back({bound, static_cast<std::uint32_t>(i),
                            static_cast<std::uint32_t>(j)});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& x, const Candidate& y) {
              if (x.bound != y.bound) return x.bound < y.bound;
              if (x.i != y.i) return x.i < y.i;
              return x.j < y.j;
            });
  for (const Candidate& c : candidates) {
    if (c.bound >= best.distance) break;
    const DistanceResult r =
        TriangleTriangleDistance(a.triangles[c.i], b.triangles[c.j]);
    if (r.distance < best.distance) {
      best = r;
      if (best.distance <= kContactTolerance) break;
    }
  }
  return best;
}

// Contact or nesting of two placed meshes, given the closest surface pair.
DistanceResult FinishMeshMesh(const DistanceResult& best,
                              const TriangleMesh& m1, const Pose& pose1,
                              const TriangleMesh& m2, const Pose& pose2) {
  if (best.distance > kContactTolerance) {
    // No surface contact: the meshes are either disjoint or nested.
    const Vec3 p2 = pose2 * m2.vertices().front();
    if (m1.Contains(pose1.Inverse() * p2)) return DistanceResult{0.0, p2, p2};
    const Vec3 p1 = pose1 * m1.vertices().front();
    if (m2.Contains(pose2.Inverse() * p1)) return DistanceResult{0.0, p1, p1};
    return best;
  }
  const Vec3 mid = 0.5 * (best.witness_a + best.witness_b);
  return DistanceResult{0.0, mid, mid};
}

}  // namespace

Aabb Aabb::Of(const Triangle& t) {
  return Aabb{t[0].cwiseMin(t[1]).cwiseMin(t[2]),
              t[0].cwiseMax(t[1]).cwiseMax(t[2])};
}

Aabb Aabb::Of(const Segment& s) {
  return Aabb{s.a.cwiseMin(s.b), s.a.cwiseMax(s.b)};
}

double Aabb::Gap(const Aabb& other) const {
  const Vec3 d = (other.lo - hi).cwiseMax(lo - other.hi).cwiseMax(0.0);
  return d.norm();
}

bool Aabb::Contains(const Vec3& p) const {
  return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
}

TriangleMesh::TriangleMesh(std::vector<Vec3> vertices, std::vector<Face> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  if (faces_.empty()) throw MeshError("mesh has no triangles");
  for (const Vec3& v : vertices_) {
    if (!v.allFinite()) throw MeshError("mesh has a non-finite vertex");
  }
  face_spheres_.reserve(faces_.size());
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    for (std::uint32_t idx : faces_[i]) {
      if (idx >= vertices_.size()) {
        throw MeshError("triangle " + std::to_string(i) +
                        " references vertex " + std::to_string(idx) +
                        " out of range");
      }
    }
    const Triangle t = triangle(i);
    const double area = 0.5 * (t[1] - t[0]).cross(t[2] - t[0]).norm();
    if (area <= kDegenerateTriangleArea) {
      throw MeshError("triangle " + std::to_string(i) + " is degenerate");
    }
    face_spheres_.push_back(FaceSphere(t));
    face_boxes_.push_back(Aabb::Of(t));
  }

  Vec3 lo = Vec3::Constant(kInfinity);
  Vec3 hi = Vec3::Constant(-kInfinity);
  for (const Vec3& v : vertices_) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
    max_vertex_norm_ = std::max(max_vertex_norm_, v.norm());
  }
  box_ = Aabb{lo, hi};
  sphere_.center = 0.5 * (lo + hi);
  for (const Vec3& v : vertices_) {
    sphere_.radius = std::max(sphere_.radius, (v - sphere_.center).norm());
  }
  closed_ = IsClosed(faces_);
}

TriangleMesh TriangleMesh::Box(const Vec3& h, const Vec3& center) {
  std::vector<Vec3> v;
  for (int i = 0; i < 8; ++i) {
    v.push_back(center + Vec3((i & 1) ? h.x() : -h.x(),
                              (i & 2) ? h.y() : -h.y(),
                              (i & 4) ? h.z() : -h.z()));
  }
  // Outward-facing, counter-clockwise.
  std::vector<Face> f = {
      {0, 2, 1}, {1, 2, 3},  // -z
      {4, 5, 6}, {5, 7, 6},  // +z
      {0, 1, 4}, {1, 5, 4},  // -y
      {2, 6, 3}, {3, 6, 7},  // +y
      {0, 4, 2}, {2, 4, 6},  // -x
      {1, 3, 5}, {3, 7, 5},  // +x
  };
  return TriangleMesh(std::move(v), std::move(f));
}

double TriangleMesh::WindingNumber(const Vec3& p) const {
  // Sum of signed solid angles (Van Oosterom and Strackee).
  double total = 0.0;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const Vec3 a = vertices_[faces_[i][0]] - p;
    const Vec3 b = vertices_[faces_[i][1]] - p;
    const Vec3 c = vertices_[faces_[i][2]] - p;
    const double la = a.norm();
    const double lb = b.norm();
    const double lc = c.norm();
    const double numer = a.dot(b.cross(c));
    const double denom =
        la * lb * lc + a.dot(b) * lc + a.dot(c) * lb + b.dot(c) * la;
    total += 2.0 * std::atan2(numer, denom);
  }
  return total / (4.0 * std::numbers::pi);
}

bool TriangleMesh::Contains(const Vec3& p) const {
  if (!closed_) return false;
  if (!box_.Contains(p)) return false;
  return std::abs(WindingNumber(p)) > 0.5;
}

DistanceResult CapsuleMeshDistance(const Capsule& capsule,
                                   const TriangleMesh& mesh,
                                   const Pose& mesh_pose) {
  // Work in the mesh frame: one segment transform instead of n vertices.
  const Pose to_mesh = mesh_pose.Inverse();
  const Segment local{to_mesh * capsule.axis.a, to_mesh * capsule.axis.b};

  const Aabb segment_box = Aabb::Of(local);
  DistanceResult best{kInfinity, Vec3::Zero(), Vec3::Zero()};
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const BoundingSphere& s = mesh.face_sphere(i);
    if (SegmentSphereGap(local, s.center, s.radius) >= best.distance ||
        segment_box.Gap(mesh.face_box(i)) >= best.distance) {
      continue;
    }
    const DistanceResult r = SegmentTriangleDistance(local, mesh.triangle(i));
    if (r.distance < best.distance) {
      best = r;
      if (best.distance == 0.0) break;
    }
  }
  if (best.distance > 0.0 && mesh.Contains(local.a)) {
    best = DistanceResult{0.0, local.a, local.a};
  }

  const Vec3 on_axis = mesh_pose * best.witness_a;
  const Vec3 on_mesh = mesh_pose * best.witness_b;
  const double gap = best.distance - capsule.radius;
  if (gap <= kContactTolerance) {
    return DistanceResult{0.0, on_mesh, on_mesh};
  }
  const Vec3 dir = (on_mesh - on_axis) / best.distance;
  return DistanceResult{gap, on_axis + capsule.radius * dir, on_mesh};
}

DistanceResult MeshMeshDistance(const TriangleMesh& m1, const Pose& pose1,
                                const TriangleMesh& m2, const Pose& pose2) {
  // World-frame evaluation keeps the query symmetric in its arguments.
  const DistanceResult best =
      ClosestTriangles(Place(m1, pose1), Place(m2, pose2), kInfinity);
  return FinishMeshMesh(best, m1, pose1, m2, pose2);
}

bool CapsuleMeshContact(const Capsule& capsule, const TriangleMesh& mesh,
                        const Pose& mesh_pose) {
  const BoundingSphere& s = mesh.bounding_sphere();
  const double cutoff = capsule.radius + kContactTolerance;
  if (SegmentSphereGap(capsule.axis, mesh_pose * s.center, s.radius) >
      cutoff) {
    return false;
  }
  const Pose to_mesh = mesh_pose.Inverse();
  const Segment local{to_mesh * capsule.axis.a, to_mesh * capsule.axis.b};
  const Aabb segment_box = Aabb::Of(local);
  if (segment_box.Gap(mesh.box()) > cutoff) return false;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    if (segment_box.Gap(mesh.face_box(i)) > cutoff) continue;
    const BoundingSphere& f = mesh.face_sphere(i);
    if (SegmentSphereGap(local, f.center, f.radius) > cutoff) continue;
    if (SegmentTriangleDistance(local, mesh.triangle(i)).distance <= cutoff) {
      return true;
    }
  }
  return mesh.Contains(local.a);
}

bool MeshMeshContact(const TriangleMesh& m1, const Pose& pose1,
                     const TriangleMesh& m2, const Pose& pose2) {
  const BoundingSphere& a = m1.bounding_sphere();
  const BoundingSphere& b = m2.bounding_sphere();
  if ((pose1 * a.center - pose2 * b.center).norm() - a.radius - b.radius >
      kContactTolerance) {
    return false;
  }
  const DistanceResult best =
      ClosestTriangles(Place(m1, pose1), Place(m2, pose2), kContactTolerance);
  return FinishMeshMesh(best, m1, pose1, m2, pose2).InContact();
}

}  // namespace cdpr_ccd
