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

#ifndef CDPR_CCD_GEOMETRY_H_
#define CDPR_CCD_GEOMETRY_H_

#include <array>

#include "Eigen/Core"
#include "Eigen/Geometry"

namespace cdpr_ccd {

using Vec3 = Eigen::Vector3d;
using Rotation = Eigen::Matrix3d;

// Distances at or below this value are reported as contact.
inline constexpr double kContactTolerance = 1e-9;

// Rigid placement of a frame: x_parent = rotation * x_child + translation.
struct Pose {
  Rotation rotation = Rotation::Identity();
  Vec3 translation = Vec3::Zero();

  static Pose Identity() { return Pose{}; }
  static Pose FromTranslation(const Vec3& t) {
    return Pose{Rotation::Identity(), t};
  }

  Vec3 operator*(const Vec3& p) const { return rotation * p + translation; }
  Pose operator*(const Pose& other) const {
    return Pose{rotation * other.rotation,
                rotation * other.translation + translation};
  }
  Pose Inverse() const {
    const Rotation rt = rotation.transpose();
    return Pose{rt, -(rt * translation)};
  }
};

// [omega]_x such that Skew(omega) * v == omega.cross(v).
Eigen::Matrix3d Skew(const Vec3& omega);

// Rotation by angle |omega| * t about omega / |omega| (Rodrigues).
Rotation ExpRotation(const Vec3& omega, double t);

// Principal logarithm: the rotation vector (axis * angle) with angle in
// [0, pi]. Near pi the axis is recovered from the symmetric part.
Vec3 LogRotation(const Rotation& r);

// Rotation from an axis-angle vector (shorthand for ExpRotation(v, 1)).
inline Rotation RotationFromVector(const Vec3& v) { return ExpRotation(v, 1.0); }

struct Segment {
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();

  Vec3 At(double s) const { return a + s * (b - a); }
  double Length() const { return (b - a).norm(); }
};

struct Capsule {
  Segment axis;
  double radius = 0.0;
};

using Triangle = std::array<Vec3, 3>;

// Result of a distance query. witness_a lies on the first shape and
// witness_b on the second; for capsules the witnesses are on the surfaces.
struct DistanceResult {
  double distance = 0.0;
  Vec3 witness_a = Vec3::Zero();
  Vec3 witness_b = Vec3::Zero();

  bool InContact() const { return distance <= kContactTolerance; }
};

// Closest point on a segment to p, as the segment parameter in [0, 1].
double ClosestSegmentParameter(const Segment& s, const Vec3& p);

Vec3 ClosestPointOnTriangle(const Vec3& p, const Triangle& tri);

DistanceResult PointSegmentDistance(const Vec3& p, const Segment& s);

DistanceResult PointTriangleDistance(const Vec3& p, const Triangle& tri);

// Exact Euclidean distance between two (possibly degenerate) segments.
// The result is bitwise symmetric: swapping the arguments swaps the
// witnesses and leaves the distance unchanged.
DistanceResult SegmentSegmentDistance(const Segment& s1, const Segment& s2);

// Exact distance between a segment and a non-degenerate triangle; zero when
// the segment touches or pierces the triangle.
DistanceResult SegmentTriangleDistance(const Segment& s, const Triangle& tri);

DistanceResult TriangleTriangleDistance(const Triangle& t1,
                                        const Triangle& t2);

// max(0, axis distance - r1 - r2), witnesses moved onto the capsule surfaces.
DistanceResult CapsuleCapsuleDistance(const Capsule& c1, const Capsule& c2);

}  // namespace cdpr_ccd

#endif  // CDPR_CCD_GEOMETRY_H_
