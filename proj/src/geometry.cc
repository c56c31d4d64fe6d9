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

#include "cdpr_ccd/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace cdpr_ccd {
namespace {

constexpr double kDegenerateSquaredLength = 1e-24;

double Clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

DistanceResult MakeResult(const Vec3& a, const Vec3& b) {
  return DistanceResult{(a - b).norm(), a, b};
}

void KeepCloser(DistanceResult& best, const DistanceResult& candidate) {
  if (candidate.distance < best.distance) best = candidate;
}

// Lexicographic order over the six endpoint coordinates.
bool SegmentLess(const Segment& s1, const Segment& s2) {
  for (int i = 0; i < 3; ++i) {
    if (s1.a[i] != s2.a[i]) return s1.a[i] < s2.a[i];
  }
  for (int i = 0; i < 3; ++i) {
    if (s1.b[i] != s2.b[i]) return s1.b[i] < s2.b[i];
  }
  return false;
}

// Closest points between segments (Ericson, Real-Time Collision Detection
// 5.1.9), hardened with the four endpoint projections so that nearly
// parallel inputs still return the true minimum.
DistanceResult SegmentSegmentOrdered(const Segment& s1, const Segment& s2) {
  const Vec3 d1 = s1.b - s1.a;
  const Vec3 d2 = s2.b - s2.a;
  const Vec3 r = s1.a - s2.a;
  const double a = d1.squaredNorm();
  const double e = d2.squaredNorm();
  const double f = d2.dot(r);

  double s = 0.0;
  double t = 0.0;
  if (a <= kDegenerateSquaredLength && e <= kDegenerateSquaredLength) {
    return MakeResult(s1.a, s2.a);
  }
  if (a <= kDegenerateSquaredLength) {
    t = Clamp01(f / e);
  } else {
    const double c = d1.dot(r);
    if (e <= kDegenerateSquaredLength) {
      s = Clamp01(-c / a);
    } else {
      const double b = d1.dot(d2);
      const double denom = a * e - b * b;
      s = denom > 0.0 ? Clamp01((b * f - c * e) / denom) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = Clamp01(-c / a);
      } else if (t > 1.0) {
        t = 1.0;
        s = Clamp01((b - c) / a);
      }
    }
  }
  DistanceResult best = MakeResult(s1.At(s), s2.At(t));

  const DistanceResult p1 = PointSegmentDistance(s1.a, s2);
  KeepCloser(best, p1);
  const DistanceResult p2 = PointSegmentDistance(s1.b, s2);
  KeepCloser(best, p2);
  DistanceResult q1 = PointSegmentDistance(s2.a, s1);
  std::swap(q1.witness_a, q1.witness_b);
  KeepCloser(best, q1);
  DistanceResult q2 = PointSegmentDistance(s2.b, s1);
  std::swap(q2.witness_a, q2.witness_b);
  KeepCloser(best, q2);
  return best;
}

bool PointInTriangle(const Vec3& p, const Triangle& tri, const Vec3& normal) {
  for (int i = 0; i < 3; ++i) {
    const Vec3& u = tri[i];
    const Vec3& v = tri[(i + 1) % 3];
    if ((v - u).cross(p - u).dot(normal) < 0.0) return false;
  }
  return true;
}

}  // namespace

Eigen::Matrix3d Skew(const Vec3& w) {
  Eigen::Matrix3d m;
  m << 0.0, -w.z(), w.y(),  //
      w.z(), 0.0, -w.x(),   //
      -w.y(), w.x(), 0.0;
  return m;
}

Rotation ExpRotation(const Vec3& omega, double t) {
  const Vec3 v = omega * t;
  const double theta2 = v.squaredNorm();
  const double theta = std::sqrt(theta2);
  double a;  // sin(theta) / theta
  double b;  // (1 - cos(theta)) / theta^2
  if (theta < 1e-4) {
    a = 1.0 - theta2 / 6.0 + theta2 * theta2 / 120.0;
    b = 0.5 - theta2 / 24.0 + theta2 * theta2 / 720.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / theta2;
  }
  const Eigen::Matrix3d w = Skew(v);
  return Rotation::Identity() + a * w + b * (w * w);
}

Vec3 LogRotation(const Rotation& r) {
  const double cos_theta = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double theta = std::acos(cos_theta);
  const Vec3 vee(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  if (theta < 1e-6) return 0.5 * vee;
  if (theta < std::numbers::pi - 1e-4) {
    return theta / (2.0 * std::sin(theta)) * vee;
  }
  // Near pi the symmetric part gives (1 - cos(theta)) * axis * axis^T.
  const Eigen::Matrix3d sym = 0.5 * (r + r.transpose()) -
                              cos_theta * Eigen::Matrix3d::Identity();
  int k = 0;
  sym.diagonal().maxCoeff(&k);
  Vec3 axis = sym.col(k) / std::sqrt(std::max(sym(k, k), 1e-300));
  axis.normalize();
  if (axis.dot(vee) < 0.0) axis = -axis;
  return theta * axis;
}

double ClosestSegmentParameter(const Segment& s, const Vec3& p) {
  const Vec3 d = s.b - s.a;
  const double len2 = d.squaredNorm();
  if (len2 <= kDegenerateSquaredLength) return 0.0;
  return Clamp01((p - s.a).dot(d) / len2);
}

DistanceResult PointSegmentDistance(const Vec3& p, const Segment& s) {
  return MakeResult(p, s.At(ClosestSegmentParameter(s, p)));
}

Vec3 ClosestPointOnTriangle(const Vec3& p, const Triangle& tri) {
  // Voronoi-region walk (Ericson 5.1.5).
  const Vec3& a = tri[0];
  const Vec3& b = tri[1];
  const Vec3& c = tri[2];
  const Vec3 ab = b - a;
  const Vec3 ac = c - a;
  const Vec3 ap = p - a;
  const double d1 = ab.dot(ap);
  const double d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;

  const Vec3 bp = p - b;
  const double d3 = ab.dot(bp);
  const double d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return b;

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    return a + (d1 / (d1 - d3)) * ab;
  }

  const Vec3 cp = p - c;
  const double d5 = ab.dot(cp);
  const double d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return c;

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    return a + (d2 / (d2 - d6)) * ac;
  }

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    return b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b);
  }

  const double denom = 1.0 / (va + vb + vc);
  return a + ab * (vb * denom) + ac * (vc * denom);
}

DistanceResult PointTriangleDistance(const Vec3& p, const Triangle& tri) {
  return MakeResult(p, ClosestPointOnTriangle(p, tri));
}

DistanceResult SegmentSegmentDistance(const Segment& s1, const Segment& s2) {
  if (SegmentLess(s2, s1)) {
    DistanceResult r = SegmentSegmentOrdered(s2, s1);
    std::swap(r.witness_a, r.witness_b);
    return r;
  }
  return SegmentSegmentOrdered(s1, s2);
}

namespace {

// Point where s crosses the interior of tri, if any.
std::optional<Vec3> SegmentTriangleCrossing(const Segment& s,
                                            const Triangle& tri) {
  const Vec3 normal = (tri[1] - tri[0]).cross(tri[2] - tri[0]);
  const double da = normal.dot(s.a - tri[0]);
  const double db = normal.dot(s.b - tri[0]);
  if ((da > 0.0 && db > 0.0) || (da < 0.0 && db < 0.0) || da == db) {
    return std::nullopt;
  }
  const Vec3 x = s.At(da / (da - db));
  if (PointInTriangle(x, tri, normal)) return x;
  return std::nullopt;
}

}  // namespace

DistanceResult SegmentTriangleDistance(const Segment& s, const Triangle& tri) {
  if (auto x = SegmentTriangleCrossing(s, tri)) {
    return DistanceResult{0.0, *x, *x};
  }
  DistanceResult best = PointTriangleDistance(s.a, tri);
  KeepCloser(best, PointTriangleDistance(s.b, tri));
  for (int i = 0; i < 3; ++i) {
    KeepCloser(best,
               SegmentSegmentDistance(s, Segment{tri[i], tri[(i + 1) % 3]}));
  }
  return best;
}

DistanceResult TriangleTriangleDistance(const Triangle& t1,
                                        const Triangle& t2) {
  for (int i = 0; i < 3; ++i) {
    const Segment e1{t1[i], t1[(i + 1) % 3]};
    if (auto x = SegmentTriangleCrossing(e1, t2)) {
      return DistanceResult{0.0, *x, *x};
    }
    const Segment e2{t2[i], t2[(i + 1) % 3]};
    if (auto x = SegmentTriangleCrossing(e2, t1)) {
      return DistanceResult{0.0, *x, *x};
    }
  }
  // Disjoint triangles: the closest pair involves two edges or a vertex and
  // a face.
  DistanceResult best{std::numeric_limits<double>::infinity(), Vec3::Zero(),
                      Vec3::Zero()};
  for (int i = 0; i < 3; ++i) {
    const Segment e1{t1[i], t1[(i + 1) % 3]};
    for (int j = 0; j < 3; ++j) {
      KeepCloser(best,
                 SegmentSegmentDistance(e1, Segment{t2[j], t2[(j + 1) % 3]}));
    }
  }
  for (int i = 0; i < 3; ++i) {
    KeepCloser(best, PointTriangleDistance(t1[i], t2));
    DistanceResult r = PointTriangleDistance(t2[i], t1);
    std::swap(r.witness_a, r.witness_b);
    KeepCloser(best, r);
  }
  return best;
}

DistanceResult CapsuleCapsuleDistance(const Capsule& c1, const Capsule& c2) {
  const DistanceResult axis = SegmentSegmentDistance(c1.axis, c2.axis);
  const double gap = axis.distance - (c1.radius + c2.radius);
  if (gap <= kContactTolerance) {
    const Vec3 mid = 0.5 * (axis.witness_a + axis.witness_b);
    return DistanceResult{0.0, mid, mid};
  }
  const Vec3 dir = (axis.witness_b - axis.witness_a) / axis.distance;
  return DistanceResult{gap, axis.witness_a + c1.radius * dir,
                        axis.witness_b - c2.radius * dir};
}

}  // namespace cdpr_ccd
