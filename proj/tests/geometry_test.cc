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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "test_support.h"

namespace cdpr_ccd {
namespace {

using testing::RandomSegment;
using testing::RandomTriangle;
using testing::RandomVec;

constexpr double kPi = std::numbers::pi;

Rotation SeriesExp(const Vec3& omega, double t) {
  const Eigen::Matrix3d a = Skew(omega) * t;
  Eigen::Matrix3d term = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d sum = term;
  for (int k = 1; k < 20; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

TEST(ExpRotationTest, ZeroVelocityIsIdentity) {
  EXPECT_TRUE(ExpRotation(Vec3::Zero(), 5.0).isApprox(Rotation::Identity()));
}

TEST(ExpRotationTest, QuarterTurnAboutZ) {
  const Vec3 x = ExpRotation(Vec3(0, 0, kPi / 2), 1.0) * Vec3::UnitX();
  EXPECT_NEAR((x - Vec3::UnitY()).norm(), 0.0, 1e-12);
}

TEST(ExpRotationTest, MatchesSeries) {
  const Vec3 omega(0.3, -0.2, 0.7);
  EXPECT_LT((ExpRotation(omega, 0.9) - SeriesExp(omega, 0.9)).norm(), 1e-12);
}

TEST(ExpRotationTest, SmallAnglesMatchSeries) {
  for (double scale : {1e-3, 1e-5, 1e-8}) {
    const Vec3 omega = scale * Vec3(0.3, -0.2, 0.7);
    EXPECT_LT((ExpRotation(omega, 1.0) - SeriesExp(omega, 1.0)).norm(), 1e-15)
        << scale;
  }
}

TEST(ExpRotationTest, OneParameterGroup) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const Vec3 omega = RandomVec(rng, 2.0);
    const double t1 = testing::Uniform(rng, -2, 2);
    const double t2 = testing::Uniform(rng, -2, 2);
    const Rotation lhs = ExpRotation(omega, t1 + t2);
    const Rotation rhs = ExpRotation(omega, t1) * ExpRotation(omega, t2);
    EXPECT_LT((lhs - rhs).norm(), 1e-9);
  }
}

TEST(LogRotationTest, InvertsExp) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 500; ++k) {
    Vec3 v = RandomVec(rng, 1.0).normalized() *
             testing::Uniform(rng, 0.0, kPi - 1e-4);
    const Vec3 back = LogRotation(RotationFromVector(v));
    EXPECT_LT((back - v).norm(), 1e-7) << v.transpose();
  }
}

TEST(LogRotationTest, NearPi) {
  const Vec3 axis = Vec3(1, 2, -0.5).normalized();
  for (double angle : {kPi - 1e-3, kPi - 1e-6, kPi}) {
    const Vec3 v = LogRotation(RotationFromVector(axis * angle));
    EXPECT_NEAR(v.norm(), angle, 1e-6);
    EXPECT_NEAR(std::abs(v.normalized().dot(axis)), 1.0, 1e-6);
    EXPECT_LT((RotationFromVector(v) - RotationFromVector(axis * angle)).norm(),
              1e-6);
  }
}

TEST(SegmentSegmentTest, ParallelOffset) {
  const DistanceResult r = SegmentSegmentDistance(
      {Vec3(0, 0, 0), Vec3(1, 0, 0)}, {Vec3(0, 1, 1), Vec3(1, 1, 1)});
  EXPECT_NEAR(r.distance, std::sqrt(2.0), 1e-12);
}

TEST(SegmentSegmentTest, Crossing) {
  const DistanceResult r = SegmentSegmentDistance(
      {Vec3(0, 0, 0), Vec3(1, 0, 0)}, {Vec3(0.5, -1, 0), Vec3(0.5, 1, 0)});
  EXPECT_EQ(r.distance, 0.0);
  EXPECT_NEAR((r.witness_a - Vec3(0.5, 0, 0)).norm(), 0.0, 1e-12);
}

TEST(SegmentSegmentTest, DegenerateSegments) {
  const Segment point{Vec3(1, 1, 0), Vec3(1, 1, 0)};
  const Segment line{Vec3(0, 0, 0), Vec3(2, 0, 0)};
  EXPECT_NEAR(SegmentSegmentDistance(point, line).distance, 1.0, 1e-12);
  EXPECT_NEAR(SegmentSegmentDistance(point, point).distance, 0.0, 1e-12);
}

TEST(SegmentSegmentTest, MatchesGridOracle) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const Segment a = RandomSegment(rng);
    const Segment b = RandomSegment(rng);
    const double oracle = testing::OracleSegmentSegment(a, b);
    const DistanceResult r = SegmentSegmentDistance(a, b);
    EXPECT_LE(r.distance, oracle + 1e-9);
    EXPECT_NEAR(r.distance, oracle, 1e-3);
  }
}

TEST(SegmentSegmentTest, SymmetricAndWitnessesConsistent) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 1000; ++k) {
    const Segment a = RandomSegment(rng);
    const Segment b = RandomSegment(rng);
    const DistanceResult ab = SegmentSegmentDistance(a, b);
    const DistanceResult ba = SegmentSegmentDistance(b, a);
    EXPECT_NEAR(ab.distance, ba.distance, 1e-12);
    EXPECT_NEAR((ab.witness_a - ab.witness_b).norm(), ab.distance, 1e-9);
  }
}

TEST(SegmentTriangleTest, AboveFace) {
  const Triangle tri{Vec3(0, 0, 0), Vec3(2, 0, 0), Vec3(0, 2, 0)};
  const DistanceResult r =
      SegmentTriangleDistance({Vec3(0, 0, 1), Vec3(1, 0, 1)}, tri);
  EXPECT_NEAR(r.distance, 1.0, 1e-12);
}

TEST(SegmentTriangleTest, Piercing) {
  const Triangle tri{Vec3(0, 0, 0), Vec3(2, 0, 0), Vec3(0, 2, 0)};
  const DistanceResult r =
      SegmentTriangleDistance({Vec3(0.5, 0.5, 1), Vec3(0.5, 0.5, -1)}, tri);
  EXPECT_EQ(r.distance, 0.0);
  EXPECT_TRUE(r.InContact());
}

TEST(SegmentTriangleTest, MatchesOracle) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 60; ++k) {
    const Segment s = RandomSegment(rng);
    const Triangle t = RandomTriangle(rng);
    const double oracle = testing::OracleSegmentTriangle(s, t);
    const DistanceResult r = SegmentTriangleDistance(s, t);
    EXPECT_LE(r.distance, oracle + 1e-9);
    EXPECT_NEAR(r.distance, oracle, 1e-3);
  }
}

TEST(PointTriangleTest, MatchesOracle) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 500; ++k) {
    const Vec3 p = RandomVec(rng, 2.0);
    const Triangle t = RandomTriangle(rng);
    EXPECT_NEAR(PointTriangleDistance(p, t).distance,
                testing::OraclePointTriangle(p, t), 1e-6);
  }
}

TEST(TriangleTriangleTest, SymmetricAndLowerBound) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    const Triangle a = RandomTriangle(rng);
    Triangle b = RandomTriangle(rng);
    const Vec3 shift = RandomVec(rng, 1.5);
    for (Vec3& v : b) v += shift;
    const DistanceResult ab = TriangleTriangleDistance(a, b);
    const DistanceResult ba = TriangleTriangleDistance(b, a);
    EXPECT_NEAR(ab.distance, ba.distance, 1e-12);
    double sampled = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const Vec3 p = testing::TrianglePoint(a, i / 10.0, j / 10.0);
        sampled = std::min(sampled, PointTriangleDistance(p, b).distance);
      }
    }
    EXPECT_LE(ab.distance, sampled + 1e-9);
    if (ab.distance > 0) {
      EXPECT_NEAR((ab.witness_a - ab.witness_b).norm(), ab.distance, 1e-9);
    }
  }
}

TEST(CapsuleCapsuleTest, ParallelCapsules) {
  const Capsule a{{Vec3(0, 0, 0), Vec3(1, 0, 0)}, 0.01};
  const Capsule b{{Vec3(0, 1, 1), Vec3(1, 1, 1)}, 0.01};
  EXPECT_NEAR(CapsuleCapsuleDistance(a, b).distance, std::sqrt(2.0) - 0.02,
              1e-12);
}

TEST(CapsuleCapsuleTest, OverlapClampsToZero) {
  const Capsule a{{Vec3(0, 0, 0), Vec3(1, 0, 0)}, 0.3};
  const Capsule b{{Vec3(0, 0.5, 0), Vec3(1, 0.5, 0)}, 0.3};
  const DistanceResult r = CapsuleCapsuleDistance(a, b);
  EXPECT_EQ(r.distance, 0.0);
  EXPECT_TRUE(r.InContact());
}

TEST(CapsuleCapsuleTest, LowerBoundOfSampledSurfaces) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    const Capsule a{RandomSegment(rng), testing::Uniform(rng, 0.0, 0.1)};
    const Capsule b{RandomSegment(rng), testing::Uniform(rng, 0.0, 0.1)};
    const double d = CapsuleCapsuleDistance(a, b).distance;
    // Points on b's surface, measured against a's exact surface.
    double sampled = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 2000; ++s) {
      const Vec3 dir = RandomVec(rng).normalized();
      const Vec3 p = b.axis.At(testing::Uniform(rng, 0, 1)) + b.radius * dir;
      sampled = std::min(sampled, testing::PointCapsuleGap(p, a));
    }
    EXPECT_LE(d, std::max(sampled, 0.0) + 1e-9);
  }
}

TEST(DistanceTest, TranslationInvariance) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 300; ++k) {
    const Segment a = RandomSegment(rng);
    const Triangle t = RandomTriangle(rng);
    const Pose g = testing::RandomPose(rng, 5.0);
    const Segment ga{g * a.a, g * a.b};
    const Triangle gt{g * t[0], g * t[1], g * t[2]};
    EXPECT_NEAR(SegmentTriangleDistance(a, t).distance,
                SegmentTriangleDistance(ga, gt).distance, 1e-9);
    const Segment b = RandomSegment(rng);
    EXPECT_NEAR(SegmentSegmentDistance(a, b).distance,
                SegmentSegmentDistance(ga, Segment{g * b.a, g * b.b}).distance,
                1e-9);
  }
}

}  // namespace
}  // namespace cdpr_ccd
