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

#include "cdpr_ccd/path.h"

#include <cmath>
#include <memory>
#include <optional>
#include <random>

#include "gtest/gtest.h"
#include "cdpr_ccd/path_io.h"
#include "cdpr_ccd/scene_io.h"
#include "test_support.h"

namespace cdpr_ccd {
namespace {

constexpr double kPi = 3.141592653589793;

double PoseError(const Pose& a, const Pose& b) {
  return (a.rotation - b.rotation).norm() +
         (a.translation - b.translation).norm();
}

Scene OneCableScene(Vec3 exit, Vec3 attach) {
  Scene s;
  s.cables = {{exit, attach, 0.01}};
  s.platform_mesh =
      std::make_shared<TriangleMesh>(TriangleMesh::Box(Vec3(0.1, 0.1, 0.1)));
  s.platform_radius = 2.0;
  s.l_min = 1.0;
  s.l_max = 10.0;
  s.shorten_distance = 0.1;
  return s;
}

TEST(StraightPathBetweenTest, Stationary) {
  const Pose p = Pose::FromTranslation(Vec3(1, 2, 3));
  const StraightPath path = StraightPathBetween(p, p, {0.4}, {0.4}, 3.0);
  EXPECT_EQ(path.linear_velocity(), Vec3::Zero());
  EXPECT_EQ(path.angular_velocity(), Vec3::Zero());
}

TEST(StraightPathBetweenTest, Translation) {
  const StraightPath path = StraightPathBetween(
      Pose::Identity(), Pose::FromTranslation(Vec3(1, 0, 0)), {}, {}, 2.0);
  EXPECT_NEAR((path.linear_velocity() - Vec3(0.5, 0, 0)).norm(), 0, 1e-15);
  EXPECT_EQ(path.angular_velocity(), Vec3::Zero());
  EXPECT_NEAR(PoseError(path.PoseAt(1.0), Pose::FromTranslation(Vec3(0.5, 0, 0))),
              0, 1e-15);
  EXPECT_EQ(PoseError(path.PoseAt(0.0), Pose::Identity()), 0.0);
}

TEST(StraightPathBetweenTest, QuarterTurn) {
  const Pose p1{ExpRotation(Vec3(0, 0, kPi / 2), 1.0), Vec3::Zero()};
  const StraightPath path = StraightPathBetween(Pose::Identity(), p1, {}, {}, 1.0);
  EXPECT_NEAR((path.angular_velocity() - Vec3(0, 0, kPi / 2)).norm(), 0, 1e-12);
}

TEST(StraightPathBetweenTest, RoundTripOnRandomPoses) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    const Pose p0 = testing::RandomPose(rng, 3.0);
    Pose p1 = testing::RandomPose(rng, 3.0);
    if (LogRotation(p0.rotation.transpose() * p1.rotation).norm() >
        kMaxStraightPathAngle) {
      continue;
    }
    const double duration = testing::Uniform(rng, 0.1, 10.0);
    const StraightPath path = StraightPathBetween(p0, p1, {}, {}, duration);
    EXPECT_LT(PoseError(path.PoseAt(0.0), p0), 1e-12);
    EXPECT_LT(PoseError(path.PoseAt(duration), p1), 1e-9);
    EXPECT_LT(PoseError(path.EndPose(), p1), 1e-9);
  }
}

TEST(StraightPathBetweenTest, RejectsHalfTurn) {
  const Pose p1{ExpRotation(Vec3(1, 0, 0), kPi), Vec3::Zero()};
  EXPECT_THROW(StraightPathBetween(Pose::Identity(), p1, {}, {}, 1.0),
               ModelError);
  EXPECT_THROW(StraightPathBetween(Pose::Identity(), Pose::Identity(), {}, {},
                                   0.0),
               ModelError);
}

TEST(StraightPathTest, ArmConfigInterpolates) {
  const StraightPath path = StraightPathBetween(
      Pose::Identity(), Pose::Identity(), {0.0}, {1.0}, 4.0);
  EXPECT_DOUBLE_EQ(path.ArmConfigAt(2.0)[0], 0.5);
  EXPECT_DOUBLE_EQ(path.ArmConfigAt(0.0)[0], 0.0);
  EXPECT_DOUBLE_EQ(path.ArmConfigAt(4.0)[0], 1.0);
  EXPECT_THROW(path.PoseAt(4.1), ModelError);
  EXPECT_THROW(path.ArmConfigAt(-0.1), ModelError);
  EXPECT_NO_THROW(path.PoseAt(4.0 + 0.5 * kTimeSlack));
}

TEST(StraightPathTest, RejectsBadInput) {
  const Vec3 inf(std::numeric_limits<double>::infinity(), 0, 0);
  EXPECT_THROW(StraightPath(1.0, Pose::Identity(), inf, Vec3::Zero(), {}, {}),
               ModelError);
  EXPECT_THROW(StraightPath(-1.0, Pose::Identity(), Vec3::Zero(), Vec3::Zero(),
                            {}, {}),
               ModelError);
  EXPECT_THROW(StraightPath(1.0, Pose::Identity(), Vec3::Zero(), Vec3::Zero(),
                            {0.0}, {}),
               ModelError);
}

TEST(StraightPathTest, FiniteDifferenceVelocity) {
  std::mt19937_64 rng(5);
  const double h = 1e-6;
  for (int n = 0; n < 50; ++n) {
    const Vec3 v = testing::RandomVec(rng, 2.0);
    const Vec3 w = testing::RandomVec(rng, 0.3);
    const StraightPath path(4.0, testing::RandomPose(rng, 2.0), v, w, {}, {});
    const double t = testing::Uniform(rng, 0.0, 4.0 - h);
    const Pose a = path.PoseAt(t);
    const Pose b = path.PoseAt(t + h);
    EXPECT_NEAR(((b.translation - a.translation) / h - v).norm(), 0, 1e-4);
    const double rate = LogRotation(b.rotation * a.rotation.transpose()).norm() / h;
    EXPECT_NEAR(rate, w.norm(), 1e-4);
    // World-frame angular velocity: the increment is about w itself.
    const Vec3 axis = LogRotation(b.rotation * a.rotation.transpose()) / h;
    EXPECT_NEAR((axis - w).norm(), 0, 1e-4);
  }
}

TEST(PiecewisePathTest, ContinuityChecked) {
  const StraightPath a = StraightPathBetween(
      Pose::Identity(), Pose::FromTranslation(Vec3(1, 0, 0)), {}, {}, 1.0);
  const StraightPath b = StraightPathBetween(
      Pose::FromTranslation(Vec3(1, 0, 0)), Pose::FromTranslation(Vec3(1, 1, 0)),
      {}, {}, 2.0);
  EXPECT_DOUBLE_EQ(PiecewisePath({a, b}).duration(), 3.0);
  EXPECT_THROW(PiecewisePath({a, a}), ModelError);
  EXPECT_THROW(PiecewisePath({}), ModelError);
}

TEST(CableSegmentTest, Examples) {
  const Scene s = OneCableScene(Vec3(0, 0, 3), Vec3(0, 0, 1));
  const StraightPath move = StraightPathBetween(
      Pose::Identity(), Pose::FromTranslation(Vec3(1, 0, 0)), {}, {}, 1.0);
  Segment seg = CableSegmentAt(s, move, 0, 0.0);
  EXPECT_EQ(seg.a, Vec3(0, 0, 3));
  EXPECT_EQ(seg.b, Vec3(0, 0, 1));
  seg = CableSegmentAt(s, move, 0, 1.0);
  EXPECT_NEAR((seg.b - Vec3(1, 0, 1)).norm(), 0, 1e-15);

  const Scene r = OneCableScene(Vec3(0, 0, 3), Vec3(1, 0, 0));
  const Vec3 p0(0.2, -0.4, 0.5);
  const Pose start = Pose::FromTranslation(p0);
  const Pose end{ExpRotation(Vec3(0, 0, kPi / 2), 1.0), p0};
  const StraightPath turn = StraightPathBetween(start, end, {}, {}, 1.0);
  EXPECT_NEAR((CableSegmentAt(r, turn, 0, 1.0).b - (Vec3(0, 1, 0) + p0)).norm(),
              0, 1e-12);
}

TEST(CableLengthBoundsTest, Stationary) {
  const Scene s = OneCableScene(Vec3(0, 0, 3), Vec3(0, 0, 1));
  const StraightPath still = StraightPathBetween(Pose::Identity(),
                                                 Pose::Identity(), {}, {}, 5.0);
  const CableLengthBounds b = ComputeCableLengthBounds(s, still, 0);
  EXPECT_DOUBLE_EQ(b.min, 2.0);
  EXPECT_DOUBLE_EQ(b.max, 2.0);
}

TEST(CableLengthBoundsTest, TranslationWidening) {
  // Exit at the origin, attachment at C; C travels 1 m from radius 2 to 2.5.
  const Scene s = OneCableScene(Vec3::Zero(), Vec3::Zero());
  const double c = 0.3125;
  const Vec3 p1 = Vec3(2, 0, 0) + Vec3(c, std::sqrt(1 - c * c), 0);
  const StraightPath path = StraightPathBetween(
      Pose::FromTranslation(Vec3(2, 0, 0)), Pose::FromTranslation(p1), {}, {},
      1.0);
  const CableLengthBounds b = ComputeCableLengthBounds(s, path, 0);
  EXPECT_NEAR(b.min, 1.5, 1e-12);
  EXPECT_NEAR(b.max, 3.0, 1e-12);
}

TEST(CableLengthBoundsTest, ClampsAndRejects) {
  Scene s = OneCableScene(Vec3::Zero(), Vec3::Zero());
  const StraightPath path = StraightPathBetween(
      Pose::FromTranslation(Vec3(1.5, 0, 0)),
      Pose::FromTranslation(Vec3(9.5, 0, 0)), {}, {}, 1.0);
  const CableLengthBounds b = ComputeCableLengthBounds(s, path, 0);
  EXPECT_EQ(b.min, s.l_min);
  EXPECT_EQ(b.max, s.l_max);
  s.l_max = 5.0;
  EXPECT_THROW(ComputeCableLengthBounds(s, path, 0), ModelError);
}

TEST(CableLengthBoundsTest, ContainsDenselySampledLengths) {
  const Scene s = testing::LoadFixtureScene();
  std::mt19937_64 rng(23);
  BenchConfig config = testing::FixtureBenchConfig(23, 1);
  for (int n = 0; n < 20; ++n) {
    std::size_t resamples = 0;
    const std::optional<StraightPath> sampled =
        SampleRandomPath(s, config, rng, resamples);
    ASSERT_TRUE(sampled.has_value());
    const StraightPath& path = *sampled;
    for (int i = 0; i < static_cast<int>(s.cables.size()); ++i) {
      const CableLengthBounds b = ComputeCableLengthBounds(s, path, i);
      for (int k = 0; k <= 10000; ++k) {
        const double t = path.duration() * k / 10000.0;
        const double l = CableSegmentAt(s, path, i, t).Length();
        ASSERT_LE(b.min, l);
        ASSERT_GE(b.max, l);
      }
    }
  }
}

TEST(ConfigurationTest, MatchesForwardKinematics) {
  const Scene s = testing::LoadFixtureScene();
  const PiecewisePath pp = LoadPath(testing::FixtureDir() / "free.json", s);
  const StraightPath& path = pp.segments().front();
  const Configuration c = ConfigurationAt(s, path, 3.0);
  const auto frames = ArmFramePoses(s, path.PoseAt(3.0), path.ArmConfigAt(3.0));
  ASSERT_EQ(c.arm_frames.size(), frames.size());
  for (std::size_t k = 0; k < frames.size(); ++k) {
    EXPECT_EQ(PoseError(c.arm_frames[k], frames[k]), 0.0);
  }
}

TEST(PathFileTest, FixturePaths) {
  const Scene s = testing::LoadFixtureScene();
  const PiecewisePath pw = LoadPath(testing::FixtureDir() / "piecewise.json", s);
  ASSERT_EQ(pw.segments().size(), 2u);
  EXPECT_DOUBLE_EQ(pw.duration(), 10.0);
  const PiecewisePath thin =
      LoadPath(testing::FixtureDir() / "thin_window.json", s);
  EXPECT_EQ(thin.segments().size(), 1u);

  const PiecewisePath again = PathFromJson(PathToJson(pw), s, "round trip");
  ASSERT_EQ(again.segments().size(), pw.segments().size());
  for (std::size_t k = 0; k < pw.segments().size(); ++k) {
    const StraightPath& a = pw.segments()[k];
    const StraightPath& b = again.segments()[k];
    EXPECT_LT(PoseError(a.EndPose(), b.EndPose()), 1e-12);
    EXPECT_EQ(a.q_end(), b.q_end());
  }
}

TEST(PathFileTest, ErrorsNameField) {
  const Scene s = testing::LoadFixtureScene();
  const auto doc = nlohmann::json::parse(R"({"waypoints": [
      {"pose": {"translation": [0, 0, 2.5]}, "joints": [0, 0, 0, 0]},
      {"pose": {"translation": [0, 0, 2.6]}, "joints": [0, 0, 0]}]})");
  try {
    PathFromJson(doc, s, "p.json");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/waypoints/1/joints"),
              std::string::npos)
        << e.what();
  }
  EXPECT_THROW(PathFromJson(nlohmann::json::object(), s, "p.json"), InputError);
}

}  // namespace
}  // namespace cdpr_ccd
