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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <unistd.h>

#include "gtest/gtest.h"
#include "test_support.h"

namespace cdpr_ccd {
namespace {

using testing::RandomPose;
using testing::RandomVec;
using testing::Uniform;

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("cdpr_ccd_mesh_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

void WriteText(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

TEST(TriangleMeshTest, BoxIsClosedAndOutward) {
  const TriangleMesh box = TriangleMesh::Box(Vec3(0.5, 1.0, 1.5));
  EXPECT_EQ(box.size(), 12u);
  EXPECT_TRUE(box.closed());
  EXPECT_NEAR(box.WindingNumber(Vec3(0.1, 0.2, 0.3)), 1.0, 1e-9);
  EXPECT_NEAR(box.WindingNumber(Vec3(3, 0, 0)), 0.0, 1e-9);
  EXPECT_NEAR(box.max_vertex_norm(), std::sqrt(0.25 + 1 + 2.25), 1e-12);
  for (std::size_t i = 0; i < box.size(); ++i) {
    const Triangle t = box.triangle(i);
    const Vec3 n = (t[1] - t[0]).cross(t[2] - t[0]);
    EXPECT_GT(n.dot((t[0] + t[1] + t[2]) / 3.0), 0.0) << i;
  }
}

TEST(TriangleMeshTest, RejectsBadInput) {
  EXPECT_THROW(TriangleMesh({Vec3::Zero()}, {}), MeshError);
  EXPECT_THROW(TriangleMesh({Vec3::Zero(), Vec3::UnitX(), Vec3::UnitY()},
                            {{0, 1, 5}}),
               MeshError);
  EXPECT_THROW(TriangleMesh({Vec3::Zero(), Vec3::UnitX(), 2 * Vec3::UnitX()},
                            {{0, 1, 2}}),
               MeshError);
}

TEST(StlTest, AsciiRoundTrip) {
  TempDir dir;
  const TriangleMesh box = TriangleMesh::Box(Vec3(0.3, 0.2, 0.1), Vec3(1, 2, 3));
  WriteAsciiStl(box, dir.path() / "box.stl");
  const TriangleMesh back = LoadStl(dir.path() / "box.stl");
  EXPECT_EQ(back.size(), 12u);
  EXPECT_EQ(back.vertices().size(), 8u);
  EXPECT_TRUE(back.closed());
  for (std::size_t i = 0; i < box.size(); ++i) {
    const Triangle a = box.triangle(i);
    const Triangle b = back.triangle(i);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(a[k], b[k]);
  }
}

TEST(StlTest, BinaryRoundTrip) {
  TempDir dir;
  const TriangleMesh box = TriangleMesh::Box(Vec3(0.25, 0.5, 0.125));
  WriteBinaryStl(box, dir.path() / "box.stl");
  const TriangleMesh back = LoadStl(dir.path() / "box.stl");
  EXPECT_EQ(back.size(), 12u);
  EXPECT_EQ(back.vertices().size(), 8u);
  EXPECT_TRUE(back.closed());
}

TEST(StlTest, DropsDegenerateFacets) {
  TempDir dir;
  WriteText(dir.path() / "m.stl", R"(solid m
facet normal 0 0 1
 outer loop
  vertex 0 0 0
  vertex 1 0 0
  vertex 0 1 0
 endloop
endfacet
facet normal 0 0 1
 outer loop
  vertex 0 0 0
  vertex 1 0 0
  vertex 2 0 0
 endloop
endfacet
endsolid m
)");
  EXPECT_EQ(LoadStl(dir.path() / "m.stl").size(), 1u);
}

TEST(StlTest, AllDegenerateIsAnError) {
  TempDir dir;
  WriteText(dir.path() / "m.stl", R"(solid m
facet normal 0 0 1
 outer loop
  vertex 0 0 0
  vertex 1 0 0
  vertex 2 0 0
 endloop
endfacet
endsolid m
)");
  EXPECT_THROW(LoadStl(dir.path() / "m.stl"), MeshError);
}

TEST(StlTest, MissingFile) {
  EXPECT_THROW(LoadStl("/nonexistent/dir/missing.stl"), MeshError);
}

TEST(StlTest, MalformedAsciiNamesTheLine) {
  TempDir dir;
  WriteText(dir.path() / "m.stl", "solid m\nfacet normal 0 0 1\n outer loop\n"
                                  "  vertex 0 0 zero\n");
  try {
    LoadStl(dir.path() / "m.stl");
    FAIL() << "expected MeshError";
  } catch (const MeshError& e) {
    EXPECT_NE(std::string(e.what()).find(":4"), std::string::npos) << e.what();
  }
}

TEST(CapsuleMeshTest, AboveUnitBox) {
  const TriangleMesh box = TriangleMesh::Box(Vec3(0.5, 0.5, 0.5));
  for (double h : {0.7, 1.5, 4.0}) {
    const Capsule c{{Vec3(-0.2, 0.1, h), Vec3(0.3, -0.2, h)}, 0.05};
    EXPECT_NEAR(CapsuleMeshDistance(c, box, Pose::Identity()).distance,
                h - 0.5 - 0.05, 1e-9);
  }
}

TEST(CapsuleMeshTest, EndpointInsidePiercing) {
  const TriangleMesh box = TriangleMesh::Box(Vec3(0.5, 0.5, 0.5));
  const Capsule c{{Vec3(0, 0, 0), Vec3(0, 0, 2)}, 0.01};
  const DistanceResult r = CapsuleMeshDistance(c, box, Pose::Identity());
  EXPECT_EQ(r.distance, 0.0);
  EXPECT_TRUE(CapsuleMeshContact(c, box, Pose::Identity()));
}

TEST(CapsuleMeshTest, FullyInsideIsContact) {
  const TriangleMesh box = TriangleMesh::Box(Vec3(1, 1, 1));
  const Capsule c{{Vec3(-0.2, 0, 0), Vec3(0.2, 0, 0)}, 0.01};
  EXPECT_EQ(CapsuleMeshDistance(c, box, Pose::Identity()).distance, 0.0);
  EXPECT_TRUE(CapsuleMeshContact(c, box, Pose::Identity()));
}

TEST(CapsuleMeshTest, MatchesSampledDistanceForBoxes) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const Vec3 half(Uniform(rng, 0.1, 0.6), Uniform(rng, 0.1, 0.6),
                    Uniform(rng, 0.1, 0.6));
    const TriangleMesh box = TriangleMesh::Box(half);
    const Pose pose = RandomPose(rng, 0.5);
    const Capsule c{testing::RandomSegment(rng, 1.5), Uniform(rng, 0, 0.05)};
    const DistanceResult r = CapsuleMeshDistance(c, box, pose);

    // The box is convex: distance is min over lattice points of the capsule
    // gap, zero when any axis sample lies inside.
    double oracle = std::numeric_limits<double>::infinity();
    for (const Vec3& p : testing::LatticeMeshSurface(box, pose, 40)) {
      oracle = std::min(oracle, testing::PointCapsuleGap(p, c));
    }
    for (int s = 0; s <= 200; ++s) {
      if (testing::InsideBox(pose.Inverse() * c.axis.At(s / 200.0), half)) {
        oracle = 0.0;
      }
    }
    oracle = std::max(oracle, 0.0);
    EXPECT_LE(r.distance, oracle + 1e-9);
    // Lattice spacing on a face is at most 1.2 / 40.
    if (oracle > 0.0) EXPECT_NEAR(r.distance, oracle, 0.03);
    EXPECT_EQ(r.InContact(), CapsuleMeshContact(c, box, pose));
  }
}

TEST(MeshMeshTest, GapBetweenUnitBoxes) {
  const TriangleMesh box = TriangleMesh::Box(Vec3(0.5, 0.5, 0.5));
  const DistanceResult r = MeshMeshDistance(
      box, Pose::Identity(), box, Pose::FromTranslation(Vec3(1.5, 0, 0)));
  EXPECT_NEAR(r.distance, 0.5, 1e-12);
  EXPECT_NEAR((r.witness_a - r.witness_b).norm(), 0.5, 1e-12);
}

TEST(MeshMeshTest, Interpenetrating) {
  const TriangleMesh box = TriangleMesh::Box(Vec3(0.5, 0.5, 0.5));
  const Pose shifted = Pose::FromTranslation(Vec3(0.7, 0.2, 0.1));
  EXPECT_EQ(MeshMeshDistance(box, Pose::Identity(), box, shifted).distance,
            0.0);
  EXPECT_TRUE(MeshMeshContact(box, Pose::Identity(), box, shifted));
}

TEST(MeshMeshTest, NestedIsContact) {
  const TriangleMesh big = TriangleMesh::Box(Vec3(1, 1, 1));
  const TriangleMesh small = TriangleMesh::Box(Vec3(0.1, 0.1, 0.1));
  EXPECT_EQ(
      MeshMeshDistance(big, Pose::Identity(), small, Pose::Identity()).distance,
      0.0);
  EXPECT_EQ(
      MeshMeshDistance(small, Pose::Identity(), big, Pose::Identity()).distance,
      0.0);
}

TEST(MeshMeshTest, SymmetricInvariantAndBelowSamples) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 60; ++k) {
    const TriangleMesh a = TriangleMesh::Box(
        Vec3(Uniform(rng, 0.1, 0.5), Uniform(rng, 0.1, 0.5),
             Uniform(rng, 0.1, 0.5)));
    const TriangleMesh b = TriangleMesh::Box(
        Vec3(Uniform(rng, 0.1, 0.5), Uniform(rng, 0.1, 0.5),
             Uniform(rng, 0.1, 0.5)));
    const Pose pa = RandomPose(rng, 1.0);
    const Pose pb = RandomPose(rng, 1.0);
    const double ab = MeshMeshDistance(a, pa, b, pb).distance;
    EXPECT_NEAR(ab, MeshMeshDistance(b, pb, a, pa).distance, 1e-12);

    const Pose g = RandomPose(rng, 10.0);
    EXPECT_NEAR(ab, MeshMeshDistance(a, g * pa, b, g * pb).distance, 1e-9);

    const auto sa = testing::LatticeMeshSurface(a, pa, 12);
    const auto sb = testing::LatticeMeshSurface(b, pb, 12);
    double sampled = std::numeric_limits<double>::infinity();
    for (const Vec3& p : sa) {
      for (const Vec3& q : sb) sampled = std::min(sampled, (p - q).norm());
    }
    EXPECT_LE(ab, sampled + 1e-9);
    EXPECT_EQ(ab <= kContactTolerance, MeshMeshContact(a, pa, b, pb));
  }
}

}  // namespace
}  // namespace cdpr_ccd
