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

// Regenerates the meshes of the fixture scene and searches for a path with
// a single short collision window.
//
//   make_fixture meshes DIR
//   make_fixture thin-window DIR SEED

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "cdpr_ccd/bench.h"
#include "cdpr_ccd/path_io.h"
#include "cdpr_ccd/scene_io.h"
#include "cdpr_ccd/triangle_mesh.h"

namespace {

using cdpr_ccd::TriangleMesh;
using cdpr_ccd::Vec3;

void WriteMeshes(const std::filesystem::path& dir) {
  auto box = [&](const char* name, Vec3 half, Vec3 center) {
    cdpr_ccd::WriteAsciiStl(TriangleMesh::Box(half, center), dir / name, name);
  };
  box("platform.stl", {0.5, 0.4, 0.25}, {0, 0, 0});
  box("arm_base.stl", {0.08, 0.08, 0.15}, {0, 0, 0.1});
  box("arm_link1.stl", {0.22, 0.05, 0.05}, {-0.3, 0, 0});
  box("arm_link2.stl", {0.2, 0.05, 0.05}, {-0.25, 0, 0});
  box("gripper.stl", {0.06, 0.08, 0.03}, {0, 0, 0});
  box("floor.stl", {6.0, 5.0, 0.1}, {0, 0, -0.1});
  box("pillar.stl", {0.25, 0.25, 1.9}, {0, 0, 0});
}

int FindThinWindow(const std::filesystem::path& dir, std::uint64_t seed) {
  const cdpr_ccd::Scene scene = cdpr_ccd::LoadScene(dir / "scene.json");
  cdpr_ccd::BenchConfig config;
  config.box_min = Vec3(-2.5, -2.0, 1.5);
  config.box_max = Vec3(2.5, 2.0, 3.5);
  config.duration_lo = config.duration_hi = 10.0;
  config.seed = seed;
  config.n_paths = 1;
  config.n_adversarial = 1;
  const cdpr_ccd::PathBatch batch = cdpr_ccd::GenerateBenchPaths(scene, config);
  if (batch.paths.size() <= batch.first_adversarial) {
    std::cerr << "no thin-window path found\n";
    return 1;
  }
  const cdpr_ccd::PiecewisePath path({batch.paths[batch.first_adversarial]});
  std::cout << cdpr_ccd::PathToJson(path).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string usage =
      "usage: make_fixture meshes DIR | make_fixture thin-window DIR SEED\n";
  if (argc < 3) {
    std::cerr << usage;
    return 2;
  }
  const std::string mode = argv[1];
  const std::filesystem::path dir = argv[2];
  if (mode == "meshes") {
    WriteMeshes(dir);
    return 0;
  }
  if (mode == "thin-window" && argc == 4) {
    return FindThinWindow(dir, std::stoull(argv[3]));
  }
  std::cerr << usage;
  return 2;
}
