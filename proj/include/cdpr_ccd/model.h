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

#ifndef CDPR_CCD_MODEL_H_
#define CDPR_CCD_MODEL_H_

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cdpr_ccd/geometry.h"
#include "cdpr_ccd/triangle_mesh.h"

namespace cdpr_ccd {

// Two exit points (or two attachment points) closer than this are the same.
inline constexpr double kCoincidenceTolerance = 1e-9;

// Inconsistent scene/path data discovered while validating.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CableSpec {
  Vec3 exit_point = Vec3::Zero();        // A_i, world frame
  Vec3 attachment_point = Vec3::Zero();  // B_i, platform frame
  double radius = 0.0;                   // may include a safety margin

  // b_i = |C B_i|.
  double attachment_norm() const { return attachment_point.norm(); }
};

enum class JointKind { kRevolute, kPrismatic };

// One arm joint. Frame k is placed as
//   F_k = F_{k-1} * Motion(axis, q_k) * Translation(offset)
// where F_{-1} is the platform frame and Motion rotates about (or slides
// along) `axis` through the origin of F_{k-1}. The optional body mesh is
// expressed in F_k.
struct JointSpec {
  JointKind kind = JointKind::kRevolute;
  Vec3 axis = Vec3::UnitZ();
  Vec3 offset = Vec3::Zero();
  double lower = 0.0;
  double upper = 0.0;
  std::shared_ptr<const TriangleMesh> body;

  // Largest |q| within the limits; the travel bound for prismatic joints.
  double max_abs_position() const;
};

struct EnvironmentBody {
  std::shared_ptr<const TriangleMesh> mesh;
  Pose pose;
};

struct Scene {
  std::vector<CableSpec> cables;
  std::shared_ptr<const TriangleMesh> platform_mesh;
  // Bound on |C x| over the platform mesh.
  double platform_radius = 0.0;
  std::vector<JointSpec> arm;
  std::vector<EnvironmentBody> environment;
  // Workspace-wide cable length bounds.
  double l_min = 0.0;
  double l_max = 0.0;
  // Length d of the cable portion next to B_i ignored against the platform.
  double shorten_distance = 0.0;
};

// Collision element kinds. Indices are 0-based; arm bodies are identified by
// the index of the joint that carries them.
struct CableCable {
  int i = 0;
  int j = 0;
  bool operator==(const CableCable&) const = default;
};
struct CablePlatform {
  int cable = 0;
  bool operator==(const CablePlatform&) const = default;
};
struct CableArmBody {
  int cable = 0;
  int joint = 0;
  bool operator==(const CableArmBody&) const = default;
};
struct CableEnvironment {
  int cable = 0;
  int environment = 0;
  bool operator==(const CableEnvironment&) const = default;
};

struct BodyRef {
  enum class Kind { kPlatform, kArm, kEnvironment };
  Kind kind = Kind::kPlatform;
  int index = 0;
  bool operator==(const BodyRef&) const = default;
};
struct BodyBody {
  BodyRef a;
  BodyRef b;
  bool operator==(const BodyBody&) const = default;
};

using PairKind = std::variant<CableCable, CablePlatform, CableArmBody,
                              CableEnvironment, BodyBody>;

std::string Describe(const PairKind& pair);
std::string Describe(const BodyRef& body);

// D[0] = 0, D[k] = sum_{t<k} |offset_t|. One entry per joint plus one.
struct CumulativeLengths {
  std::vector<double> d;
};

// Empty iff every scene invariant holds. Each entry names what failed.
std::vector<std::string> ValidateScene(const Scene& scene);

// Throws ModelError listing all diagnostics when the scene is invalid.
void CheckScene(const Scene& scene);

// All checked pairs, deterministic order: per cable ascending, cable-cable,
// cable-platform, cable-arm, cable-environment; then body-body pairs.
// Cable pairs sharing an exit or attachment point, adjacent arm bodies, and
// the first arm body against the platform are left out. Environment bodies
// never move, so environment/environment pairs are not listed.
std::vector<PairKind> EnumerateCollisionElements(const Scene& scene);

// True when `pair` is excluded by the disabling rules above.
bool IsPairDisabled(const Scene& scene, const PairKind& pair);

CumulativeLengths ComputeCumulativeLengths(const Scene& scene);

// Like the cumulative lengths, but also adds the travel of every prismatic
// joint, so entry k bounds |C o_k| where o_k is the pivot of joint k (and
// entry n bounds the origin of the last frame). Equal to the cumulative
// lengths for all-revolute arms.
CumulativeLengths FrameOriginRadii(const Scene& scene);

// World poses of every arm frame F_0..F_{n-1} for the given platform pose
// and joint positions.
std::vector<Pose> ArmFramePoses(const Scene& scene, const Pose& platform,
                                std::span<const double> q);

// Pose of F_k relative to F_{k-1}.
Pose JointTransform(const JointSpec& joint, double q);

}  // namespace cdpr_ccd

#endif  // CDPR_CCD_MODEL_H_
