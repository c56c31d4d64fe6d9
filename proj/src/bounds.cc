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

#include "cdpr_ccd/bounds.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "overloaded.h"

namespace cdpr_ccd {
namespace {

void RequirePositive(double l_min, const char* what) {
  if (!(l_min > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be > 0");
  }
}

struct PlacedMesh {
  const TriangleMesh* mesh;
  Pose pose;
};

PlacedMesh Place(const Scene& scene, const Configuration& c,
                 const BodyRef& body) {
  switch (body.kind) {
    case BodyRef::Kind::kPlatform:
      return {scene.platform_mesh.get(), c.platform};
    case BodyRef::Kind::kArm:
      return {scene.arm.at(body.index).body.get(), c.arm_frames.at(body.index)};
    case BodyRef::Kind::kEnvironment: {
      const EnvironmentBody& e = scene.environment.at(body.index);
      return {e.mesh.get(), e.pose};
    }
  }
  throw std::logic_error("unknown body kind");
}

// Sum over joints [first, last] of the motion they impart to body `last`,
// measured from each joint's pivot.
double ChainSpeed(const Scene& scene, const JointRates& rates,
                  const CumulativeLengths& radii, int first, int last) {
  const double body_norm = scene.arm.at(last).body->max_vertex_norm();
  double sum = 0.0;
  for (int k = first; k <= last; ++k) {
    const double lever = radii.d[last + 1] - radii.d[k] + body_norm;
    sum += rates.angular[k] * lever + rates.linear[k];
  }
  return sum;
}

// Bound on |C x| over body `joint` for any joint configuration.
double ArmBodyReach(const Scene& scene, const CumulativeLengths& radii,
                    int joint) {
  return radii.d[joint + 1] + scene.arm.at(joint).body->max_vertex_norm();
}

}  // namespace

JointRates ComputeJointRates(const Scene& scene, const StraightPath& path) {
  CheckPathAgainstScene(scene, path);
  JointRates rates;
  for (std::size_t k = 0; k < scene.arm.size(); ++k) {
    const double rate =
        std::abs(path.q_end()[k] - path.q_start()[k]) / path.duration();
    const bool revolute = scene.arm[k].kind == JointKind::kRevolute;
    rates.angular.push_back(revolute ? rate : 0.0);
    rates.linear.push_back(revolute ? 0.0 : rate);
  }
  return rates;
}

double AttachmentSpeedBound(double v_p, double omega_p, double b_i) {
  return v_p + omega_p * b_i;
}

double CableWorldRateBound(double v_p, double omega_p, double b_i,
                           double l_min) {
  RequirePositive(l_min, "L_i_min");
  return AttachmentSpeedBound(v_p, omega_p, b_i) / l_min;
}

double VmaxCablePlatform(double v_p, double omega_p, double b_i, double l_min,
                         double l_max) {
  RequirePositive(l_min, "L_i_min");
  if (!(l_min <= l_max)) {
    throw std::invalid_argument("L_i_min must not exceed L_i_max");
  }
  return l_max * (CableWorldRateBound(v_p, omega_p, b_i, l_min) + omega_p);
}

double VmaxCableCable(double v_p, double omega_p, double b_i, double b_j,
                      double l_i_min, double l_j_min, double l_i_max) {
  RequirePositive(l_i_min, "L_i_min");
  RequirePositive(l_j_min, "L_j_min");
  return l_i_max * (CableWorldRateBound(v_p, omega_p, b_i, l_i_min) +
                    CableWorldRateBound(v_p, omega_p, b_j, l_j_min));
}

double VmaxCableArm(double v_p, double omega_p, double b_i, double l_min,
                    double l_max, double attachment_norm,
                    const JointRates& rates, const CumulativeLengths& radii,
                    int m) {
  if (rates.angular.size() != rates.linear.size() ||
      radii.d.size() != rates.size() + 1) {
    throw std::invalid_argument(
        "joint rates and cumulative lengths describe different arms");
  }
  if (m < 2 || static_cast<std::size_t>(m - 1) > rates.size()) {
    throw std::invalid_argument("joint count m out of range");
  }
  double v = VmaxCablePlatform(v_p, omega_p, b_i, l_min, l_max);
  for (int k = 0; k <= m - 2; ++k) {
    v += rates.angular[k] * (l_max + attachment_norm + radii.d[k]) +
         rates.linear[k];
  }
  return v;
}

double VmaxBodyBody(const Scene& scene, const StraightPath& path,
                    const BodyBody& pair) {
  using K = BodyRef::Kind;
  const JointRates rates = ComputeJointRates(scene, path);
  const CumulativeLengths radii = FrameOriginRadii(scene);
  const double v_p = path.linear_speed();
  const double omega_p = path.angular_speed();

  // Order so that `a` is the base and `b` the moving body (the environment
  // is always the base).
  BodyRef a = pair.a;
  BodyRef b = pair.b;
  if (b.kind == K::kEnvironment) std::swap(a, b);
  if (a.kind == K::kArm && b.kind == K::kPlatform) std::swap(a, b);
  if (a.kind == K::kArm && b.kind == K::kArm && a.index > b.index) {
    std::swap(a, b);
  }

  if (a.kind == K::kEnvironment) {
    if (b.kind == K::kEnvironment) return 0.0;
    if (b.kind == K::kPlatform) {
      return v_p + omega_p * scene.platform_radius;
    }
    return v_p + omega_p * ArmBodyReach(scene, radii, b.index) +
           ChainSpeed(scene, rates, radii, 0, b.index);
  }
  if (a.kind == K::kPlatform) {
    return ChainSpeed(scene, rates, radii, 0, b.index);
  }
  return ChainSpeed(scene, rates, radii, a.index + 1, b.index);
}

std::vector<CableLengthBounds> ComputeAllCableLengthBounds(
    const Scene& scene, const StraightPath& path) {
  std::vector<CableLengthBounds> out;
  for (std::size_t i = 0; i < scene.cables.size(); ++i) {
    out.push_back(ComputeCableLengthBounds(scene, path, static_cast<int>(i)));
  }
  return out;
}

PairBounds ComputePairBounds(const Scene& scene, const StraightPath& path,
                             const std::vector<CableLengthBounds>& cables,
                             const PairKind& pair) {
  const double v_p = path.linear_speed();
  const double omega_p = path.angular_speed();
  return std::visit(
      Overloaded(
          [&](const CableCable& p) {
            const CableSpec& ci = scene.cables[p.i];
            const CableSpec& cj = scene.cables[p.j];
            // The formula bounds cable i relative to cable j; taking the
            // larger of the two maximum lengths makes it hold in both
            // directions.
            const double l_max = std::max(cables[p.i].max, cables[p.j].max);
            return PairBounds{
                VmaxCableCable(v_p, omega_p, ci.attachment_norm(),
                               cj.attachment_norm(), cables[p.i].min,
                               cables[p.j].min, l_max),
                (ci.attachment_point - cj.attachment_point).norm()};
          },
          [&](const CablePlatform& p) {
            const CableSpec& c = scene.cables[p.cable];
            return PairBounds{
                VmaxCablePlatform(v_p, omega_p, c.attachment_norm(),
                                  cables[p.cable].min, cables[p.cable].max),
                scene.shorten_distance};
          },
          [&](const CableArmBody& p) {
            const CableSpec& c = scene.cables[p.cable];
            return PairBounds{
                VmaxCableArm(v_p, omega_p, c.attachment_norm(),
                             cables[p.cable].min, cables[p.cable].max,
                             c.attachment_norm(),
                             ComputeJointRates(scene, path),
                             FrameOriginRadii(scene), p.joint + 2),
                std::nullopt};
          },
          [&](const CableEnvironment& p) {
            // Points of the segment A_i + s (B_i - A_i) move at s |dB_i/dt|
            // in the world frame, where the environment is fixed.
            const CableSpec& c = scene.cables[p.cable];
            return PairBounds{
                AttachmentSpeedBound(v_p, omega_p, c.attachment_norm()),
                std::nullopt};
          },
          [&](const BodyBody& p) {
            return PairBounds{VmaxBodyBody(scene, path, p), std::nullopt};
          }),
      pair);
}

Capsule CableCapsule(const Scene& scene, const Pose& platform, int cable) {
  const CableSpec& c = scene.cables.at(cable);
  return Capsule{CableSegment(c, platform), c.radius};
}

Capsule ShortenedCableCapsule(const Scene& scene, const Pose& platform,
                              int cable) {
  const CableSpec& c = scene.cables.at(cable);
  const Vec3 b = platform * c.attachment_point;
  const Vec3 ba = c.exit_point - b;
  const double length = ba.norm();
  if (!(length > scene.shorten_distance)) {
    throw ModelError("cable " + std::to_string(cable) +
                     " is not longer than the shortening distance");
  }
  const Vec3 b_tilde = b + scene.shorten_distance / length * ba;
  return Capsule{Segment{c.exit_point, b_tilde}, c.radius};
}

DistanceResult DminCablePlatform(const Scene& scene, const Configuration& c,
                                 int cable) {
  return CapsuleMeshDistance(ShortenedCableCapsule(scene, c.platform, cable),
                             *scene.platform_mesh, c.platform);
}

DistanceResult DminCableCable(const Scene& scene, const Configuration& c,
                              int i, int j) {
  return CapsuleCapsuleDistance(CableCapsule(scene, c.platform, i),
                                CableCapsule(scene, c.platform, j));
}

DistanceResult DminCableArm(const Scene& scene, const Configuration& c,
                            int cable, int joint) {
  const JointSpec& j = scene.arm.at(joint);
  if (j.body == nullptr) {
    throw ModelError("arm joint " + std::to_string(joint) + " has no body");
  }
  return CapsuleMeshDistance(CableCapsule(scene, c.platform, cable), *j.body,
                             c.arm_frames.at(joint));
}

DistanceResult DminCableEnvironment(const Scene& scene, const Configuration& c,
                                    int cable, int environment) {
  const EnvironmentBody& e = scene.environment.at(environment);
  return CapsuleMeshDistance(CableCapsule(scene, c.platform, cable), *e.mesh,
                             e.pose);
}

DistanceResult DminBodyBody(const Scene& scene, const Configuration& c,
                            const BodyBody& pair) {
  const PlacedMesh a = Place(scene, c, pair.a);
  const PlacedMesh b = Place(scene, c, pair.b);
  return MeshMeshDistance(*a.mesh, a.pose, *b.mesh, b.pose);
}

DistanceResult DminPair(const Scene& scene, const Configuration& c,
                        const PairKind& pair) {
  return std::visit(
      Overloaded(
          [&](const CableCable& p) { return DminCableCable(scene, c, p.i, p.j); },
          [&](const CablePlatform& p) {
            return DminCablePlatform(scene, c, p.cable);
          },
          [&](const CableArmBody& p) {
            return DminCableArm(scene, c, p.cable, p.joint);
          },
          [&](const CableEnvironment& p) {
            return DminCableEnvironment(scene, c, p.cable, p.environment);
          },
          [&](const BodyBody& p) { return DminBodyBody(scene, c, p); }),
      pair);
}

bool PairInContact(const Scene& scene, const Configuration& c,
                   const PairKind& pair) {
  return std::visit(
      Overloaded(
          [&](const CableCable& p) {
            return DminCableCable(scene, c, p.i, p.j).InContact();
          },
          [&](const CablePlatform& p) {
            return CapsuleMeshContact(
                ShortenedCableCapsule(scene, c.platform, p.cable),
                *scene.platform_mesh, c.platform);
          },
          [&](const CableArmBody& p) {
            return CapsuleMeshContact(CableCapsule(scene, c.platform, p.cable),
                                      *scene.arm.at(p.joint).body,
                                      c.arm_frames.at(p.joint));
          },
          [&](const CableEnvironment& p) {
            const EnvironmentBody& e = scene.environment.at(p.environment);
            return CapsuleMeshContact(CableCapsule(scene, c.platform, p.cable),
                                      *e.mesh, e.pose);
          },
          [&](const BodyBody& p) {
            const PlacedMesh a = Place(scene, c, p.a);
            const PlacedMesh b = Place(scene, c, p.b);
            return MeshMeshContact(*a.mesh, a.pose, *b.mesh, b.pose);
          }),
      pair);
}

DistanceResult DminCablePlatform(const Scene& scene, const StraightPath& path,
                                 int cable, double t) {
  return DminCablePlatform(scene, ConfigurationAt(scene, path, t), cable);
}

DistanceResult DminCableCable(const Scene& scene, const StraightPath& path,
                              int i, int j, double t) {
  return DminCableCable(scene, ConfigurationAt(scene, path, t), i, j);
}

DistanceResult DminCableArm(const Scene& scene, const StraightPath& path,
                            int cable, int joint, double t) {
  return DminCableArm(scene, ConfigurationAt(scene, path, t), cable, joint);
}

}  // namespace cdpr_ccd
