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

#include "cdpr_ccd/model.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "overloaded.h"

namespace cdpr_ccd {
namespace {

std::string Indexed(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

bool Coincident(const Vec3& a, const Vec3& b) {
  return (a - b).norm() <= kCoincidenceTolerance;
}

bool HasBody(const Scene& scene, int joint) {
  return scene.arm[static_cast<std::size_t>(joint)].body != nullptr;
}

}  // namespace

double JointSpec::max_abs_position() const {
  return std::max(std::abs(lower), std::abs(upper));
}

std::string Describe(const BodyRef& body) {
  switch (body.kind) {
    case BodyRef::Kind::kPlatform:
      return "platform";
    case BodyRef::Kind::kArm:
      return "arm" + std::to_string(body.index);
    case BodyRef::Kind::kEnvironment:
      return "env" + std::to_string(body.index);
  }
  return "?";
}

std::string Describe(const PairKind& pair) {
  return std::visit(
      Overloaded(
          [](const CableCable& p) {
            return "cable" + std::to_string(p.i) + "-cable" +
                   std::to_string(p.j);
          },
          [](const CablePlatform& p) {
            return "cable" + std::to_string(p.cable) + "-platform";
          },
          [](const CableArmBody& p) {
            return "cable" + std::to_string(p.cable) + "-arm" +
                   std::to_string(p.joint);
          },
          [](const CableEnvironment& p) {
            return "cable" + std::to_string(p.cable) + "-env" +
                   std::to_string(p.environment);
          },
          [](const BodyBody& p) {
            return Describe(p.a) + "-" + Describe(p.b);
          }),
      pair);
}

std::vector<std::string> ValidateScene(const Scene& scene) {
  std::vector<std::string> out;
  if (scene.cables.empty()) out.push_back("cables: at least one cable needed");
  for (std::size_t i = 0; i < scene.cables.size(); ++i) {
    const CableSpec& c = scene.cables[i];
    if (!(c.radius > 0.0)) {
      out.push_back(Indexed("cables", i) + ".radius must be > 0");
    }
    if (!c.exit_point.allFinite()) {
      out.push_back(Indexed("cables", i) + ".exit must be finite");
    }
    if (!c.attachment_point.allFinite()) {
      out.push_back(Indexed("cables", i) + ".attach must be finite");
    }
  }
  if (scene.platform_mesh == nullptr) {
    out.push_back("platform: mesh missing");
  } else if (!(scene.platform_radius >=
               scene.platform_mesh->max_vertex_norm())) {
    std::ostringstream msg;
    msg << "platform.radius " << scene.platform_radius
        << " is below the largest mesh vertex norm "
        << scene.platform_mesh->max_vertex_norm();
    out.push_back(msg.str());
  }
  for (std::size_t k = 0; k < scene.arm.size(); ++k) {
    const JointSpec& j = scene.arm[k];
    if (!j.axis.allFinite() || std::abs(j.axis.norm() - 1.0) > 1e-9) {
      out.push_back(Indexed("arm", k) + ".axis must be a unit vector");
    }
    if (!j.offset.allFinite()) {
      out.push_back(Indexed("arm", k) + ".offset must be finite");
    }
    if (!(j.lower <= j.upper)) {
      out.push_back(Indexed("arm", k) + ".limits must satisfy lower <= upper");
    }
  }
  for (std::size_t e = 0; e < scene.environment.size(); ++e) {
    if (scene.environment[e].mesh == nullptr) {
      out.push_back(Indexed("environment", e) + ": mesh missing");
    }
  }
  if (!(scene.l_min > 0.0)) out.push_back("bounds.l_min must be > 0");
  if (!(scene.l_min <= scene.l_max)) {
    out.push_back("bounds.l_max must be >= bounds.l_min");
  }
  if (!(scene.shorten_distance > 0.0)) {
    out.push_back("bounds.shorten_d must be > 0");
  } else if (!(scene.shorten_distance < scene.l_min)) {
    out.push_back("bounds.shorten_d must be < bounds.l_min");
  }
  return out;
}

void CheckScene(const Scene& scene) {
  const std::vector<std::string> diagnostics = ValidateScene(scene);
  if (diagnostics.empty()) return;
  std::string msg = "invalid scene:";
  for (const std::string& d : diagnostics) msg += "\n  " + d;
  throw ModelError(msg);
}

bool IsPairDisabled(const Scene& scene, const PairKind& pair) {
  return std::visit(
      Overloaded(
          [&](const CableCable& p) {
            const CableSpec& a = scene.cables[p.i];
            const CableSpec& b = scene.cables[p.j];
            return p.i == p.j || Coincident(a.exit_point, b.exit_point) ||
                   Coincident(a.attachment_point, b.attachment_point);
          },
          [](const CablePlatform&) { return false; },
          [](const CableArmBody&) { return false; },
          [](const CableEnvironment&) { return false; },
          [](const BodyBody& p) {
            using K = BodyRef::Kind;
            if (p.a == p.b) return true;
            if (p.a.kind == K::kEnvironment && p.b.kind == K::kEnvironment) {
              return true;
            }
            const auto parent_child = [](const BodyRef& x, const BodyRef& y) {
              // Platform acts as the parent of joint 0.
              if (x.kind == K::kPlatform && y.kind == K::kArm) {
                return y.index == 0;
              }
              if (x.kind == K::kArm && y.kind == K::kArm) {
                return std::abs(x.index - y.index) == 1;
              }
              return false;
            };
            return parent_child(p.a, p.b) || parent_child(p.b, p.a);
          }),
      pair);
}

std::vector<PairKind> EnumerateCollisionElements(const Scene& scene) {
  const int n_cables = static_cast<int>(scene.cables.size());
  const int n_joints = static_cast<int>(scene.arm.size());
  const int n_env = static_cast<int>(scene.environment.size());

  std::vector<PairKind> out;
  const auto add = [&](const PairKind& p) {
    if (!IsPairDisabled(scene, p)) out.push_back(p);
  };
  for (int i = 0; i < n_cables; ++i) {
    for (int j = i + 1; j < n_cables; ++j) add(CableCable{i, j});
    add(CablePlatform{i});
    for (int k = 0; k < n_joints; ++k) {
      if (HasBody(scene, k)) add(CableArmBody{i, k});
    }
    for (int e = 0; e < n_env; ++e) add(CableEnvironment{i, e});
  }

  std::vector<BodyRef> bodies{{BodyRef::Kind::kPlatform, 0}};
  for (int k = 0; k < n_joints; ++k) {
    if (HasBody(scene, k)) bodies.push_back({BodyRef::Kind::kArm, k});
  }
  for (int e = 0; e < n_env; ++e) {
    bodies.push_back({BodyRef::Kind::kEnvironment, e});
  }
  for (std::size_t a = 0; a < bodies.size(); ++a) {
    for (std::size_t b = a + 1; b < bodies.size(); ++b) {
      add(BodyBody{bodies[a], bodies[b]});
    }
  }
  return out;
}

CumulativeLengths ComputeCumulativeLengths(const Scene& scene) {
  CumulativeLengths out{{0.0}};
  for (const JointSpec& j : scene.arm) {
    out.d.push_back(out.d.back() + j.offset.norm());
  }
  return out;
}

CumulativeLengths FrameOriginRadii(const Scene& scene) {
  CumulativeLengths out{{0.0}};
  for (const JointSpec& j : scene.arm) {
    const double travel =
        j.kind == JointKind::kPrismatic ? j.max_abs_position() : 0.0;
    out.d.push_back(out.d.back() + j.offset.norm() + travel);
  }
  return out;
}

Pose JointTransform(const JointSpec& joint, double q) {
  if (joint.kind == JointKind::kRevolute) {
    const Rotation r = ExpRotation(joint.axis, q);
    return Pose{r, r * joint.offset};
  }
  return Pose::FromTranslation(joint.axis * q + joint.offset);
}

std::vector<Pose> ArmFramePoses(const Scene& scene, const Pose& platform,
                                std::span<const double> q) {
  if (q.size() != scene.arm.size()) {
    throw ModelError("joint vector has " + std::to_string(q.size()) +
                     " entries, arm has " + std::to_string(scene.arm.size()));
  }
  std::vector<Pose> frames;
  frames.reserve(q.size());
  Pose current = platform;
  for (std::size_t k = 0; k < q.size(); ++k) {
    current = current * JointTransform(scene.arm[k], q[k]);
    frames.push_back(current);
  }
  return frames;
}

}  // namespace cdpr_ccd
