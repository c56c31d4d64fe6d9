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

#include "cdpr_ccd/scene_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

namespace cdpr_ccd {
namespace {

using nlohmann::json;
using Pointer = json::json_pointer;

[[noreturn]] void Fail(const std::string& origin, const Pointer& where,
                       const std::string& what) {
  throw InputError(origin + ": field " + where.to_string() + ": " + what);
}

const json& Require(const json& obj, const std::string& key,
                    const Pointer& where, const std::string& origin) {
  if (!obj.is_object()) Fail(origin, where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(origin, Field(where, key), "missing");
  return *it;
}

const json& RequireArray(const json& obj, const std::string& key,
                         const Pointer& where, const std::string& origin) {
  const json& v = Require(obj, key, where, origin);
  if (!v.is_array()) Fail(origin, Field(where, key), "expected an array");
  return v;
}

std::shared_ptr<const TriangleMesh> ReadMesh(
    const json& obj, const Pointer& where,
    const std::filesystem::path& base_dir, const std::string& origin) {
  const json& v = Require(obj, "stl_path", where, origin);
  if (!v.is_string()) Fail(origin, Field(where, "stl_path"), "expected string");
  std::filesystem::path p(v.get<std::string>());
  if (p.is_relative()) p = base_dir / p;
  try {
    return std::make_shared<const TriangleMesh>(LoadStl(p));
  } catch (const MeshError& e) {
    Fail(origin, Field(where, "stl_path"), e.what());
  }
}

}  // namespace

Pointer Field(const Pointer& parent, const std::string& key) {
  return parent / key;
}

json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line =
        1 + std::count(text.begin(), text.begin() + upto, '\n');
    throw InputError(path.string() + ":" + std::to_string(line) +
                     ": syntax error: " + e.what());
  }
}

double ReadNumber(const json& value, const Pointer& where,
                  const std::string& origin) {
  if (!value.is_number()) Fail(origin, where, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) Fail(origin, where, "expected a finite number");
  return x;
}

Vec3 ReadVec3(const json& value, const Pointer& where,
              const std::string& origin) {
  if (!value.is_array() || value.size() != 3) {
    Fail(origin, where, "expected an array of 3 numbers");
  }
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    out[i] = ReadNumber(value[i], where / i, origin);
  }
  return out;
}

Pose ReadPose(const json& value, const Pointer& where,
              const std::string& origin) {
  if (!value.is_object()) Fail(origin, where, "expected a pose object");
  Pose pose;
  if (auto it = value.find("translation"); it != value.end()) {
    pose.translation = ReadVec3(*it, where / "translation", origin);
  }
  if (auto it = value.find("rotation"); it != value.end()) {
    const Pointer at = where / "rotation";
    if (!it->is_array()) Fail(origin, at, "expected 3 or 4 numbers");
    if (it->size() == 3) {
      pose.rotation = RotationFromVector(ReadVec3(*it, at, origin));
    } else if (it->size() == 4) {
      Eigen::Quaterniond q(ReadNumber((*it)[0], at / 0, origin),
                           ReadNumber((*it)[1], at / 1, origin),
                           ReadNumber((*it)[2], at / 2, origin),
                           ReadNumber((*it)[3], at / 3, origin));
      if (std::abs(q.norm() - 1.0) > 1e-6) {
        Fail(origin, at, "quaternion [w,x,y,z] must have unit norm");
      }
      pose.rotation = q.normalized().toRotationMatrix();
    } else {
      Fail(origin, at, "expected 3 (axis-angle) or 4 (quaternion) numbers");
    }
  }
  return pose;
}

json PoseToJson(const Pose& pose) {
  const Vec3 r = LogRotation(pose.rotation);
  return json{{"translation", {pose.translation.x(), pose.translation.y(),
                               pose.translation.z()}},
              {"rotation", {r.x(), r.y(), r.z()}}};
}

Scene SceneFromJson(const json& doc, const std::filesystem::path& base_dir,
                    const std::string& origin) {
  const Pointer root;
  Scene scene;

  const json& cables = RequireArray(doc, "cables", root, origin);
  for (std::size_t i = 0; i < cables.size(); ++i) {
    const Pointer at = root / "cables" / i;
    CableSpec c;
    c.exit_point = ReadVec3(Require(cables[i], "exit", at, origin),
                            at / "exit", origin);
    c.attachment_point = ReadVec3(Require(cables[i], "attach", at, origin),
                                  at / "attach", origin);
    c.radius = ReadNumber(Require(cables[i], "radius", at, origin),
                          at / "radius", origin);
    scene.cables.push_back(c);
  }

  const json& platform = Require(doc, "platform", root, origin);
  scene.platform_mesh = ReadMesh(platform, root / "platform", base_dir, origin);
  scene.platform_radius =
      ReadNumber(Require(platform, "radius", root / "platform", origin),
                 root / "platform" / "radius", origin);

  if (doc.contains("arm")) {
    const json& arm = RequireArray(doc, "arm", root, origin);
    for (std::size_t k = 0; k < arm.size(); ++k) {
      const Pointer at = root / "arm" / k;
      JointSpec j;
      const json& kind = Require(arm[k], "kind", at, origin);
      if (kind == "revolute") {
        j.kind = JointKind::kRevolute;
      } else if (kind == "prismatic") {
        j.kind = JointKind::kPrismatic;
      } else {
        Fail(origin, at / "kind", "expected \"revolute\" or \"prismatic\"");
      }
      j.axis = ReadVec3(Require(arm[k], "axis", at, origin), at / "axis",
                        origin);
      j.offset = ReadVec3(Require(arm[k], "offset", at, origin),
                          at / "offset", origin);
      const json& limits = Require(arm[k], "limits", at, origin);
      if (!limits.is_array() || limits.size() != 2) {
        Fail(origin, at / "limits", "expected [lower, upper]");
      }
      j.lower = ReadNumber(limits[0], at / "limits" / 0, origin);
      j.upper = ReadNumber(limits[1], at / "limits" / 1, origin);
      if (arm[k].contains("stl_path")) {
        j.body = ReadMesh(arm[k], at, base_dir, origin);
      }
      scene.arm.push_back(std::move(j));
    }
  }

  if (doc.contains("environment")) {
    const json& env = RequireArray(doc, "environment", root, origin);
    for (std::size_t e = 0; e < env.size(); ++e) {
      const Pointer at = root / "environment" / e;
      EnvironmentBody body;
      body.mesh = ReadMesh(env[e], at, base_dir, origin);
      if (env[e].contains("pose")) {
        body.pose = ReadPose(env[e]["pose"], at / "pose", origin);
      }
      scene.environment.push_back(std::move(body));
    }
  }

  const json& bounds = Require(doc, "bounds", root, origin);
  const Pointer b = root / "bounds";
  scene.l_min =
      ReadNumber(Require(bounds, "l_min", b, origin), b / "l_min", origin);
  scene.l_max =
      ReadNumber(Require(bounds, "l_max", b, origin), b / "l_max", origin);
  scene.shorten_distance = ReadNumber(Require(bounds, "shorten_d", b, origin),
                                      b / "shorten_d", origin);

  const std::vector<std::string> diagnostics = ValidateScene(scene);
  if (!diagnostics.empty()) {
    std::string msg = origin + ": invalid scene:";
    for (const std::string& d : diagnostics) msg += "\n  " + d;
    throw InputError(msg);
  }
  return scene;
}

Scene LoadScene(const std::filesystem::path& path) {
  const json doc = ReadJsonFile(path);
  return SceneFromJson(doc, path.parent_path(), path.string());
}

}  // namespace cdpr_ccd
