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

#include "cdpr_ccd/path_io.h"

#include <vector>

#include "cdpr_ccd/scene_io.h"

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
  if (it == obj.end()) Fail(origin, where / key, "missing");
  return *it;
}

std::vector<double> ReadJoints(const json& value, const Pointer& where,
                               const Scene& scene, const std::string& origin) {
  if (!value.is_array()) Fail(origin, where, "expected an array");
  if (value.size() != scene.arm.size()) {
    Fail(origin, where,
         "expected " + std::to_string(scene.arm.size()) + " joint values");
  }
  std::vector<double> q;
  for (std::size_t k = 0; k < value.size(); ++k) {
    q.push_back(ReadNumber(value[k], where / k, origin));
  }
  return q;
}

std::vector<double> OptionalJoints(const json& obj, const std::string& key,
                                   const Pointer& where, const Scene& scene,
                                   const std::string& origin) {
  if (!obj.contains(key)) {
    if (!scene.arm.empty()) Fail(origin, where / key, "missing");
    return {};
  }
  return ReadJoints(obj[key], where / key, scene, origin);
}

}  // namespace

PiecewisePath PathFromJson(const json& doc, const Scene& scene,
                           const std::string& origin) {
  const Pointer root;
  std::vector<StraightPath> segments;
  try {
    if (doc.contains("waypoints")) {
      const json& wps = doc["waypoints"];
      if (!wps.is_array() || wps.size() < 2) {
        Fail(origin, root / "waypoints", "expected at least two waypoints");
      }
      Pose prev_pose;
      std::vector<double> prev_q;
      for (std::size_t k = 0; k < wps.size(); ++k) {
        const Pointer at = root / "waypoints" / k;
        const Pose pose =
            ReadPose(Require(wps[k], "pose", at, origin), at / "pose", origin);
        std::vector<double> q = OptionalJoints(wps[k], "joints", at, scene,
                                               origin);
        if (k > 0) {
          const double duration = ReadNumber(
              Require(wps[k], "duration", at, origin), at / "duration", origin);
          if (!(duration > 0.0)) Fail(origin, at / "duration", "must be > 0");
          segments.push_back(
              StraightPathBetween(prev_pose, pose, prev_q, q, duration));
        }
        prev_pose = pose;
        prev_q = std::move(q);
      }
    } else if (doc.contains("segments")) {
      const json& segs = doc["segments"];
      if (!segs.is_array() || segs.empty()) {
        Fail(origin, root / "segments", "expected a non-empty array");
      }
      for (std::size_t k = 0; k < segs.size(); ++k) {
        const Pointer at = root / "segments" / k;
        const json& s = segs[k];
        const double duration =
            ReadNumber(Require(s, "T", at, origin), at / "T", origin);
        if (!(duration > 0.0)) Fail(origin, at / "T", "must be > 0");
        segments.emplace_back(
            duration,
            ReadPose(Require(s, "start_pose", at, origin), at / "start_pose",
                     origin),
            ReadVec3(Require(s, "v_p", at, origin), at / "v_p", origin),
            ReadVec3(Require(s, "w_p", at, origin), at / "w_p", origin),
            OptionalJoints(s, "q_start", at, scene, origin),
            OptionalJoints(s, "q_end", at, scene, origin));
      }
    } else {
      Fail(origin, root, "expected a \"waypoints\" or \"segments\" key");
    }
    return PiecewisePath(std::move(segments));
  } catch (const ModelError& e) {
    throw InputError(origin + ": " + e.what());
  }
}

PiecewisePath LoadPath(const std::filesystem::path& path, const Scene& scene) {
  return PathFromJson(ReadJsonFile(path), scene, path.string());
}

json PathToJson(const PiecewisePath& path) {
  json segments = json::array();
  for (const StraightPath& s : path.segments()) {
    const Vec3& v = s.linear_velocity();
    const Vec3& w = s.angular_velocity();
    segments.push_back(json{{"start_pose", PoseToJson(s.start_pose())},
                            {"v_p", {v.x(), v.y(), v.z()}},
                            {"w_p", {w.x(), w.y(), w.z()}},
                            {"q_start", s.q_start()},
                            {"q_end", s.q_end()},
                            {"T", s.duration()}});
  }
  return json{{"segments", segments}};
}

}  // namespace cdpr_ccd
