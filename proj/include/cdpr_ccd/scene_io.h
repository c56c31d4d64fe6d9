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

#ifndef CDPR_CCD_SCENE_IO_H_
#define CDPR_CCD_SCENE_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "cdpr_ccd/geometry.h"
#include "cdpr_ccd/model.h"

namespace cdpr_ccd {

// Malformed or unreadable input file. The message names the file and either
// the line (syntax errors) or the JSON pointer of the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scene document:
//   {
//     "cables": [{"exit": [x,y,z], "attach": [x,y,z], "radius": r}, ...],
//     "platform": {"stl_path": "...", "radius": r_P},
//     "arm": [{"kind": "revolute"|"prismatic", "axis": [..], "offset": [..],
//              "limits": [lo, hi], "stl_path": "..."?}, ...],
//     "environment": [{"stl_path": "...", "pose": POSE}, ...],
//     "bounds": {"l_min": .., "l_max": .., "shorten_d": ..}
//   }
// POSE is {"translation": [x,y,z], "rotation": [rx,ry,rz] (axis-angle) or
// [w,x,y,z] (unit quaternion)}; both keys optional. STL paths are relative
// to the scene file. The loaded scene is checked with ValidateScene.
Scene LoadScene(const std::filesystem::path& path);
Scene SceneFromJson(const nlohmann::json& doc,
                    const std::filesystem::path& base_dir,
                    const std::string& origin);

nlohmann::json::json_pointer Field(const nlohmann::json::json_pointer& parent,
                                   const std::string& key);

// Reads and parses a JSON file, turning syntax errors into InputError with a
// line number.
nlohmann::json ReadJsonFile(const std::filesystem::path& path);

// Field readers used by the scene and path loaders. `where` is the JSON
// pointer of `value`, reported on error.
double ReadNumber(const nlohmann::json& value,
                  const nlohmann::json::json_pointer& where,
                  const std::string& origin);
Vec3 ReadVec3(const nlohmann::json& value,
              const nlohmann::json::json_pointer& where,
              const std::string& origin);
Pose ReadPose(const nlohmann::json& value,
              const nlohmann::json::json_pointer& where,
              const std::string& origin);
nlohmann::json PoseToJson(const Pose& pose);

}  // namespace cdpr_ccd

#endif  // CDPR_CCD_SCENE_IO_H_
