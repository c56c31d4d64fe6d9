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

#ifndef CDPR_CCD_PATH_IO_H_
#define CDPR_CCD_PATH_IO_H_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "cdpr_ccd/model.h"
#include "cdpr_ccd/path.h"

namespace cdpr_ccd {

// Path document, one of:
//   {"waypoints": [{"pose": POSE, "joints": [...], "duration": T}, ...]}
//     Consecutive waypoints are joined by StraightPathBetween; the duration
//     of waypoint k > 0 is the time taken to reach it from waypoint k - 1
//     (ignored on the first waypoint).
//   {"segments": [{"start_pose": POSE, "v_p": [..], "w_p": [..],
//                  "q_start": [..], "q_end": [..], "T": T}, ...]}
// POSE as in the scene document. Joint vectors must match the scene's arm.
PiecewisePath LoadPath(const std::filesystem::path& path, const Scene& scene);
PiecewisePath PathFromJson(const nlohmann::json& doc, const Scene& scene,
                           const std::string& origin);

// Explicit-segment form of `path`.
nlohmann::json PathToJson(const PiecewisePath& path);

}  // namespace cdpr_ccd

#endif  // CDPR_CCD_PATH_IO_H_
