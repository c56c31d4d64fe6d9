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

#ifndef CDPR_CCD_PATH_H_
#define CDPR_CCD_PATH_H_

#include <filesystem>
#include <vector>

#include "cdpr_ccd/geometry.h"
#include "cdpr_ccd/model.h"

namespace cdpr_ccd {

// Slack allowed on path time parameters outside [0, T].
inline constexpr double kTimeSlack = 1e-9;

// Largest relative rotation accepted between the two ends of a straight path.
// Beyond it the principal logarithm is ill-conditioned; split the path.
inline constexpr double kMaxStraightPathAngle = 3.141592653589793 - 1e-6;

// Platform motion with constant world-frame twist over [0, T]:
//   C(t) = C0 + t * V_P,   R(t) = exp([W_P] t) * R0,
// arm joints interpolate linearly from q_start to q_end.
class StraightPath {
 public:
  // Throws ModelError unless duration > 0 and the velocities are finite.
  StraightPath(double duration, const Pose& start_pose,
               const Vec3& linear_velocity, const Vec3& angular_velocity,
               std::vector<double> q_start, std::vector<double> q_end);

  double duration() const { return duration_; }
  const Pose& start_pose() const { return start_pose_; }
  const Vec3& linear_velocity() const { return linear_velocity_; }
  const Vec3& angular_velocity() const { return angular_velocity_; }
  const std::vector<double>& q_start() const { return q_start_; }
  const std::vector<double>& q_end() const { return q_end_; }

  // v_P and omega_P.
  double linear_speed() const { return linear_velocity_.norm(); }
  double angular_speed() const { return angular_velocity_.norm(); }

  // Throw ModelError for t outside [0, T] by more than kTimeSlack.
  Pose PoseAt(double t) const;
  std::vector<double> ArmConfigAt(double t) const;

  Pose EndPose() const { return PoseAt(duration_); }

 private:
  double Clamp(double t) const;

  double duration_;
  Pose start_pose_;
  Vec3 linear_velocity_;
  Vec3 angular_velocity_;
  std::vector<double> q_start_;
  std::vector<double> q_end_;
};

// Constant-twist interpolation between two platform poses. Rejects T <= 0
// and relative rotations larger than kMaxStraightPathAngle.
StraightPath StraightPathBetween(const Pose& p0, const Pose& p1,
                                 std::vector<double> q0,
                                 std::vector<double> q1, double duration);

// Consecutive straight paths; each starts where the previous one ends.
class PiecewisePath {
 public:
  // Throws ModelError when empty or discontinuous beyond 1e-6.
  explicit PiecewisePath(std::vector<StraightPath> segments);

  const std::vector<StraightPath>& segments() const { return segments_; }
  double duration() const;

 private:
  std::vector<StraightPath> segments_;
};

// World-frame centerline of cable i at time t: from A_i to the attachment
// point carried by the platform.
Segment CableSegmentAt(const Scene& scene, const StraightPath& path, int cable,
                       double t);

// Same, for an already evaluated platform pose.
Segment CableSegment(const CableSpec& cable, const Pose& platform);

struct CableLengthBounds {
  double min = 0.0;
  double max = 0.0;
};

// Conservative bounds on |A_i B_i(t)| over the whole path: endpoint lengths
// widened by (v_P + omega_P b_i) T / 2 and clamped to the scene's workspace
// bounds. Throws ModelError when an endpoint length leaves the workspace
// bounds.
CableLengthBounds ComputeCableLengthBounds(const Scene& scene,
                                           const StraightPath& path,
                                           int cable);

// Robot state at one time: platform pose and the world pose of every arm
// frame.
struct Configuration {
  Pose platform;
  std::vector<Pose> arm_frames;
};

Configuration ConfigurationAt(const Scene& scene, const StraightPath& path,
                              double t);

// Checks that joint vectors match the scene's arm.
void CheckPathAgainstScene(const Scene& scene, const StraightPath& path);

}  // namespace cdpr_ccd

#endif  // CDPR_CCD_PATH_H_
