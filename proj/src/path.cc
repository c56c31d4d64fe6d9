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

#include "cdpr_ccd/path.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "cdpr_ccd/bounds.h"

namespace cdpr_ccd {
namespace {

constexpr double kContinuityTolerance = 1e-6;

double MaxJointGap(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double gap = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    gap = std::max(gap, std::abs(a[k] - b[k]));
  }
  return gap;
}

}  // namespace

StraightPath::StraightPath(double duration, const Pose& start_pose,
                           const Vec3& linear_velocity,
                           const Vec3& angular_velocity,
                           std::vector<double> q_start,
                           std::vector<double> q_end)
    : duration_(duration),
      start_pose_(start_pose),
      linear_velocity_(linear_velocity),
      angular_velocity_(angular_velocity),
      q_start_(std::move(q_start)),
      q_end_(std::move(q_end)) {
  if (!(duration_ > 0.0) || !std::isfinite(duration_)) {
    throw ModelError("straight path duration must be > 0");
  }
  if (!linear_velocity_.allFinite() || !angular_velocity_.allFinite()) {
    throw ModelError("straight path velocities must be finite");
  }
  if (q_start_.size() != q_end_.size()) {
    throw ModelError("straight path joint vectors differ in length");
  }
  for (std::size_t k = 0; k < q_start_.size(); ++k) {
    if (!std::isfinite(q_start_[k]) || !std::isfinite(q_end_[k])) {
      throw ModelError("straight path joint values must be finite");
    }
  }
}

double StraightPath::Clamp(double t) const {
  if (!(t >= -kTimeSlack && t <= duration_ + kTimeSlack)) {
    std::ostringstream msg;
    msg << "time " << t << " outside path interval [0, " << duration_ << "]";
    throw ModelError(msg.str());
  }
  return std::clamp(t, 0.0, duration_);
}

Pose StraightPath::PoseAt(double t) const {
  t = Clamp(t);
  return Pose{ExpRotation(angular_velocity_, t) * start_pose_.rotation,
              start_pose_.translation + t * linear_velocity_};
}

std::vector<double> StraightPath::ArmConfigAt(double t) const {
  t = Clamp(t);
  const double s = t / duration_;
  std::vector<double> q(q_start_.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    q[k] = q_start_[k] + s * (q_end_[k] - q_start_[k]);
  }
  if (t == duration_) q = q_end_;
  return q;
}

StraightPath StraightPathBetween(const Pose& p0, const Pose& p1,
                                 std::vector<double> q0,
                                 std::vector<double> q1, double duration) {
  if (!(duration > 0.0)) {
    throw ModelError("straight path duration must be > 0");
  }
  const Vec3 rotation_vector =
      LogRotation(p1.rotation * p0.rotation.transpose());
  if (rotation_vector.norm() > kMaxStraightPathAngle) {
    throw ModelError(
        "relative rotation too close to pi for a single straight path; "
        "split the path");
  }
  return StraightPath(duration, p0,
                      (p1.translation - p0.translation) / duration,
                      rotation_vector / duration, std::move(q0),
                      std::move(q1));
}

PiecewisePath::PiecewisePath(std::vector<StraightPath> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty()) throw ModelError("piecewise path has no segment");
  for (std::size_t k = 0; k + 1 < segments_.size(); ++k) {
    const StraightPath& a = segments_[k];
    const StraightPath& b = segments_[k + 1];
    const Pose end = a.EndPose();
    const double dp = (end.translation - b.start_pose().translation).norm();
    const double dr = (end.rotation - b.start_pose().rotation).norm();
    const double dq = MaxJointGap(a.q_end(), b.q_start());
    if (dp > kContinuityTolerance || dr > kContinuityTolerance ||
        dq > kContinuityTolerance) {
      throw ModelError("piecewise path is discontinuous between segments " +
                       std::to_string(k) + " and " + std::to_string(k + 1));
    }
  }
}

double PiecewisePath::duration() const {
  double total = 0.0;
  for (const StraightPath& s : segments_) total += s.duration();
  return total;
}

Segment CableSegment(const CableSpec& cable, const Pose& platform) {
  return Segment{cable.exit_point, platform * cable.attachment_point};
}

Segment CableSegmentAt(const Scene& scene, const StraightPath& path, int cable,
                       double t) {
  return CableSegment(scene.cables.at(cable), path.PoseAt(t));
}

CableLengthBounds ComputeCableLengthBounds(const Scene& scene,
                                           const StraightPath& path,
                                           int cable) {
  const CableSpec& spec = scene.cables.at(cable);
  const double l0 = CableSegment(spec, path.PoseAt(0.0)).Length();
  const double l1 = CableSegment(spec, path.PoseAt(path.duration())).Length();
  for (double l : {l0, l1}) {
    if (l < scene.l_min || l > scene.l_max) {
      std::ostringstream msg;
      msg << "cable " << cable << " length " << l
          << " at a path endpoint is outside the workspace bounds ["
          << scene.l_min << ", " << scene.l_max << "]";
      throw ModelError(msg.str());
    }
  }
  // |dL/dt| <= |dB_i/dt| <= v_P + omega_P b_i.
  const double half_sweep =
      AttachmentSpeedBound(path.linear_speed(), path.angular_speed(),
                           spec.attachment_norm()) *
      path.duration() / 2.0;
  CableLengthBounds out;
  out.min = std::clamp(std::min(l0, l1) - half_sweep, scene.l_min, scene.l_max);
  out.max = std::clamp(std::max(l0, l1) + half_sweep, scene.l_min, scene.l_max);
  if (!(out.min > 0.0)) {
    throw ModelError("cable " + std::to_string(cable) +
                     " lower length bound is not positive");
  }
  return out;
}

Configuration ConfigurationAt(const Scene& scene, const StraightPath& path,
                              double t) {
  Configuration c;
  c.platform = path.PoseAt(t);
  const std::vector<double> q = path.ArmConfigAt(t);
  c.arm_frames = ArmFramePoses(scene, c.platform, q);
  return c;
}

void CheckPathAgainstScene(const Scene& scene, const StraightPath& path) {
  if (path.q_start().size() != scene.arm.size()) {
    throw ModelError("path has " + std::to_string(path.q_start().size()) +
                     " joint values, scene arm has " +
                     std::to_string(scene.arm.size()) + " joints");
  }
}

}  // namespace cdpr_ccd
