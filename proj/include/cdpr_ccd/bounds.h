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

#ifndef CDPR_CCD_BOUNDS_H_
#define CDPR_CCD_BOUNDS_H_

#include <optional>
#include <vector>

#include "cdpr_ccd/geometry.h"
#include "cdpr_ccd/model.h"
#include "cdpr_ccd/path.h"

namespace cdpr_ccd {

// Velocity upper bound of a collision element over one straight path, and
// an optional static cap on any distance the element can report.
struct PairBounds {
  double v_max = 0.0;
  std::optional<double> d_min_cap;
};

// Per-joint rates of a straight path: |q_end - q_start| / T, stored as an
// angular rate for revolute joints and a linear rate for prismatic ones.
struct JointRates {
  std::vector<double> angular;
  std::vector<double> linear;

  std::size_t size() const { return angular.size(); }
};

JointRates ComputeJointRates(const Scene& scene, const StraightPath& path);

// Speed bound of an attachment point B_i: v_P + omega_P * b_i.
double AttachmentSpeedBound(double v_p, double omega_p, double b_i);

// Bound on the swing rate of cable i in the world frame:
// (v_P + omega_P * b_i) / L_i_min. Throws std::invalid_argument if
// L_i_min <= 0.
double CableWorldRateBound(double v_p, double omega_p, double b_i,
                           double l_min);

// Speed bound of any point of cable i relative to the platform:
// L_i_max * ((v_P + omega_P * b_i) / L_i_min + omega_P).
double VmaxCablePlatform(double v_p, double omega_p, double b_i, double l_min,
                         double l_max);

// Speed bound of points of cable i relative to cable j:
// L_i_max * ((v_P + omega_P b_i) / L_i_min + (v_P + omega_P b_j) / L_j_min).
double VmaxCableCable(double v_p, double omega_p, double b_i, double b_j,
                      double l_i_min, double l_j_min, double l_i_max);

// Speed bound of points of cable i relative to the frame of the arm body
// reached through m - 1 joints (m >= 2 counts the platform joint):
//
//   (omega_P + (v_P + omega_P b_i) / L_i_min) L_i_max
//     + sum_{k=0}^{m-2} [ omega_k (L_i_max + |T_ip| + D_k) + v_k ]
//
// where D_k bounds the distance from C to the pivot of joint k. A revolute
// joint contributes its rate times the lever arm, a prismatic joint its
// sliding speed.
double VmaxCableArm(double v_p, double omega_p, double b_i, double l_min,
                    double l_max, double attachment_norm,
                    const JointRates& rates, const CumulativeLengths& radii,
                    int m);

// Relative speed bound of any point of body b in the frame of body a (or of
// whichever member moves when the other is the environment). Platform
// motion contributes v_P + omega_P * reach, each joint between the bodies
// omega_k * R_k + v_k with R_k the lever arm from the joint pivot to the far
// end of the moving body.
double VmaxBodyBody(const Scene& scene, const StraightPath& path,
                    const BodyBody& pair);

// Velocity bound of any kind of element for one straight path, given the
// per-path cable length bounds (one entry per cable).
PairBounds ComputePairBounds(const Scene& scene, const StraightPath& path,
                             const std::vector<CableLengthBounds>& cables,
                             const PairKind& pair);

std::vector<CableLengthBounds> ComputeAllCableLengthBounds(
    const Scene& scene, const StraightPath& path);

// Cable i with the first `shorten_distance` meters next to B_i removed.
// Throws ModelError when the cable is not longer than that distance.
Capsule ShortenedCableCapsule(const Scene& scene, const Pose& platform,
                              int cable);
Capsule CableCapsule(const Scene& scene, const Pose& platform, int cable);

// Distance lower bounds at one configuration. All are exact for the shapes
// used (capsules around the cables, triangle meshes for bodies).
DistanceResult DminCablePlatform(const Scene& scene, const Configuration& c,
                                 int cable);
DistanceResult DminCableCable(const Scene& scene, const Configuration& c,
                              int i, int j);
DistanceResult DminCableArm(const Scene& scene, const Configuration& c,
                            int cable, int joint);
DistanceResult DminCableEnvironment(const Scene& scene, const Configuration& c,
                                    int cable, int environment);
DistanceResult DminBodyBody(const Scene& scene, const Configuration& c,
                            const BodyBody& pair);

// Dispatch on the pair kind.
DistanceResult DminPair(const Scene& scene, const Configuration& c,
                        const PairKind& pair);

// Same verdict as DminPair(...).InContact(), usually much cheaper.
bool PairInContact(const Scene& scene, const Configuration& c,
                   const PairKind& pair);

// Path-and-time conveniences.
DistanceResult DminCablePlatform(const Scene& scene, const StraightPath& path,
                                 int cable, double t);
DistanceResult DminCableCable(const Scene& scene, const StraightPath& path,
                              int i, int j, double t);
DistanceResult DminCableArm(const Scene& scene, const StraightPath& path,
                            int cable, int joint, double t);

}  // namespace cdpr_ccd

#endif  // CDPR_CCD_BOUNDS_H_
