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

#include "cdpr_ccd/collision_element.h"

#include <algorithm>

namespace cdpr_ccd {

const Configuration& LazyConfiguration::Get() {
  if (!config_) config_ = ConfigurationAt(scene_, path_, t_);
  return *config_;
}

void CollisionElement::Bind(const Scene& scene, const StraightPath& path,
                            const std::vector<CableLengthBounds>& cables) {
  bounds_ = ComputeBounds(scene, path, cables);
  validated_.Reset(path.duration());
}

Interval CollisionElement::HalfLengthInterval(double d_min, double v_max,
                                              double t, double horizon) {
  if (v_max <= 0.0) return {0.0, horizon};
  const double half = d_min / v_max;
  return {std::max(0.0, t - half), std::min(horizon, t + half)};
}

ElementVerdict CollisionElement::Validate(const Scene& scene,
                                          LazyConfiguration& config) {
  const double t = config.time();
  if (auto cached = validated_.Find(t)) return {true, *cached, std::nullopt};

  ++distance_queries_;
  const DistanceResult d = Distance(scene, config.Get());
  if (d.InContact()) {
    return {false, Interval{t, t},
            CollisionReport{pair_, t, d.witness_a, d.witness_b, 0.0}};
  }
  double d_min = d.distance;
  if (bounds_.d_min_cap) d_min = std::min(d_min, *bounds_.d_min_cap);
  const Interval iv = HalfLengthInterval(d_min, bounds_.v_max, t, horizon());
  validated_.Insert(iv);
  return {true, iv, std::nullopt};
}

DistanceResult PairElement::Distance(const Scene& scene,
                                     const Configuration& config) const {
  return DminPair(scene, config, pair());
}

bool PairElement::InContact(const Scene& scene,
                            const Configuration& config) const {
  return PairInContact(scene, config, pair());
}

PairBounds PairElement::ComputeBounds(
    const Scene& scene, const StraightPath& path,
    const std::vector<CableLengthBounds>& cables) const {
  return ComputePairBounds(scene, path, cables, pair());
}

ElementList MakeCollisionElements(const Scene& scene) {
  ElementList out;
  for (PairKind& pair : EnumerateCollisionElements(scene)) {
    out.push_back(std::make_unique<PairElement>(std::move(pair)));
  }
  return out;
}

void BindElements(ElementList& elements, const Scene& scene,
                  const StraightPath& path) {
  CheckPathAgainstScene(scene, path);
  const std::vector<CableLengthBounds> cables =
      ComputeAllCableLengthBounds(scene, path);
  for (auto& e : elements) e->Bind(scene, path, cables);
}

}  // namespace cdpr_ccd
