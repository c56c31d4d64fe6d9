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

#ifndef CDPR_CCD_COLLISION_ELEMENT_H_
#define CDPR_CCD_COLLISION_ELEMENT_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "cdpr_ccd/bounds.h"
#include "cdpr_ccd/geometry.h"
#include "cdpr_ccd/interval_set.h"
#include "cdpr_ccd/model.h"
#include "cdpr_ccd/path.h"

namespace cdpr_ccd {

struct CollisionReport {
  PairKind pair;
  double time = 0.0;
  Vec3 witness_a = Vec3::Zero();
  Vec3 witness_b = Vec3::Zero();
  double distance = 0.0;
};

// Configuration of a path at one time, evaluated on first use.
class LazyConfiguration {
 public:
  LazyConfiguration(const Scene& scene, const StraightPath& path, double t)
      : scene_(scene), path_(path), t_(t) {}

  double time() const { return t_; }
  const Configuration& Get();

 private:
  const Scene& scene_;
  const StraightPath& path_;
  double t_;
  std::optional<Configuration> config_;
};

struct ElementVerdict {
  bool valid = false;
  Interval interval;
  std::optional<CollisionReport> report;
};

// One pair of bodies checked for collision. Bind() must be called for every
// new straight path; it recomputes the velocity bound and clears the cache of
// validated intervals.
class CollisionElement {
 public:
  explicit CollisionElement(PairKind pair) : pair_(std::move(pair)) {}
  virtual ~CollisionElement() = default;

  CollisionElement(const CollisionElement&) = delete;
  CollisionElement& operator=(const CollisionElement&) = delete;

  const PairKind& pair() const { return pair_; }
  const PairBounds& bounds() const { return bounds_; }
  const IntervalSet& validated() const { return validated_; }
  double horizon() const { return validated_.horizon(); }

  // Number of distance computations since construction.
  std::size_t distance_queries() const { return distance_queries_; }

  void Bind(const Scene& scene, const StraightPath& path,
            const std::vector<CableLengthBounds>& cables);

  // Certifies a time interval around t, or reports a contact at t. A time
  // already covered by the cache returns the cached interval without any
  // distance computation.
  ElementVerdict Validate(const Scene& scene, LazyConfiguration& config);

  // Interval arithmetic: [t - d/v, t + d/v] clipped to [0, horizon], or
  // [0, horizon] when v == 0.
  static Interval HalfLengthInterval(double d_min, double v_max, double t,
                                     double horizon);

  virtual DistanceResult Distance(const Scene& scene,
                                  const Configuration& config) const = 0;
  virtual bool InContact(const Scene& scene,
                         const Configuration& config) const = 0;

 protected:
  virtual PairBounds ComputeBounds(
      const Scene& scene, const StraightPath& path,
      const std::vector<CableLengthBounds>& cables) const = 0;

 private:
  PairKind pair_;
  PairBounds bounds_;
  IntervalSet validated_;
  std::size_t distance_queries_ = 0;
};

// Element for any pair of the scene, using the exact shapes of the bodies.
class PairElement final : public CollisionElement {
 public:
  using CollisionElement::CollisionElement;

  DistanceResult Distance(const Scene& scene,
                          const Configuration& config) const override;
  bool InContact(const Scene& scene,
                 const Configuration& config) const override;

 protected:
  PairBounds ComputeBounds(
      const Scene& scene, const StraightPath& path,
      const std::vector<CableLengthBounds>& cables) const override;
};

using ElementList = std::vector<std::unique_ptr<CollisionElement>>;

// One element per enabled pair, in enumeration order.
ElementList MakeCollisionElements(const Scene& scene);

// Binds every element to `path`.
void BindElements(ElementList& elements, const Scene& scene,
                  const StraightPath& path);

}  // namespace cdpr_ccd

#endif  // CDPR_CCD_COLLISION_ELEMENT_H_
