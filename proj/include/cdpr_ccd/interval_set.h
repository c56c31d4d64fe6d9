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

#ifndef CDPR_CCD_INTERVAL_SET_H_
#define CDPR_CCD_INTERVAL_SET_H_

#include <optional>
#include <vector>

namespace cdpr_ccd {

// Intervals closer than this are merged on insertion.
inline constexpr double kIntervalMergeGap = 1e-12;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool Contains(double t) const { return lo <= t && t <= hi; }
  double Length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

// Intersection of two intervals; empty (nullopt) when they do not meet.
std::optional<Interval> Intersect(const Interval& a, const Interval& b);

// Sorted union of disjoint closed subintervals of [0, horizon].
class IntervalSet {
 public:
  explicit IntervalSet(double horizon = 0.0) : horizon_(horizon) {}

  double horizon() const { return horizon_; }

  // Empties the set and sets a new horizon.
  void Reset(double horizon);

  // Adds `iv` clamped to [0, horizon]; overlapping or touching intervals
  // coalesce. Intervals entirely outside [0, horizon] are ignored.
  void Insert(Interval iv);

  // The component containing t, if any.
  std::optional<Interval> Find(double t) const;

  // Midpoint of the lowest connected component of [0, horizon] not covered
  // by the set; nullopt once the set covers [0, horizon].
  std::optional<double> NextProbe() const;

  bool CoversHorizon() const;
  double Measure() const;
  bool empty() const { return intervals_.empty(); }
  const std::vector<Interval>& intervals() const { return intervals_; }

 private:
  double horizon_;
  std::vector<Interval> intervals_;
};

}  // namespace cdpr_ccd

#endif  // CDPR_CCD_INTERVAL_SET_H_
