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

#include "cdpr_ccd/interval_set.h"

#include <algorithm>

namespace cdpr_ccd {

std::optional<Interval> Intersect(const Interval& a, const Interval& b) {
  const Interval out{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (out.lo > out.hi) return std::nullopt;
  return out;
}

void IntervalSet::Reset(double horizon) {
  horizon_ = horizon;
  intervals_.clear();
}

void IntervalSet::Insert(Interval iv) {
  iv.lo = std::max(iv.lo, 0.0);
  iv.hi = std::min(iv.hi, horizon_);
  if (iv.lo > iv.hi) return;

  // First interval whose end reaches iv (within the merge gap).
  auto first = std::lower_bound(
      intervals_.begin(), intervals_.end(), iv.lo,
      [](const Interval& x, double lo) { return x.hi + kIntervalMergeGap < lo; });
  auto last = first;
  while (last != intervals_.end() && last->lo <= iv.hi + kIntervalMergeGap) {
    iv.lo = std::min(iv.lo, last->lo);
    iv.hi = std::max(iv.hi, last->hi);
    ++last;
  }
  first = intervals_.erase(first, last);
  intervals_.insert(first, iv);
}

std::optional<Interval> IntervalSet::Find(double t) const {
  auto it = std::lower_bound(
      intervals_.begin(), intervals_.end(), t,
      [](const Interval& x, double v) { return x.hi < v; });
  if (it != intervals_.end() && it->Contains(t)) return *it;
  return std::nullopt;
}

std::optional<double> IntervalSet::NextProbe() const {
  double gap_lo = 0.0;
  for (const Interval& iv : intervals_) {
    if (iv.lo > gap_lo) return 0.5 * (gap_lo + iv.lo);
    gap_lo = iv.hi;
  }
  if (gap_lo < horizon_) return 0.5 * (gap_lo + horizon_);
  return std::nullopt;
}

bool IntervalSet::CoversHorizon() const {
  return intervals_.size() == 1 && intervals_.front().lo <= 0.0 &&
         intervals_.front().hi >= horizon_;
}

double IntervalSet::Measure() const {
  double sum = 0.0;
  for (const Interval& iv : intervals_) sum += iv.Length();
  return sum;
}

}  // namespace cdpr_ccd
