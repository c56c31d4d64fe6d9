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

#include "cdpr_ccd/ccd.h"

#include <algorithm>

namespace cdpr_ccd {

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kValid:
      return "valid";
    case Verdict::kCollision:
      return "collision";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

AllElementsVerdict ValidateAllElements(ElementList& elements,
                                       const Scene& scene,
                                       const StraightPath& path, double t) {
  const double horizon = path.duration();
  t = std::clamp(t, 0.0, horizon);
  LazyConfiguration config(scene, path, t);
  Interval acc{0.0, horizon};
  for (auto& e : elements) {
    ElementVerdict v = e->Validate(scene, config);
    if (!v.valid) return {false, acc, std::move(v.report)};
    acc.lo = std::max(acc.lo, v.interval.lo);
    acc.hi = std::min(acc.hi, v.interval.hi);
  }
  return {true, acc, std::nullopt};
}

PathValidationResult ValidateStraightPath(ElementList& elements,
                                          const Scene& scene,
                                          const StraightPath& path,
                                          const StraightPathOptions& options) {
  PathValidationResult result;
  result.duration = path.duration();
  IntervalSet valid(path.duration());

  auto first_prefix = [&]() -> std::optional<Interval> {
    if (valid.empty() || valid.intervals().front().lo > 0.0) {
      return std::nullopt;
    }
    return valid.intervals().front();
  };

  double t = 0.0;
  while (true) {
    if (result.n_probes >= options.max_probes) {
      result.verdict = Verdict::kInconclusive;
      result.valid_prefix = first_prefix();
      return result;
    }
    ++result.n_probes;
    AllElementsVerdict v = ValidateAllElements(elements, scene, path, t);
    if (!v.success) {
      result.verdict = Verdict::kCollision;
      result.report = std::move(v.report);
      result.valid_prefix = first_prefix();
      return result;
    }
    const double before = valid.Measure();
    valid.Insert(v.interval);
    std::optional<double> next = valid.NextProbe();
    if (!next) break;
    if (valid.Measure() <= before) {
      result.verdict = Verdict::kInconclusive;
      result.valid_prefix = first_prefix();
      return result;
    }
    t = *next;
  }
  result.verdict = Verdict::kValid;
  result.valid_prefix = Interval{0.0, path.duration()};
  return result;
}

PathValidationResult ValidatePiecewisePath(ElementList& elements,
                                           const Scene& scene,
                                           const PiecewisePath& path,
                                           const StraightPathOptions& options) {
  PathValidationResult total;
  total.duration = path.duration();
  double offset = 0.0;
  for (const StraightPath& segment : path.segments()) {
    BindElements(elements, scene, segment);
    PathValidationResult r =
        ValidateStraightPath(elements, scene, segment, options);
    total.n_probes += r.n_probes;
    if (!r.valid()) {
      total.verdict = r.verdict;
      if (r.valid_prefix) {
        total.valid_prefix = Interval{0.0, offset + r.valid_prefix->hi};
      } else if (offset > 0.0) {
        total.valid_prefix = Interval{0.0, offset};
      }
      if (r.report) {
        total.report = std::move(r.report);
        total.report->time += offset;
      }
      return total;
    }
    offset += segment.duration();
  }
  total.verdict = Verdict::kValid;
  total.valid_prefix = Interval{0.0, total.duration};
  return total;
}

double MaxVelocityBound(const ElementList& elements) {
  double v = 0.0;
  for (const auto& e : elements) v = std::max(v, e->bounds().v_max);
  return v;
}

}  // namespace cdpr_ccd
