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

#include "cdpr_ccd/discretized.h"

#include <cmath>
#include <stdexcept>

namespace cdpr_ccd {

PathValidationResult ValidateDiscretized(const ElementList& elements,
                                         const Scene& scene,
                                         const StraightPath& path,
                                         double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("time step must be positive");
  }
  CheckPathAgainstScene(scene, path);
  const double horizon = path.duration();
  PathValidationResult result;
  result.duration = horizon;

  std::optional<double> last_free;
  for (long k = 0;; ++k) {
    double t = static_cast<double>(k) * tau;
    const bool last = t >= horizon;
    if (last) t = horizon;
    ++result.n_probes;
    const Configuration config = ConfigurationAt(scene, path, t);
    for (const auto& e : elements) {
      if (!e->InContact(scene, config)) continue;
      const DistanceResult d = e->Distance(scene, config);
      result.verdict = Verdict::kCollision;
      result.report = CollisionReport{e->pair(), t, d.witness_a, d.witness_b,
                                      0.0};
      if (last_free) result.valid_prefix = Interval{0.0, *last_free};
      return result;
    }
    last_free = t;
    if (last) break;
  }
  result.verdict = Verdict::kValid;
  result.valid_prefix = Interval{0.0, horizon};
  return result;
}

PathValidationResult ValidateDiscretized(const ElementList& elements,
                                         const Scene& scene,
                                         const PiecewisePath& path,
                                         double tau) {
  PathValidationResult total;
  total.duration = path.duration();
  double offset = 0.0;
  for (const StraightPath& segment : path.segments()) {
    PathValidationResult r = ValidateDiscretized(elements, scene, segment, tau);
    total.n_probes += r.n_probes;
    if (!r.valid()) {
      total.verdict = r.verdict;
      if (r.valid_prefix) {
        total.valid_prefix = Interval{0.0, offset + r.valid_prefix->hi};
      } else if (offset > 0.0) {
        total.valid_prefix = Interval{0.0, offset};
      }
      total.report = std::move(r.report);
      total.report->time += offset;
      return total;
    }
    offset += segment.duration();
  }
  total.valid_prefix = Interval{0.0, total.duration};
  return total;
}

}  // namespace cdpr_ccd
