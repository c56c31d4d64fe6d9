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

#ifndef CDPR_CCD_CCD_H_
#define CDPR_CCD_CCD_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "cdpr_ccd/collision_element.h"
#include "cdpr_ccd/interval_set.h"
#include "cdpr_ccd/model.h"
#include "cdpr_ccd/path.h"

namespace cdpr_ccd {

inline constexpr std::size_t kMaxProbesPerPath = 1'000'000;

enum class Verdict { kValid, kCollision, kInconclusive };

std::string_view VerdictName(Verdict v);

struct PathValidationResult {
  Verdict verdict = Verdict::kValid;
  // Certified collision-free prefix [0, t_v]; nullopt when nothing was
  // certified. Equals [0, T] when the verdict is kValid.
  std::optional<Interval> valid_prefix;
  std::optional<CollisionReport> report;
  // Configurations checked (dichotomy probes or samples).
  std::size_t n_probes = 0;
  double duration = 0.0;

  bool valid() const { return verdict == Verdict::kValid; }
};

struct AllElementsVerdict {
  bool success = false;
  Interval interval;
  std::optional<CollisionReport> report;
};

// Intersection of the intervals certified by every element at time t, in
// enumeration order; stops at the first element in contact.
AllElementsVerdict ValidateAllElements(ElementList& elements,
                                       const Scene& scene,
                                       const StraightPath& path, double t);

struct StraightPathOptions {
  std::size_t max_probes = kMaxProbesPerPath;
};

// Dichotomy over [0, T]. Elements must be bound to `path`.
PathValidationResult ValidateStraightPath(
    ElementList& elements, const Scene& scene, const StraightPath& path,
    const StraightPathOptions& options = {});

// Binds every element to each segment in turn and validates it; stops at the
// first segment that is not valid. Times in the result are global.
PathValidationResult ValidatePiecewisePath(
    ElementList& elements, const Scene& scene, const PiecewisePath& path,
    const StraightPathOptions& options = {});

// Largest velocity bound among the bound elements.
double MaxVelocityBound(const ElementList& elements);

}  // namespace cdpr_ccd

#endif  // CDPR_CCD_CCD_H_
