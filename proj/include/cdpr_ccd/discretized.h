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

#ifndef CDPR_CCD_DISCRETIZED_H_
#define CDPR_CCD_DISCRETIZED_H_

#include "cdpr_ccd/ccd.h"
#include "cdpr_ccd/collision_element.h"
#include "cdpr_ccd/model.h"
#include "cdpr_ccd/path.h"

namespace cdpr_ccd {

// Checks the configurations at t = 0, tau, 2 tau, ... and always at T. A
// collision between two samples goes unnoticed. The valid prefix of a
// colliding path ends at the last collision-free sample; it is not
// certified. Throws std::invalid_argument unless tau > 0.
PathValidationResult ValidateDiscretized(const ElementList& elements,
                                         const Scene& scene,
                                         const StraightPath& path, double tau);

PathValidationResult ValidateDiscretized(const ElementList& elements,
                                         const Scene& scene,
                                         const PiecewisePath& path,
                                         double tau);

}  // namespace cdpr_ccd

#endif  // CDPR_CCD_DISCRETIZED_H_
