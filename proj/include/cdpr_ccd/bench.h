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

#ifndef CDPR_CCD_BENCH_H_
#define CDPR_CCD_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cdpr_ccd/ccd.h"
#include "cdpr_ccd/collision_element.h"
#include "cdpr_ccd/geometry.h"
#include "cdpr_ccd/model.h"
#include "cdpr_ccd/path.h"

namespace cdpr_ccd {

struct BenchConfig {
  int n_paths = 1000;
  std::uint64_t seed = 1;
  std::vector<double> taus = {0.1, 0.01, 0.001};
  // Sampled platform positions.
  Vec3 box_min = Vec3(-1.0, -1.0, -1.0);
  Vec3 box_max = Vec3(1.0, 1.0, 1.0);
  // Each end orientation is a rotation by U[0, max_rotation] about a
  // uniformly drawn axis.
  double max_rotation = 0.3;
  double duration_lo = 1.0;
  double duration_hi = 10.0;
  // Keep every joint at the middle of its range.
  bool freeze_arm = false;
  // Number of crafted paths with a single short collision window appended
  // to the random batch.
  int n_adversarial = 0;
  // Give up after this many consecutive rejected samples.
  int max_resample_attempts = 10000;
};

// Throws std::invalid_argument when the config is malformed.
void CheckBenchConfig(const BenchConfig& config);

struct PathBatch {
  std::vector<StraightPath> paths;
  // Samples rejected because the path started in collision or left the
  // workspace bounds.
  std::size_t resamples = 0;
  // paths[first_adversarial..] are crafted thin-window paths.
  std::size_t first_adversarial = 0;
};

// Deterministic in (scene, config).
PathBatch GenerateBenchPaths(const Scene& scene, const BenchConfig& config);

// One random path starting collision-free; nullopt after
// max_resample_attempts rejections. `resamples` counts rejections.
std::optional<StraightPath> SampleRandomPath(const Scene& scene,
                                             const BenchConfig& config,
                                             std::mt19937_64& rng,
                                             std::size_t& resamples);

// True when any element is in contact at time t.
bool ConfigurationInCollision(const ElementList& elements, const Scene& scene,
                              const StraightPath& path, double t);

// Extent of the collision window containing t, found by stepping at `step`
// and refined by bisection to `step` * 1e-3; each side stops after `cap`
// seconds.
Interval CollisionWindowAround(const ElementList& elements, const Scene& scene,
                               const StraightPath& path, double t, double step,
                               double cap);

// Derives from a colliding path a translated copy whose first collision
// window lasts between min_width and max_width seconds and is missed by
// sampling at `miss_tau`. nullopt when the search fails.
std::optional<StraightPath> FindThinWindowPath(
    const Scene& scene, const StraightPath& colliding, const Vec3& shift,
    double min_width, double max_width, double miss_tau);

struct PathRecord {
  int path_id = 0;
  std::string method;
  Verdict verdict = Verdict::kValid;
  double time_s = 0.0;
  std::optional<double> first_collision_t;
  std::size_t n_probes = 0;

  bool operator==(const PathRecord&) const = default;
};

struct TimeStats {
  std::size_t count = 0;
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

// Compared with the continuous verdict; paths it leaves inconclusive are
// excluded.
struct MethodSummary {
  std::string method;
  TimeStats true_positive;
  TimeStats true_negative;
  TimeStats false_positive;
  TimeStats false_negative;
  TimeStats excluded;
  TimeStats all_paths;
};

struct BenchReport {
  std::vector<PathRecord> records;
  std::vector<MethodSummary> summaries;
  std::size_t resamples = 0;
};

std::string ContinuousMethodName();
std::string DiscretizedMethodName(double tau);

// Runs the continuous validator and every discretized step on each path.
BenchReport RunBench(const Scene& scene, const BenchConfig& config,
                     const PathBatch& batch);

// Builds the summaries from per-path records.
std::vector<MethodSummary> Summarize(const std::vector<PathRecord>& records);

// path_id,method,verdict,time_s,first_collision_t,n_probes
std::string RecordsToCsv(const std::vector<PathRecord>& records);
// Throws std::runtime_error on malformed input.
std::vector<PathRecord> RecordsFromCsv(const std::string& text);

// method,row,count,min_s,mean_s,max_s with rows true_positive,
// true_negative, false_positive, false_negative, excluded, all_paths.
std::string SummaryToCsv(const std::vector<MethodSummary>& summaries);

std::string SummaryTable(const BenchReport& report);

}  // namespace cdpr_ccd

#endif  // CDPR_CCD_BENCH_H_
