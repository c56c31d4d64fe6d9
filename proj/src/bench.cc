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

#include "cdpr_ccd/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cdpr_ccd/discretized.h"

namespace cdpr_ccd {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::duration d) {
  return std::chrono::duration<double>(d).count();
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Verdict ParseVerdict(const std::string& s) {
  for (Verdict v :
       {Verdict::kValid, Verdict::kCollision, Verdict::kInconclusive}) {
    if (VerdictName(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

Rotation RandomRotation(std::mt19937_64& rng, double max_angle) {
  std::normal_distribution<double> normal;
  Vec3 axis;
  do {
    axis = Vec3(normal(rng), normal(rng), normal(rng));
  } while (axis.norm() < 1e-9);
  std::uniform_real_distribution<double> angle(0.0, max_angle);
  return RotationFromVector(axis.normalized() * angle(rng));
}

std::vector<double> RandomJoints(const Scene& scene, const BenchConfig& config,
                                 std::mt19937_64& rng) {
  std::vector<double> q;
  q.reserve(scene.arm.size());
  for (const JointSpec& j : scene.arm) {
    if (config.freeze_arm || j.upper <= j.lower) {
      q.push_back(0.5 * (j.lower + j.upper));
    } else {
      q.push_back(std::uniform_real_distribution<double>(j.lower, j.upper)(rng));
    }
  }
  return q;
}

Vec3 RandomPosition(const BenchConfig& config, std::mt19937_64& rng) {
  Vec3 p;
  for (int k = 0; k < 3; ++k) {
    p[k] = std::uniform_real_distribution<double>(config.box_min[k],
                                                  config.box_max[k])(rng);
  }
  return p;
}

StraightPath Translated(const StraightPath& path, const Vec3& shift) {
  Pose start = path.start_pose();
  start.translation += shift;
  return StraightPath(path.duration(), start, path.linear_velocity(),
                      path.angular_velocity(), path.q_start(), path.q_end());
}

TimeStats Stats(const std::vector<double>& times) {
  TimeStats s;
  s.count = times.size();
  if (times.empty()) return s;
  s.min = *std::min_element(times.begin(), times.end());
  s.max = *std::max_element(times.begin(), times.end());
  double sum = 0.0;
  for (double t : times) sum += t;
  s.mean = sum / static_cast<double>(times.size());
  return s;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

void CheckBenchConfig(const BenchConfig& config) {
  if (config.n_paths <= 0) {
    throw std::invalid_argument("number of paths must be positive");
  }
  for (int k = 0; k < 3; ++k) {
    if (!(config.box_min[k] <= config.box_max[k])) {
      throw std::invalid_argument("workspace box is not well ordered");
    }
  }
  if (!(config.duration_lo > 0.0) ||
      !(config.duration_lo <= config.duration_hi)) {
    throw std::invalid_argument("durations must satisfy 0 < lo <= hi");
  }
  if (!(config.max_rotation >= 0.0) ||
      2.0 * config.max_rotation > kMaxStraightPathAngle) {
    throw std::invalid_argument("max rotation must lie in [0, pi / 2)");
  }
  for (double tau : config.taus) {
    if (!(tau > 0.0)) throw std::invalid_argument("time steps must be positive");
  }
  if (config.n_adversarial < 0) {
    throw std::invalid_argument("adversarial count must be non-negative");
  }
}

bool ConfigurationInCollision(const ElementList& elements, const Scene& scene,
                              const StraightPath& path, double t) {
  const Configuration c = ConfigurationAt(scene, path, t);
  for (const auto& e : elements) {
    if (e->InContact(scene, c)) return true;
  }
  return false;
}

std::optional<StraightPath> SampleRandomPath(const Scene& scene,
                                             const BenchConfig& config,
                                             std::mt19937_64& rng,
                                             std::size_t& resamples) {
  const ElementList elements = MakeCollisionElements(scene);
  for (int attempt = 0; attempt < config.max_resample_attempts; ++attempt) {
    const Pose p0{RandomRotation(rng, config.max_rotation),
                  RandomPosition(config, rng)};
    const Pose p1{RandomRotation(rng, config.max_rotation),
                  RandomPosition(config, rng)};
    std::vector<double> q0 = RandomJoints(scene, config, rng);
    std::vector<double> q1 = RandomJoints(scene, config, rng);
    const double duration = std::uniform_real_distribution<double>(
        config.duration_lo, config.duration_hi)(rng);
    try {
      StraightPath path =
          StraightPathBetween(p0, p1, std::move(q0), std::move(q1), duration);
      ComputeAllCableLengthBounds(scene, path);
      if (!ConfigurationInCollision(elements, scene, path, 0.0)) return path;
    } catch (const ModelError&) {
    }
    ++resamples;
  }
  return std::nullopt;
}

Interval CollisionWindowAround(const ElementList& elements, const Scene& scene,
                               const StraightPath& path, double t, double step,
                               double cap) {
  const double horizon = path.duration();
  auto hit = [&](double s) {
    return ConfigurationInCollision(elements, scene, path, s);
  };
  // Walks from t in direction dir; returns the last colliding time.
  auto edge = [&](double dir) {
    double in = t;
    while (std::abs(in - t) < cap) {
      const double next = std::clamp(in + dir * step, 0.0, horizon);
      if (next == in) return in;
      if (!hit(next)) {
        double out = next;
        while (std::abs(out - in) > step * 1e-3) {
          const double mid = 0.5 * (in + out);
          (hit(mid) ? in : out) = mid;
        }
        return in;
      }
      in = next;
    }
    return in;
  };
  return {edge(-1.0), edge(1.0)};
}

std::optional<StraightPath> FindThinWindowPath(
    const Scene& scene, const StraightPath& colliding, const Vec3& shift,
    double min_width, double max_width, double miss_tau) {
  ElementList elements = MakeCollisionElements(scene);

  struct Probe {
    bool ok = false;
    PathValidationResult result;
  };
  auto classify = [&](const StraightPath& path) {
    Probe p;
    try {
      if (ConfigurationInCollision(elements, scene, path, 0.0)) return p;
      BindElements(elements, scene, path);
      p.result = ValidateStraightPath(elements, scene, path);
      p.ok = true;
    } catch (const ModelError&) {
    }
    return p;
  };

  const Probe at_lo = classify(colliding);
  const Probe at_hi = classify(Translated(colliding, shift));
  if (!at_lo.ok || !at_hi.ok || at_lo.result.verdict != Verdict::kCollision ||
      at_hi.result.verdict != Verdict::kValid) {
    return std::nullopt;
  }

  double lo = 0.0;  // collides, window too wide
  double hi = 1.0;  // free, or window too narrow
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    StraightPath path = Translated(colliding, mid * shift);
    const Probe p = classify(path);
    if (!p.ok) return std::nullopt;
    if (p.result.verdict != Verdict::kCollision) {
      hi = mid;
      continue;
    }
    const Interval w = CollisionWindowAround(elements, scene, path,
                                             p.result.report->time, 1e-4,
                                             2.0 * max_width);
    if (w.Length() > max_width) {
      lo = mid;
    } else if (w.Length() < min_width) {
      hi = mid;
    } else if (ValidateDiscretized(elements, scene, path, miss_tau).valid()) {
      return path;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

PathBatch GenerateBenchPaths(const Scene& scene, const BenchConfig& config) {
  CheckBenchConfig(config);
  PathBatch batch;
  std::mt19937_64 rng(config.seed);
  for (int k = 0; k < config.n_paths; ++k) {
    std::optional<StraightPath> path =
        SampleRandomPath(scene, config, rng, batch.resamples);
    if (!path) {
      throw std::runtime_error(
          "could not sample a collision-free start configuration");
    }
    batch.paths.push_back(std::move(*path));
  }
  batch.first_adversarial = batch.paths.size();

  if (config.n_adversarial > 0) {
    // Colliding random paths are pushed sideways until only a short
    // collision window remains.
    BenchConfig long_paths = config;
    long_paths.duration_lo = long_paths.duration_hi = 10.0;
    std::mt19937_64 adv_rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    ElementList elements = MakeCollisionElements(scene);
    std::normal_distribution<double> normal;
    int found = 0;
    for (int attempt = 0;
         found < config.n_adversarial && attempt < 50 * config.n_adversarial;
         ++attempt) {
      std::optional<StraightPath> path =
          SampleRandomPath(scene, long_paths, adv_rng, batch.resamples);
      if (!path) break;
      BindElements(elements, scene, *path);
      if (ValidateStraightPath(elements, scene, *path).verdict !=
          Verdict::kCollision) {
        continue;
      }
      const Vec3 shift =
          Vec3(normal(adv_rng), normal(adv_rng), normal(adv_rng)).normalized();
      std::optional<StraightPath> thin =
          FindThinWindowPath(scene, *path, shift, 0.005, 0.045, 0.1);
      if (!thin) continue;
      batch.paths.push_back(std::move(*thin));
      ++found;
    }
  }
  return batch;
}

std::string ContinuousMethodName() { return "continuous"; }

std::string DiscretizedMethodName(double tau) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "discretized_tau=%g", tau);
  return buf;
}

BenchReport RunBench(const Scene& scene, const BenchConfig& config,
                     const PathBatch& batch) {
  BenchReport report;
  report.resamples = batch.resamples;
  ElementList elements = MakeCollisionElements(scene);

  auto record = [&](int id, std::string method,
                    const PathValidationResult& r, double seconds) {
    PathRecord rec;
    rec.path_id = id;
    rec.method = std::move(method);
    rec.verdict = r.verdict;
    rec.time_s = seconds;
    if (r.report) rec.first_collision_t = r.report->time;
    rec.n_probes = r.n_probes;
    report.records.push_back(std::move(rec));
  };

  for (std::size_t k = 0; k < batch.paths.size(); ++k) {
    const StraightPath& path = batch.paths[k];
    const int id = static_cast<int>(k);

    BindElements(elements, scene, path);
    auto start = Clock::now();
    const PathValidationResult cont =
        ValidateStraightPath(elements, scene, path);
    record(id, ContinuousMethodName(), cont, Seconds(Clock::now() - start));

    for (double tau : config.taus) {
      start = Clock::now();
      const PathValidationResult disc =
          ValidateDiscretized(elements, scene, path, tau);
      record(id, DiscretizedMethodName(tau), disc,
             Seconds(Clock::now() - start));
    }
  }
  report.summaries = Summarize(report.records);
  return report;
}

std::vector<MethodSummary> Summarize(const std::vector<PathRecord>& records) {
  std::map<int, Verdict> reference;
  for (const PathRecord& r : records) {
    if (r.method == ContinuousMethodName()) reference[r.path_id] = r.verdict;
  }

  struct Buckets {
    std::vector<double> tp, tn, fp, fn, excluded, all;
  };
  std::vector<std::string> order;
  std::map<std::string, Buckets> buckets;
  for (const PathRecord& r : records) {
    if (!buckets.count(r.method)) order.push_back(r.method);
    Buckets& b = buckets[r.method];
    b.all.push_back(r.time_s);
    auto ref = reference.find(r.path_id);
    if (ref == reference.end() || ref->second == Verdict::kInconclusive ||
        r.verdict == Verdict::kInconclusive) {
      b.excluded.push_back(r.time_s);
      continue;
    }
    const bool ref_hit = ref->second == Verdict::kCollision;
    const bool hit = r.verdict == Verdict::kCollision;
    if (hit && ref_hit) {
      b.tp.push_back(r.time_s);
    } else if (!hit && !ref_hit) {
      b.tn.push_back(r.time_s);
    } else if (hit) {
      b.fp.push_back(r.time_s);
    } else {
      b.fn.push_back(r.time_s);
    }
  }

  std::vector<MethodSummary> out;
  for (const std::string& m : order) {
    const Buckets& b = buckets[m];
    out.push_back(MethodSummary{m, Stats(b.tp), Stats(b.tn), Stats(b.fp),
                                Stats(b.fn), Stats(b.excluded), Stats(b.all)});
  }
  return out;
}

std::string RecordsToCsv(const std::vector<PathRecord>& records) {
  std::string out =
      "path_id,method,verdict,time_s,first_collision_t,n_probes\n";
  for (const PathRecord& r : records) {
    out += std::to_string(r.path_id) + "," + r.method + "," +
           std::string(VerdictName(r.verdict)) + "," + FormatDouble(r.time_s) +
           "," + (r.first_collision_t ? FormatDouble(*r.first_collision_t) : "") +
           "," + std::to_string(r.n_probes) + "\n";
  }
  return out;
}

std::vector<PathRecord> RecordsFromCsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "path_id,method,verdict,time_s,first_collision_t,n_probes") {
    throw std::runtime_error("missing or unexpected CSV header");
  }
  std::vector<PathRecord> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> cells = SplitCsvLine(line);
    if (cells.size() != 6) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 6 fields");
    }
    try {
      PathRecord r;
      r.path_id = std::stoi(cells[0]);
      r.method = cells[1];
      r.verdict = ParseVerdict(cells[2]);
      r.time_s = std::stod(cells[3]);
      if (!cells[4].empty()) r.first_collision_t = std::stod(cells[4]);
      r.n_probes = std::stoull(cells[5]);
      out.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                               e.what());
    }
  }
  return out;
}

std::string SummaryToCsv(const std::vector<MethodSummary>& summaries) {
  std::string out = "method,row,count,min_s,mean_s,max_s\n";
  for (const MethodSummary& m : summaries) {
    const std::pair<const char*, const TimeStats*> rows[] = {
        {"true_positive", &m.true_positive},
        {"true_negative", &m.true_negative},
        {"false_positive", &m.false_positive},
        {"false_negative", &m.false_negative},
        {"excluded", &m.excluded},
        {"all_paths", &m.all_paths},
    };
    for (const auto& [name, s] : rows) {
      out += m.method + "," + name + "," + std::to_string(s->count) + "," +
             FormatDouble(s->min) + "," + FormatDouble(s->mean) + "," +
             FormatDouble(s->max) + "\n";
    }
  }
  return out;
}

std::string SummaryTable(const BenchReport& report) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-26s %-15s %6s %10s %10s %10s\n", "method",
                "row", "count", "min_s", "mean_s", "max_s");
  out << buf;
  for (const MethodSummary& m : report.summaries) {
    const std::pair<const char*, const TimeStats*> rows[] = {
        {"true positives", &m.true_positive},
        {"true negatives", &m.true_negative},
        {"false negatives", &m.false_negative},
        {"false positives", &m.false_positive},
        {"excluded", &m.excluded},
        {"all paths", &m.all_paths},
    };
    for (const auto& [name, s] : rows) {
      std::snprintf(buf, sizeof(buf), "%-26s %-15s %6zu %10.6f %10.6f %10.6f\n",
                    m.method.c_str(), name, s->count, s->min, s->mean, s->max);
      out << buf;
    }
  }
  out << "resampled start configurations: " << report.resamples << "\n";
  return out.str();
}

}  // namespace cdpr_ccd
