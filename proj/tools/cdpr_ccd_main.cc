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

// Command line front end.
//
//   cdpr_ccd validate --scene F --path F --method continuous|disc --tau X
//                     [--json]
//   cdpr_ccd bench --scene F --n N --seed S --tau 0.1,0.01,0.001
//                  --out report.csv [--adversarial]
//   cdpr_ccd compare --scene F --path F --tau 0.1,0.001
//
// Exit status of validate: 0 valid, 1 collision, 2 inconclusive, 3 input
// error. CDPR_CCD_LOG_LEVEL (error, info, debug) sets stderr verbosity.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "cdpr_ccd/bench.h"
#include "cdpr_ccd/ccd.h"
#include "cdpr_ccd/collision_element.h"
#include "cdpr_ccd/discretized.h"
#include "cdpr_ccd/model.h"
#include "cdpr_ccd/path.h"
#include "cdpr_ccd/path_io.h"
#include "cdpr_ccd/scene_io.h"
#include "cdpr_ccd/triangle_mesh.h"

namespace {

using namespace cdpr_ccd;
using nlohmann::json;

constexpr int kExitValid = 0;
constexpr int kExitCollision = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInputError = 3;

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

LogLevel CurrentLogLevel() {
  const char* env = std::getenv("CDPR_CCD_LOG_LEVEL");
  if (env == nullptr) return LogLevel::kError;
  const std::string v = env;
  if (v == "debug") return LogLevel::kDebug;
  if (v == "info") return LogLevel::kInfo;
  return LogLevel::kError;
}

void Log(LogLevel level, const std::string& message) {
  if (level <= CurrentLogLevel()) std::cerr << message << "\n";
}

int ExitCode(Verdict v) {
  switch (v) {
    case Verdict::kValid:
      return kExitValid;
    case Verdict::kCollision:
      return kExitCollision;
    case Verdict::kInconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

json Vec3ToJson(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

json ResultToJson(const PathValidationResult& r, const std::string& method) {
  json out{{"method", method},
           {"verdict", std::string(VerdictName(r.verdict))},
           {"valid", r.valid()},
           {"duration", r.duration},
           {"n_probes", r.n_probes}};
  if (r.valid_prefix) {
    out["valid_prefix"] = json::array({r.valid_prefix->lo, r.valid_prefix->hi});
  } else {
    out["valid_prefix"] = nullptr;
  }
  if (r.report) {
    out["report"] = json{{"pair", Describe(r.report->pair)},
                         {"time", r.report->time},
                         {"witness_a", Vec3ToJson(r.report->witness_a)},
                         {"witness_b", Vec3ToJson(r.report->witness_b)},
                         {"distance", r.report->distance}};
  } else {
    out["report"] = nullptr;
  }
  return out;
}

void PrintResult(const PathValidationResult& r, const std::string& method) {
  std::printf("method:       %s\n", method.c_str());
  std::printf("verdict:      %s\n", std::string(VerdictName(r.verdict)).c_str());
  if (r.valid_prefix) {
    std::printf("valid prefix: [%.9g, %.9g]\n", r.valid_prefix->lo,
                r.valid_prefix->hi);
  } else {
    std::printf("valid prefix: empty\n");
  }
  std::printf("probes:       %zu\n", r.n_probes);
  if (r.report) {
    const CollisionReport& c = *r.report;
    std::printf("collision:    %s at t = %.9g\n", Describe(c.pair).c_str(),
                c.time);
    std::printf("witness a:    (%.6f, %.6f, %.6f)\n", c.witness_a.x(),
                c.witness_a.y(), c.witness_a.z());
    std::printf("witness b:    (%.6f, %.6f, %.6f)\n", c.witness_b.x(),
                c.witness_b.y(), c.witness_b.z());
  }
}

struct Inputs {
  Scene scene;
  std::optional<PiecewisePath> path;
};

Inputs Load(const std::string& scene_file, const std::string& path_file) {
  Inputs in;
  in.scene = LoadScene(scene_file);
  Log(LogLevel::kInfo, "loaded scene " + scene_file + " with " +
                           std::to_string(in.scene.cables.size()) + " cables");
  in.path = LoadPath(path_file, in.scene);
  Log(LogLevel::kInfo, "loaded path " + path_file + " with " +
                           std::to_string(in.path->segments().size()) +
                           " segments");
  return in;
}

PathValidationResult RunMethod(ElementList& elements, const Scene& scene,
                               const PiecewisePath& path,
                               std::optional<double> tau) {
  if (tau) return ValidateDiscretized(elements, scene, path, *tau);
  return ValidatePiecewisePath(elements, scene, path);
}

int RunValidate(const std::string& scene_file, const std::string& path_file,
                const std::string& method, std::optional<double> tau,
                bool as_json) {
  const bool continuous = method == "continuous";
  if (!continuous && !tau) {
    throw std::invalid_argument("--tau is required with --method disc");
  }
  Inputs in = Load(scene_file, path_file);
  ElementList elements = MakeCollisionElements(in.scene);
  Log(LogLevel::kDebug,
      std::to_string(elements.size()) + " collision elements");
  const std::optional<double> step = continuous ? std::nullopt : tau;
  const std::string name =
      continuous ? ContinuousMethodName() : DiscretizedMethodName(*tau);
  const PathValidationResult r = RunMethod(elements, in.scene, *in.path, step);
  if (as_json) {
    std::cout << ResultToJson(r, name).dump(2) << "\n";
  } else {
    PrintResult(r, name);
  }
  return ExitCode(r.verdict);
}

int RunCompare(const std::string& scene_file, const std::string& path_file,
               const std::vector<double>& taus) {
  Inputs in = Load(scene_file, path_file);
  ElementList elements = MakeCollisionElements(in.scene);

  struct Row {
    std::string method;
    PathValidationResult result;
    double seconds;
  };
  std::vector<Row> rows;
  auto run = [&](std::optional<double> tau) {
    const auto start = std::chrono::steady_clock::now();
    PathValidationResult r = RunMethod(elements, in.scene, *in.path, tau);
    const double s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    rows.push_back({tau ? DiscretizedMethodName(*tau) : ContinuousMethodName(),
                    std::move(r), s});
  };
  run(std::nullopt);
  for (double tau : taus) run(tau);

  std::printf("%-26s %-13s %12s %10s %18s  %s\n", "method", "verdict",
              "time_s", "probes", "first_collision_t", "pair");
  const Verdict reference = rows.front().result.verdict;
  for (const Row& row : rows) {
    const PathValidationResult& r = row.result;
    std::string first = "-";
    std::string pair = "-";
    if (r.report) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.9g", r.report->time);
      first = buf;
      pair = Describe(r.report->pair);
    }
    const bool disagrees = r.verdict != reference;
    std::printf("%-26s %-13s %12.6f %10zu %18s  %s%s\n", row.method.c_str(),
                std::string(VerdictName(r.verdict)).c_str(), row.seconds,
                r.n_probes, first.c_str(), pair.c_str(),
                disagrees ? "  <-- disagrees with continuous" : "");
  }
  return kExitValid;
}

int RunBenchCommand(const std::string& scene_file, BenchConfig config,
                    bool adversarial, int n_adversarial,
                    const std::string& out_file) {
  const Scene scene = LoadScene(scene_file);
  if (adversarial) config.n_adversarial = n_adversarial;
  CheckBenchConfig(config);
  Log(LogLevel::kInfo, "generating " + std::to_string(config.n_paths) +
                           " random paths");
  const PathBatch batch = GenerateBenchPaths(scene, config);
  if (adversarial) {
    Log(LogLevel::kInfo,
        std::to_string(batch.paths.size() - batch.first_adversarial) +
            " thin-window paths added");
  }
  const BenchReport report = RunBench(scene, config, batch);

  std::ofstream out(out_file);
  if (!out) throw InputError("cannot write " + out_file);
  out << RecordsToCsv(report.records);
  std::filesystem::path summary = out_file;
  summary.replace_filename(summary.stem().string() + "_summary.csv");
  std::ofstream sout(summary);
  if (!sout) throw InputError("cannot write " + summary.string());
  sout << SummaryToCsv(report.summaries);

  std::cout << SummaryTable(report);
  std::cout << "per-path records: " << out_file << "\n"
            << "summary:          " << summary.string() << "\n";
  return kExitValid;
}

Vec3 ToVec3(const std::vector<double>& v) { return Vec3(v[0], v[1], v[2]); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous collision validation for cable-driven robots"};
  app.require_subcommand(1);

  std::string scene_file;
  std::string path_file;

  auto* validate = app.add_subcommand("validate", "Validate one path");
  std::string method = "continuous";
  double tau = 0.0;
  bool as_json = false;
  validate->add_option("--scene", scene_file, "Scene JSON file")->required();
  validate->add_option("--path", path_file, "Path JSON file")->required();
  validate->add_option("--method", method, "continuous or disc")
      ->check(CLI::IsMember({"continuous", "disc", "discretized"}));
  auto* tau_opt = validate->add_option("--tau", tau, "Discretization step (s)")
                      ->check(CLI::PositiveNumber);
  validate->add_flag("--json", as_json, "Print a JSON document");

  auto* bench = app.add_subcommand("bench", "Benchmark on random paths");
  BenchConfig config;
  std::string out_file = "report.csv";
  bool adversarial = false;
  int n_adversarial = 10;
  std::vector<double> box_min = {-2.5, -2.0, 1.5};
  std::vector<double> box_max = {2.5, 2.0, 3.5};
  std::vector<double> durations = {config.duration_lo, config.duration_hi};
  bench->add_option("--scene", scene_file, "Scene JSON file")->required();
  bench->add_option("--n", config.n_paths, "Number of random paths")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", config.seed, "Random seed");
  bench->add_option("--tau", config.taus, "Discretization steps (s)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", out_file, "Per-path CSV output");
  bench->add_flag("--adversarial", adversarial,
                  "Append crafted thin-window paths");
  bench->add_option("--n-adversarial", n_adversarial,
                    "Number of thin-window paths with --adversarial");
  bench->add_option("--box-min", box_min, "Platform position box corner")
      ->expected(3)
      ->delimiter(',');
  bench->add_option("--box-max", box_max, "Platform position box corner")
      ->expected(3)
      ->delimiter(',');
  bench->add_option("--max-rotation", config.max_rotation,
                    "Largest end orientation angle (rad)");
  bench->add_option("--durations", durations, "Path duration range (s)")
      ->expected(2)
      ->delimiter(',');
  bench->add_flag("--freeze-arm", config.freeze_arm,
                  "Keep the arm at mid-range");

  auto* compare = app.add_subcommand("compare", "Compare methods on a path");
  std::vector<double> compare_taus = {0.1, 0.01, 0.001};
  compare->add_option("--scene", scene_file, "Scene JSON file")->required();
  compare->add_option("--path", path_file, "Path JSON file")->required();
  compare->add_option("--tau", compare_taus, "Discretization steps (s)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*validate) {
      std::optional<double> step;
      if (method != "continuous") {
        if (tau_opt->count() == 0) {
          throw std::invalid_argument("--tau is required with --method disc");
        }
        step = tau;
      }
      return RunValidate(scene_file, path_file, method, step, as_json);
    }
    if (*bench) {
      config.box_min = ToVec3(box_min);
      config.box_max = ToVec3(box_max);
      config.duration_lo = durations[0];
      config.duration_hi = durations[1];
      return RunBenchCommand(scene_file, config, adversarial, n_adversarial,
                             out_file);
    }
    if (*compare) return RunCompare(scene_file, path_file, compare_taus);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const MeshError& e) {
    std::cerr << "mesh error: " << e.what() << "\n";
  } catch (const ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}
