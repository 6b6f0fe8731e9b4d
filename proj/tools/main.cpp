// Copyright 2026 The Scalecheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "scalecheck/config.hpp"
#include "scalecheck/error.hpp"
#include "scalecheck/evaluate.hpp"
#include "scalecheck/fixture.hpp"
#include "scalecheck/pipeline.hpp"
#include "scalecheck/snapshot_io.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw scalecheck::Error(scalecheck::ErrorKind::kMissingFile,
                            "cannot write " + out_path);
  }
  out << text;
}

scalecheck::AnalysisConfig resolve_config(const std::string& path) {
  if (path.empty()) return {};
  return scalecheck::load_config(path);
}

int run_detect(const std::string& default_dir, const std::string& scaled_dir,
               const std::string& config_path, const std::string& out_path,
               const std::string& format) {
  scalecheck::AnalysisConfig config = resolve_config(config_path);
  scalecheck::Snapshot a = scalecheck::load_snapshot(default_dir);
  scalecheck::Snapshot b = scalecheck::load_snapshot(scaled_dir);
  scalecheck::Report report = scalecheck::analyze(a, b, config);
  if (format == "text") {
    emit(scalecheck::report_to_text(report), out_path);
  } else {
    emit(scalecheck::report_to_json(report).dump(2) + "\n", out_path);
  }
  return report.buggy ? 1 : 0;
}

int run_evaluate(const std::string& corpus_dir, const std::string& labels,
                 const std::string& config_path, const std::string& out_path,
                 int jobs) {
  scalecheck::AnalysisConfig config = resolve_config(config_path);
  scalecheck::CorpusMetrics metrics =
      scalecheck::evaluate_corpus(corpus_dir, labels, config, jobs);
  emit(scalecheck::metrics_to_json(metrics).dump(2) + "\n", out_path);
  return 0;
}

int run_generate(const std::string& spec_path, const std::string& out_dir,
                 int cases, int buggy, std::int64_t seed) {
  scalecheck::FixtureSpec spec;
  if (!spec_path.empty()) spec = scalecheck::load_fixture_spec(spec_path);
  if (cases >= 0) spec.cases = cases;
  if (buggy >= 0) spec.buggy_cases = buggy;
  if (seed >= 0) spec.seed = static_cast<std::uint64_t>(seed);
  scalecheck::write_corpus(spec, out_dir);
  std::cout << "wrote " << spec.cases << " cases to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detects display- and font-scaling layout defects by "
               "comparing two view-tree snapshots of the same page"};
  app.require_subcommand(1);

  std::string default_dir, scaled_dir, config_path, out_path;
  std::string format = "json";
  CLI::App* detect =
      app.add_subcommand("detect", "Compare a default-scale snapshot with a "
                                   "larger-scale snapshot");
  detect->add_option("default", default_dir, "Default-scale snapshot directory")
      ->required();
  detect->add_option("scaled", scaled_dir, "Larger-scale snapshot directory")
      ->required();
  detect->add_option("--config", config_path, "Analysis settings (.json/.toml)");
  detect->add_option("--out", out_path, "Write the report here instead of stdout");
  detect->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string corpus_dir, labels_path;
  int jobs = 0;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Score detection quality over a labeled corpus");
  evaluate->add_option("corpus", corpus_dir, "Corpus directory (case-*/...)")
      ->required();
  evaluate->add_option("--labels", labels_path, "Ground-truth labels file")
      ->required();
  evaluate->add_option("--config", config_path, "Analysis settings (.json/.toml)");
  evaluate->add_option("--out", out_path, "Write metrics here instead of stdout");
  evaluate->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  std::string spec_path, gen_out;
  int gen_cases = -1;
  int gen_buggy = -1;
  std::int64_t gen_seed = -1;
  CLI::App* generate = app.add_subcommand(
      "generate", "Write a synthetic snapshot corpus with ground-truth labels");
  generate->add_option("--spec", spec_path, "Corpus recipe (.json)");
  generate->add_option("--out", gen_out, "Output directory")->required();
  generate->add_option("--cases", gen_cases, "Override: total cases");
  generate->add_option("--buggy-cases", gen_buggy, "Override: trailing buggy cases");
  generate->add_option("--seed", gen_seed, "Override: generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (detect->parsed()) {
      return run_detect(default_dir, scaled_dir, config_path, out_path, format);
    }
    if (evaluate->parsed()) {
      return run_evaluate(corpus_dir, labels_path, config_path, out_path, jobs);
    }
    if (generate->parsed()) {
      return run_generate(spec_path, gen_out, gen_cases, gen_buggy, gen_seed);
    }
  } catch (const scalecheck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
