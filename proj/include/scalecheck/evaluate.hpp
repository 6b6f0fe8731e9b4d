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

#ifndef SCALECHECK_EVALUATE_HPP_
#define SCALECHECK_EVALUATE_HPP_

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scalecheck/pipeline.hpp"
#include "scalecheck/snapshot.hpp"

namespace scalecheck {

struct Confusion {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Precision TP/(TP+FP), recall TP/(TP+FN), F1 their harmonic mean; an empty
// denominator yields 0 rather than a division error.
ClassMetrics metrics_from_confusion(const Confusion& c);

// Ground truth for one corpus case. buggy_views lists the uids injected with
// a defect (fixture uids are shared between the two trees).
struct PageLabel {
  std::string name;
  bool buggy = false;
  std::vector<std::string> buggy_views;
};

struct LabeledCase {
  std::string name;
  Snapshot default_snap;
  Snapshot scaled_snap;
  PageLabel label;
};

struct CorpusMetrics {
  ClassMetrics page_bug, page_clean;
  ClassMetrics view_bug, view_clean;
  Confusion page_counts;  // positive class: buggy page
  Confusion view_counts;  // positive class: buggy view
  int cases = 0;
};

// Runs analyze on each produced case and scores predictions against labels
// at page and view granularity. Cases are produced lazily so only a few are
// resident at a time; parallelism 0 means one worker per hardware thread.
// Throws LabelMismatch when a label names a uid absent from both trees.
CorpusMetrics evaluate_stream(int case_count,
                              const std::function<LabeledCase(int)>& make_case,
                              const AnalysisConfig& config,
                              int parallelism = 0);

// Scores <corpus-dir>/case-*/{default,scaled} against a labels file.
CorpusMetrics evaluate_corpus(const std::filesystem::path& corpus_dir,
                              const std::filesystem::path& labels_path,
                              const AnalysisConfig& config,
                              int parallelism = 0);

std::vector<PageLabel> load_labels(const std::filesystem::path& path);
void write_labels(const std::vector<PageLabel>& labels,
                  const std::filesystem::path& path);

nlohmann::json metrics_to_json(const CorpusMetrics& metrics);

}  // namespace scalecheck

#endif  // SCALECHECK_EVALUATE_HPP_
