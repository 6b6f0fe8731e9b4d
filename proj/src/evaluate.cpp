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

#include "scalecheck/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <mutex>
#include <set>
#include <thread>

#include "scalecheck/error.hpp"
#include "scalecheck/snapshot_io.hpp"

namespace scalecheck {

ClassMetrics metrics_from_confusion(const Confusion& c) {
  ClassMetrics m;
  if (c.tp + c.fp > 0) {
    m.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  }
  if (c.tp + c.fn > 0) {
    m.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  }
  if (m.precision + m.recall > 0) {
    m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
  }
  return m;
}

namespace {

// The clean class sees the same 2x2 table with the positive label flipped.
Confusion flipped(const Confusion& c) {
  return Confusion{c.tn, c.fn, c.fp, c.tp};
}

struct CaseScore {
  bool predicted_buggy = false;
  bool actual_buggy = false;
  Confusion views;
};

CaseScore score_case(const LabeledCase& labeled, const AnalysisConfig& config) {
  Report report = analyze(labeled.default_snap, labeled.scaled_snap, config);

  // Named indexes: range-for over a temporary's nodes() would dangle.
  TreeIndex index_a(labeled.default_snap);
  TreeIndex index_b(labeled.scaled_snap);
  std::set<std::string> universe;
  for (const ViewNode* n : index_a.nodes()) {
    universe.insert(n->uid);
  }
  for (const ViewNode* n : index_b.nodes()) {
    universe.insert(n->uid);
  }
  for (const std::string& uid : labeled.label.buggy_views) {
    if (!universe.count(uid)) {
      throw Error(ErrorKind::kLabelMismatch,
                  "label for " + labeled.name + " names unknown view " + uid);
    }
  }

  std::set<std::string> predicted;
  for (const Finding& f : report.findings) {
    predicted.insert(f.default_uids.begin(), f.default_uids.end());
    predicted.insert(f.scaled_uids.begin(), f.scaled_uids.end());
  }
  std::set<std::string> actual(labeled.label.buggy_views.begin(),
                               labeled.label.buggy_views.end());

  CaseScore score;
  score.predicted_buggy = report.buggy;
  score.actual_buggy = labeled.label.buggy;
  for (const std::string& uid : universe) {
    bool p = predicted.count(uid) > 0;
    bool a = actual.count(uid) > 0;
    if (p && a) {
      ++score.views.tp;
    } else if (p && !a) {
      ++score.views.fp;
    } else if (!p && a) {
      ++score.views.fn;
    } else {
      ++score.views.tn;
    }
  }
  return score;
}

}  // namespace

CorpusMetrics evaluate_stream(int case_count,
                              const std::function<LabeledCase(int)>& make_case,
                              const AnalysisConfig& config, int parallelism) {
  if (parallelism <= 0) {
    parallelism = static_cast<int>(std::thread::hardware_concurrency());
    if (parallelism <= 0) parallelism = 1;
  }
  parallelism = std::min(parallelism, std::max(case_count, 1));

  CorpusMetrics metrics;
  metrics.cases = case_count;
  std::atomic<int> next{0};
  std::mutex mutex;
  std::exception_ptr failure;

  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= case_count) return;
      try {
        // One case resident per worker: produce, score, discard.
        CaseScore score = score_case(make_case(i), config);
        std::lock_guard<std::mutex> lock(mutex);
        if (score.predicted_buggy && score.actual_buggy) {
          ++metrics.page_counts.tp;
        } else if (score.predicted_buggy && !score.actual_buggy) {
          ++metrics.page_counts.fp;
        } else if (!score.predicted_buggy && score.actual_buggy) {
          ++metrics.page_counts.fn;
        } else {
          ++metrics.page_counts.tn;
        }
        metrics.view_counts.tp += score.views.tp;
        metrics.view_counts.fp += score.views.fp;
        metrics.view_counts.fn += score.views.fn;
        metrics.view_counts.tn += score.views.tn;
      } catch (...) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!failure) failure = std::current_exception();
        next.store(case_count);  // stop remaining workers
        return;
      }
    }
  };

  std::vector<std::future<void>> futures;
  for (int w = 1; w < parallelism; ++w) {
    futures.push_back(std::async(std::launch::async, worker));
  }
  worker();
  for (auto& f : futures) f.get();
  if (failure) std::rethrow_exception(failure);

  metrics.page_bug = metrics_from_confusion(metrics.page_counts);
  metrics.page_clean = metrics_from_confusion(flipped(metrics.page_counts));
  metrics.view_bug = metrics_from_confusion(metrics.view_counts);
  metrics.view_clean = metrics_from_confusion(flipped(metrics.view_counts));
  return metrics;
}

std::vector<PageLabel> load_labels(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorKind::kMissingFile, "labels file not found: " + path.string());
  }
  std::ifstream in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kSchemaViolation,
                "labels " + path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("cases") || !j["cases"].is_array()) {
    throw Error(ErrorKind::kSchemaViolation,
                "labels " + path.string() + ": expected {\"cases\": [...]}");
  }
  std::vector<PageLabel> labels;
  for (const auto& entry : j["cases"]) {
    if (!entry.is_object() || !entry.contains("name") || !entry.contains("buggy")) {
      throw Error(ErrorKind::kSchemaViolation,
                  "labels " + path.string() + ": case entries need name and buggy");
    }
    PageLabel label;
    label.name = entry["name"].get<std::string>();
    label.buggy = entry["buggy"].get<bool>();
    if (entry.contains("buggyViews")) {
      for (const auto& uid : entry["buggyViews"]) {
        label.buggy_views.push_back(uid.get<std::string>());
      }
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

void write_labels(const std::vector<PageLabel>& labels,
                  const std::filesystem::path& path) {
  nlohmann::json j;
  j["cases"] = nlohmann::json::array();
  for (const PageLabel& label : labels) {
    j["cases"].push_back({{"name", label.name},
                          {"buggy", label.buggy},
                          {"buggyViews", label.buggy_views}});
  }
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  out << j.dump(2) << "\n";
}

CorpusMetrics evaluate_corpus(const std::filesystem::path& corpus_dir,
                              const std::filesystem::path& labels_path,
                              const AnalysisConfig& config, int parallelism) {
  if (!std::filesystem::is_directory(corpus_dir)) {
    throw Error(ErrorKind::kMissingFile,
                "corpus directory not found: " + corpus_dir.string());
  }
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
    if (entry.is_directory() &&
        entry.path().filename().string().rfind("case-", 0) == 0) {
      names.push_back(entry.path().filename().string());
    }
  }
  std::sort(names.begin(), names.end());

  std::map<std::string, PageLabel> by_name;
  for (PageLabel& label : load_labels(labels_path)) {
    by_name[label.name] = std::move(label);
  }
  for (const std::string& name : names) {
    if (!by_name.count(name)) {
      throw Error(ErrorKind::kLabelMismatch, "no label for case " + name);
    }
  }

  auto make_case = [&](int i) {
    const std::string& name = names[static_cast<std::size_t>(i)];
    LabeledCase c;
    c.name = name;
    c.default_snap = load_snapshot(corpus_dir / name / "default");
    c.scaled_snap = load_snapshot(corpus_dir / name / "scaled");
    c.label = by_name.at(name);
    return c;
  };
  return evaluate_stream(static_cast<int>(names.size()), make_case, config,
                         parallelism);
}

nlohmann::json metrics_to_json(const CorpusMetrics& metrics) {
  auto class_json = [](const ClassMetrics& m) {
    return nlohmann::json{
        {"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
  };
  auto counts_json = [](const Confusion& c) {
    return nlohmann::json{{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}, {"tn", c.tn}};
  };
  return nlohmann::json{
      {"cases", metrics.cases},
      {"page",
       {{"bug", class_json(metrics.page_bug)},
        {"clean", class_json(metrics.page_clean)},
        {"counts", counts_json(metrics.page_counts)}}},
      {"view",
       {{"bug", class_json(metrics.view_bug)},
        {"clean", class_json(metrics.view_clean)},
        {"counts", counts_json(metrics.view_counts)}}}};
}

}  // namespace scalecheck
