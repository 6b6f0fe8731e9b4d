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

#ifndef SCALECHECK_PIPELINE_HPP_
#define SCALECHECK_PIPELINE_HPP_

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "scalecheck/finding.hpp"
#include "scalecheck/interview.hpp"
#include "scalecheck/intraview.hpp"
#include "scalecheck/snapshot.hpp"

namespace scalecheck {

struct AnalysisConfig {
  ExemptionConfig exemptions;
  IntraCheckConfig intra;
};

struct PhaseTimings {
  double pairing_ms = 0.0;
  double inter_ms = 0.0;
  double intra_ms = 0.0;
  double total_ms = 0.0;
};

struct Report {
  bool buggy = false;
  std::vector<Finding> findings;
  std::map<IssueCategory, int> stats;  // every category, zero included
  std::vector<std::string> diagnostics;
  PhaseTimings timings;
};

// Full comparison of a default-scale snapshot (a) against a larger-scale
// snapshot (b): pairing, per-tree inter-view analysis, cross-tree
// comparison, then intra-view checks on paired visible leaves. A kernel
// failure on one view is recorded as a diagnostic and skipped.
Report analyze(const Snapshot& a, const Snapshot& b,
               const AnalysisConfig& config = {});

nlohmann::json report_to_json(const Report& report);

// Serialization with the timing block removed; two analyses of the same
// inputs produce identical canonical bytes.
std::string canonical_report_json(const Report& report);

// FNV-1a 64-bit hash of the canonical serialization, as hex.
std::string report_hash(const Report& report);

std::string report_to_text(const Report& report);

}  // namespace scalecheck

#endif  // SCALECHECK_PIPELINE_HPP_
