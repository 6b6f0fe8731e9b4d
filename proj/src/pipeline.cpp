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

#include "scalecheck/pipeline.hpp"

#include <chrono>
#include <cstdint>
#include <sstream>

#include "scalecheck/error.hpp"
#include "scalecheck/interview.hpp"
#include "scalecheck/intraview.hpp"

namespace scalecheck {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

Report analyze(const Snapshot& a, const Snapshot& b, const AnalysisConfig& config) {
  auto t_total = std::chrono::steady_clock::now();
  Report report;

  auto t_pair = std::chrono::steady_clock::now();
  ViewPairing pairing = pair_views(a, b);
  report.timings.pairing_ms = ms_since(t_pair);

  auto t_inter = std::chrono::steady_clock::now();
  InterViewState state_a = analyze_tree(a, config.exemptions);
  InterViewState state_b = analyze_tree(b, config.exemptions);
  std::vector<Finding> findings =
      compare_inter(state_a, state_b, pairing, a, b);
  report.timings.inter_ms = ms_since(t_inter);

  auto t_intra = std::chrono::steady_clock::now();
  TreeIndex index_a(a);
  TreeIndex index_b(b);
  for (const auto& [ua, ub] : pairing.pairs) {
    const ViewNode* na = index_a.find(ua);
    const ViewNode* nb = index_b.find(ub);
    if (na == nullptr || nb == nullptr) continue;
    if (!na->is_leaf() || !nb->is_leaf()) continue;
    // Content checks only make sense for views that actually show up; a
    // visibility flip is already reported above.
    if (!state_a.visible.count(ua) || !state_b.visible.count(ub)) continue;
    try {
      std::optional<Finding> f =
          check_pair(*na, a.image_of(*na), *nb, b.image_of(*nb), config.intra);
      if (f) findings.push_back(std::move(*f));
    } catch (const Error& e) {
      report.diagnostics.push_back("content check skipped for " + ua + ": " +
                                   e.what());
    }
  }
  report.timings.intra_ms = ms_since(t_intra);

  for (const std::string& d : state_a.diagnostics) {
    report.diagnostics.push_back("default: " + d);
  }
  for (const std::string& d : state_b.diagnostics) {
    report.diagnostics.push_back("scaled: " + d);
  }

  for (IssueCategory c :
       {IssueCategory::kComponentOverlapping, IssueCategory::kContentOverlapping,
        IssueCategory::kComponentCropping, IssueCategory::kContentCropping,
        IssueCategory::kComponentMissing}) {
    report.stats[c] = 0;
  }
  for (const Finding& f : findings) {
    ++report.stats[f.category];
  }

  report.findings = std::move(findings);
  report.buggy = !report.findings.empty();
  report.timings.total_ms = ms_since(t_total);
  return report;
}

namespace {

nlohmann::json report_body(const Report& report) {
  nlohmann::json j;
  j["verdict"] = report.buggy ? "Buggy" : "Clean";
  j["findings"] = nlohmann::json::array();
  for (const Finding& f : report.findings) {
    j["findings"].push_back(to_json(f));
  }
  j["stats"] = nlohmann::json::object();
  for (const auto& [category, count] : report.stats) {
    j["stats"][to_string(category)] = count;
  }
  j["diagnostics"] = report.diagnostics;
  return j;
}

}  // namespace

std::string canonical_report_json(const Report& report) {
  return report_body(report).dump();
}

nlohmann::json report_to_json(const Report& report) {
  nlohmann::json j = report_body(report);
  j["timings"] = {{"pairingMs", report.timings.pairing_ms},
                  {"interMs", report.timings.inter_ms},
                  {"intraMs", report.timings.intra_ms},
                  {"totalMs", report.timings.total_ms}};
  return j;
}

std::string report_hash(const Report& report) {
  // FNV-1a over the canonical serialization; timings are excluded so two
  // runs over the same inputs hash identically.
  std::string text = canonical_report_json(report);
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << hash;
  return out.str();
}

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  out << "verdict: " << (report.buggy ? "Buggy" : "Clean") << "\n";
  out << "findings: " << report.findings.size() << "\n";
  for (const Finding& f : report.findings) {
    out << "  [" << to_string(f.category) << "] " << to_string(f.kind)
        << " default=";
    for (std::size_t i = 0; i < f.default_uids.size(); ++i) {
      out << (i ? "," : "") << f.default_uids[i];
    }
    out << " scaled=";
    for (std::size_t i = 0; i < f.scaled_uids.size(); ++i) {
      out << (i ? "," : "") << f.scaled_uids[i];
    }
    out << "\n";
  }
  out << "stats:\n";
  for (const auto& [category, count] : report.stats) {
    out << "  " << to_string(category) << ": " << count << "\n";
  }
  if (!report.diagnostics.empty()) {
    out << "diagnostics:\n";
    for (const std::string& d : report.diagnostics) {
      out << "  " << d << "\n";
    }
  }
  return out.str();
}

}  // namespace scalecheck
