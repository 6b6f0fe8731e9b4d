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

#ifndef SCALECHECK_FINDING_HPP_
#define SCALECHECK_FINDING_HPP_

#include <string>
#include <vector>

#include "json.hpp"

namespace scalecheck {

// Detector-level result kinds.
enum class FindingKind {
  kVisibilityInconsistency,
  kMissingCounterpart,
  kOverlapInconsistency,
  kCropInconsistency,
  kTextScaleAnomaly,
  kNonTextAnomaly,
};

// User-facing issue classes that findings roll up into.
enum class IssueCategory {
  kComponentOverlapping,
  kContentOverlapping,
  kComponentCropping,
  kContentCropping,
  kComponentMissing,
};

const char* to_string(FindingKind kind);
const char* to_string(IssueCategory category);

// Total mapping from finding kind to category. Overlap findings split on
// whether both involved views carry text.
IssueCategory category_for(FindingKind kind, bool both_text);

struct Finding {
  FindingKind kind = FindingKind::kVisibilityInconsistency;
  IssueCategory category = IssueCategory::kComponentMissing;
  std::vector<std::string> default_uids;  // views in the default-scale tree
  std::vector<std::string> scaled_uids;   // views in the larger-scale tree
  nlohmann::json evidence = nlohmann::json::object();
};

nlohmann::json to_json(const Finding& finding);

}  // namespace scalecheck

#endif  // SCALECHECK_FINDING_HPP_
