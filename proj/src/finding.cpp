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

#include "scalecheck/finding.hpp"

namespace scalecheck {

const char* to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::kVisibilityInconsistency: return "VisibilityInconsistency";
    case FindingKind::kMissingCounterpart: return "MissingCounterpart";
    case FindingKind::kOverlapInconsistency: return "OverlapInconsistency";
    case FindingKind::kCropInconsistency: return "CropInconsistency";
    case FindingKind::kTextScaleAnomaly: return "TextScaleAnomaly";
    case FindingKind::kNonTextAnomaly: return "NonTextAnomaly";
  }
  return "UnknownKind";
}

const char* to_string(IssueCategory category) {
  switch (category) {
    case IssueCategory::kComponentOverlapping: return "ComponentOverlapping";
    case IssueCategory::kContentOverlapping: return "ContentOverlapping";
    case IssueCategory::kComponentCropping: return "ComponentCropping";
    case IssueCategory::kContentCropping: return "ContentCropping";
    case IssueCategory::kComponentMissing: return "ComponentMissing";
  }
  return "UnknownCategory";
}

IssueCategory category_for(FindingKind kind, bool both_text) {
  switch (kind) {
    case FindingKind::kOverlapInconsistency:
      return both_text ? IssueCategory::kContentOverlapping
                       : IssueCategory::kComponentOverlapping;
    case FindingKind::kCropInconsistency:
      return IssueCategory::kComponentCropping;
    case FindingKind::kTextScaleAnomaly:
    case FindingKind::kNonTextAnomaly:
      return IssueCategory::kContentCropping;
    case FindingKind::kVisibilityInconsistency:
    case FindingKind::kMissingCounterpart:
      return IssueCategory::kComponentMissing;
  }
  return IssueCategory::kComponentMissing;
}

nlohmann::json to_json(const Finding& finding) {
  nlohmann::json j;
  j["kind"] = to_string(finding.kind);
  j["category"] = to_string(finding.category);
  j["views"] = {{"default", finding.default_uids},
                {"scaled", finding.scaled_uids}};
  j["evidence"] = finding.evidence;
  return j;
}

}  // namespace scalecheck
