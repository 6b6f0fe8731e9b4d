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

#ifndef SCALECHECK_CONFIG_HPP_
#define SCALECHECK_CONFIG_HPP_

#include <filesystem>

#include "scalecheck/pipeline.hpp"

namespace scalecheck {

// Reads analysis settings from a .json file or a flat .toml file (top-level
// scalar and string-array keys only). Recognized keys:
//   scrollable_classes, collapsible_classes   (arrays of strings)
//   area_tolerance, ssim_threshold            (numbers)
//   icon_match_slack                          (integer)
// Unknown keys are rejected to surface typos.
AnalysisConfig load_config(const std::filesystem::path& path);

}  // namespace scalecheck

#endif  // SCALECHECK_CONFIG_HPP_
