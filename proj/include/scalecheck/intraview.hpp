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

#ifndef SCALECHECK_INTRAVIEW_HPP_
#define SCALECHECK_INTRAVIEW_HPP_

#include <optional>

#include "scalecheck/finding.hpp"
#include "scalecheck/image.hpp"
#include "scalecheck/snapshot.hpp"

namespace scalecheck {

struct IntraCheckConfig {
  // Allowed relative deviation of the foreground area ratio from gamma^2.
  double area_tolerance = 0.2;
  double ssim_threshold = 0.9;
  // Max per-dimension and area difference for two components to count as
  // the same unscaled icon.
  int icon_match_slack = 1;
};

// Text views scale faithfully when the ink area grows with the square of the
// text-size ratio. Components unchanged between the two images (unscaled
// icons) are eliminated before comparing. Ellipsized views are skipped.
// Throws MissingTextSize when either view lacks a text size.
std::optional<Finding> check_text_pair(const ViewNode& a, const RgbaImage& image_a,
                                       const ViewNode& b, const RgbaImage& image_b,
                                       const IntraCheckConfig& config);

// Non-text views are compared by foreground component count; on a count
// change the images are brought to a common size and scored with ssim.
std::optional<Finding> check_nontext_pair(const ViewNode& a, const RgbaImage& image_a,
                                          const ViewNode& b, const RgbaImage& image_b,
                                          const IntraCheckConfig& config);

// Dispatch on text presence; a pair where only one side has text is an
// anomaly by itself.
std::optional<Finding> check_pair(const ViewNode& a, const RgbaImage& image_a,
                                  const ViewNode& b, const RgbaImage& image_b,
                                  const IntraCheckConfig& config);

}  // namespace scalecheck

#endif  // SCALECHECK_INTRAVIEW_HPP_
