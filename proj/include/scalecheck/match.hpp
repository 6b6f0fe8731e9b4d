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

#ifndef SCALECHECK_MATCH_HPP_
#define SCALECHECK_MATCH_HPP_

#include <vector>

#include "scalecheck/image.hpp"

namespace scalecheck {

struct MatchResult {
  int map_width = 0;   // target.width - templ.width + 1
  int map_height = 0;  // target.height - templ.height + 1
  std::vector<double> score_map;  // row-major
  int best_x = 0;
  int best_y = 0;
  double best_score = 0.0;

  double score_at(int x, int y) const {
    return score_map[std::size_t(y) * map_width + x];
  }
};

// Normalized cross-correlation of the mean-subtracted template against every
// window of the target, computed on grayscale. Scores lie in [-1, 1]; a
// zero-variance window scores 0. The best location is the score-map argmax,
// ties resolved to the first position in row-major order.
// Throws TemplateTooLarge when the template exceeds the target in either
// dimension and DegenerateTemplate when the template has zero variance.
MatchResult template_match(const RgbaImage& target, const RgbaImage& templ);

struct BestMatch {
  int x = 0;
  int y = 0;
  double score = 0.0;
};

// Argmax of the same score map without materializing it: identical location,
// score, and tiebreak as template_match's best entry, but windows that
// provably cannot win are skipped via integral-image bounds. A valid hint
// position (the caller's expected location) seeds the pruning floor with its
// exact score. Throws as template_match does.
BestMatch template_match_best(const RgbaImage& target, const RgbaImage& templ,
                              int hint_x = -1, int hint_y = -1);

}  // namespace scalecheck

#endif  // SCALECHECK_MATCH_HPP_
