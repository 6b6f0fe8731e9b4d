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

#ifndef SCALECHECK_INTERVIEW_HPP_
#define SCALECHECK_INTERVIEW_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scalecheck/binary_matrix.hpp"
#include "scalecheck/finding.hpp"
#include "scalecheck/pairing.hpp"
#include "scalecheck/snapshot.hpp"

namespace scalecheck {

// Class-based exemptions. Matching is case-sensitive substring search on the
// className, so "NestedScrollView" trips the "ScrollView" rule.
struct ExemptionConfig {
  std::vector<std::string> scrollable_classes{"ScrollView", "RecyclerView",
                                              "ListView", "ViewPager"};
  std::vector<std::string> collapsible_classes{"DrawerLayout"};

  bool is_scrollable_class(const std::string& class_name) const;
  bool is_collapsible_class(const std::string& class_name) const;
};

// Per-tree detection state. Visible matrices start as the alpha mask of each
// visible view's image and only ever lose cells: sibling overlap resolution
// takes contested pixels from the earlier-drawn view, and crop resolution
// drops cells outside the parent.
struct InterViewState {
  std::set<std::string> visible;
  std::map<std::string, BinaryMatrix> matrices;
  // Key is the unordered sibling pair (lexicographically sorted); value is
  // the contested pixel count.
  std::map<std::pair<std::string, std::string>, std::int64_t> overlaps;
  std::map<std::string, std::int64_t> crops;  // child uid -> lost pixel count
  std::vector<std::string> diagnostics;
};

// A child is visible when its slice (clipped to the parent) is found in the
// parent's composite at exactly the expected offset. Children of invisible
// parents are invisible; a zero-variance slice is deemed visible.
std::set<std::string> detect_visibility(const Snapshot& snapshot,
                                        std::vector<std::string>* diagnostics = nullptr);

// Pairwise sibling overlap detection over visible children, in draw order.
InterViewState detect_overlaps(const Snapshot& snapshot,
                               std::set<std::string> visible,
                               const ExemptionConfig& config);

// Parent-bounds cropping detection, top-down, over the overlap-adjusted
// matrices. Children of scrollable parents are exempt.
void detect_crops(const Snapshot& snapshot, InterViewState& state,
                  const ExemptionConfig& config);

// detect_visibility + detect_overlaps + detect_crops.
InterViewState analyze_tree(const Snapshot& snapshot, const ExemptionConfig& config);

// Cross-tree comparison: visibility flips on paired views, default-tree
// views with no counterpart, and overlap/crop records present in exactly
// one tree.
std::vector<Finding> compare_inter(const InterViewState& state_a,
                                   const InterViewState& state_b,
                                   const ViewPairing& pairing,
                                   const Snapshot& snap_a,
                                   const Snapshot& snap_b);

}  // namespace scalecheck

#endif  // SCALECHECK_INTERVIEW_HPP_
