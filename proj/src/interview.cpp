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

#include "scalecheck/interview.hpp"

#include <algorithm>

#include "scalecheck/error.hpp"
#include "scalecheck/match.hpp"

namespace scalecheck {

namespace {

bool matches_any(const std::vector<std::string>& needles, const std::string& hay) {
  for (const std::string& n : needles) {
    if (!n.empty() && hay.find(n) != std::string::npos) return true;
  }
  return false;
}

std::pair<std::string, std::string> unordered_pair(const std::string& a,
                                                   const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

bool ExemptionConfig::is_scrollable_class(const std::string& class_name) const {
  return matches_any(scrollable_classes, class_name);
}

bool ExemptionConfig::is_collapsible_class(const std::string& class_name) const {
  return matches_any(collapsible_classes, class_name);
}

std::set<std::string> detect_visibility(const Snapshot& snapshot,
                                        std::vector<std::string>* diagnostics) {
  TreeIndex index(snapshot);
  std::set<std::string> visible;
  visible.insert(snapshot.root.uid);

  for (const ViewNode* node : index.nodes()) {
    const ViewNode* parent = index.parent_of(node->uid);
    if (parent == nullptr) continue;           // root
    if (!visible.count(parent->uid)) continue;  // invisible subtree

    Rect inter = intersect(node->bounds, parent->bounds);
    if (inter.empty()) continue;  // fully outside its parent

    // The slice of the child that falls inside the parent must show up in
    // the parent's composite exactly where the tree says it is.
    Rect local_child{inter.x - node->bounds.x, inter.y - node->bounds.y,
                     inter.w, inter.h};
    Rect expected{inter.x - parent->bounds.x, inter.y - parent->bounds.y,
                  inter.w, inter.h};
    try {
      RgbaImage templ = crop(snapshot.image_of(*node), local_child);
      BestMatch match = template_match_best(snapshot.image_of(*parent), templ,
                                            expected.x, expected.y);
      Rect found{match.x, match.y, inter.w, inter.h};
      if (iou(found, expected) == 1.0) visible.insert(node->uid);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kDegenerateTemplate) {
        // Uniform content cannot be located reliably; give it the benefit
        // of the doubt.
        visible.insert(node->uid);
      } else if (diagnostics != nullptr) {
        diagnostics->push_back("visibility check failed for " + node->uid +
                               ": " + e.what());
      }
    }
  }
  return visible;
}

InterViewState detect_overlaps(const Snapshot& snapshot,
                               std::set<std::string> visible,
                               const ExemptionConfig& config) {
  TreeIndex index(snapshot);
  InterViewState state;
  state.visible = std::move(visible);

  for (const ViewNode* node : index.nodes()) {
    if (state.visible.count(node->uid)) {
      state.matrices.emplace(node->uid, visible_matrix(snapshot.image_of(*node)));
    }
  }

  for (const ViewNode* parent : index.nodes()) {
    if (!state.visible.count(parent->uid)) continue;
    std::vector<const ViewNode*> kids;
    for (const ViewNode* child : draw_order(*parent)) {
      if (state.visible.count(child->uid)) kids.push_back(child);
    }
    // Each later-drawn child is checked against every earlier-drawn one;
    // the earlier one surrenders the contested pixels, so updates cascade
    // along the draw order.
    for (std::size_t j = 1; j < kids.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const ViewNode* earlier = kids[i];
        const ViewNode* later = kids[j];
        if (config.is_collapsible_class(earlier->class_name) ||
            config.is_collapsible_class(later->class_name)) {
          continue;
        }
        Rect inter = intersect(earlier->bounds, later->bounds);
        if (inter.empty()) continue;

        Rect local_e{inter.x - earlier->bounds.x, inter.y - earlier->bounds.y,
                     inter.w, inter.h};
        Rect local_l{inter.x - later->bounds.x, inter.y - later->bounds.y,
                     inter.w, inter.h};
        BinaryMatrix& me = state.matrices.at(earlier->uid);
        BinaryMatrix contested = bit_and(slice(me, local_e),
                                         slice(state.matrices.at(later->uid), local_l));
        std::int64_t area = contested.area();
        if (area == 0) continue;

        state.overlaps[unordered_pair(earlier->uid, later->uid)] = area;
        clear_where(me, local_e, contested);
      }
    }
  }
  return state;
}

void detect_crops(const Snapshot& snapshot, InterViewState& state,
                  const ExemptionConfig& config) {
  TreeIndex index(snapshot);

  for (const ViewNode* node : index.nodes()) {
    const ViewNode* parent = index.parent_of(node->uid);
    if (parent == nullptr) continue;
    if (!state.visible.count(node->uid)) continue;
    // A scrollable parent can bring clipped content into view, so its
    // children are not reported as cropped.
    if (config.is_scrollable_class(parent->class_name)) continue;
    if (parent->scroll_hint.value_or(false)) continue;

    BinaryMatrix& child_m = state.matrices.at(node->uid);
    std::int64_t before = child_m.area();

    Rect inter = intersect(node->bounds, parent->bounds);
    BinaryMatrix next(child_m.width, child_m.height);
    std::int64_t after = 0;
    if (!inter.empty()) {
      Rect local_child{inter.x - node->bounds.x, inter.y - node->bounds.y,
                       inter.w, inter.h};
      Rect local_parent{inter.x - parent->bounds.x, inter.y - parent->bounds.y,
                        inter.w, inter.h};
      // Cells survive only where the parent still holds the region; pixels
      // the parent lost (to its own siblings or its own crop) cannot show
      // the child.
      BinaryMatrix kept = bit_and(slice(child_m, local_child),
                                  slice(state.matrices.at(parent->uid), local_parent));
      after = kept.area();
      paste(next, local_child, kept);
    }
    child_m = std::move(next);
    if (after < before) {
      state.crops[node->uid] = before - after;
    }
  }
}

InterViewState analyze_tree(const Snapshot& snapshot, const ExemptionConfig& config) {
  std::vector<std::string> diagnostics;
  std::set<std::string> visible = detect_visibility(snapshot, &diagnostics);
  InterViewState state = detect_overlaps(snapshot, std::move(visible), config);
  detect_crops(snapshot, state, config);
  state.diagnostics = std::move(diagnostics);
  return state;
}

namespace {

bool is_text_view(const TreeIndex& index, const std::string& uid) {
  const ViewNode* node = index.find(uid);
  return node != nullptr && node->has_text();
}

}  // namespace

std::vector<Finding> compare_inter(const InterViewState& state_a,
                                   const InterViewState& state_b,
                                   const ViewPairing& pairing,
                                   const Snapshot& snap_a,
                                   const Snapshot& snap_b) {
  TreeIndex index_a(snap_a);
  TreeIndex index_b(snap_b);
  std::map<std::string, std::string> fwd = pairing.a_to_b();
  std::map<std::string, std::string> rev = pairing.b_to_a();
  std::vector<Finding> findings;

  for (const auto& [ua, ub] : pairing.pairs) {
    bool va = state_a.visible.count(ua) > 0;
    bool vb = state_b.visible.count(ub) > 0;
    if (va == vb) continue;
    Finding f;
    f.kind = FindingKind::kVisibilityInconsistency;
    f.category = category_for(f.kind, false);
    f.default_uids = {ua};
    f.scaled_uids = {ub};
    f.evidence["visibleDefault"] = va;
    f.evidence["visibleScaled"] = vb;
    findings.push_back(std::move(f));
  }

  for (const std::string& ua : pairing.unmatched_a) {
    if (!state_a.visible.count(ua)) continue;
    Finding f;
    f.kind = FindingKind::kMissingCounterpart;
    f.category = category_for(f.kind, false);
    f.default_uids = {ua};
    auto reason = pairing.reason_a.find(ua);
    f.evidence["reason"] = reason != pairing.reason_a.end() &&
                                   reason->second == UnmatchedReason::kDuplicateKey
                               ? "duplicate key"
                               : "no counterpart key";
    findings.push_back(std::move(f));
  }

  auto map_pair = [](const std::map<std::string, std::string>& m,
                     const std::pair<std::string, std::string>& key)
      -> std::optional<std::pair<std::string, std::string>> {
    auto i = m.find(key.first);
    auto j = m.find(key.second);
    if (i == m.end() || j == m.end()) return std::nullopt;
    return i->second < j->second ? std::make_pair(i->second, j->second)
                                 : std::make_pair(j->second, i->second);
  };

  for (const auto& [pair_a, area] : state_a.overlaps) {
    auto pair_b = map_pair(fwd, pair_a);
    if (!pair_b) continue;  // unpaired endpoint, reported elsewhere
    if (state_b.overlaps.count(*pair_b)) continue;
    bool both_text = is_text_view(index_a, pair_a.first) &&
                     is_text_view(index_a, pair_a.second);
    Finding f;
    f.kind = FindingKind::kOverlapInconsistency;
    f.category = category_for(f.kind, both_text);
    f.default_uids = {pair_a.first, pair_a.second};
    f.scaled_uids = {pair_b->first, pair_b->second};
    f.evidence["overlapAreaDefault"] = area;
    f.evidence["overlapAreaScaled"] = 0;
    findings.push_back(std::move(f));
  }
  for (const auto& [pair_b, area] : state_b.overlaps) {
    auto pair_a = map_pair(rev, pair_b);
    if (!pair_a) continue;
    if (state_a.overlaps.count(*pair_a)) continue;
    bool both_text = is_text_view(index_b, pair_b.first) &&
                     is_text_view(index_b, pair_b.second);
    Finding f;
    f.kind = FindingKind::kOverlapInconsistency;
    f.category = category_for(f.kind, both_text);
    f.default_uids = {pair_a->first, pair_a->second};
    f.scaled_uids = {pair_b.first, pair_b.second};
    f.evidence["overlapAreaDefault"] = 0;
    f.evidence["overlapAreaScaled"] = area;
    findings.push_back(std::move(f));
  }

  for (const auto& [ua, lost] : state_a.crops) {
    auto it = fwd.find(ua);
    if (it == fwd.end()) continue;
    if (state_b.crops.count(it->second)) continue;
    Finding f;
    f.kind = FindingKind::kCropInconsistency;
    f.category = category_for(f.kind, false);
    f.default_uids = {ua};
    f.scaled_uids = {it->second};
    f.evidence["croppedAreaDefault"] = lost;
    f.evidence["croppedAreaScaled"] = 0;
    findings.push_back(std::move(f));
  }
  for (const auto& [ub, lost] : state_b.crops) {
    auto it = rev.find(ub);
    if (it == rev.end()) continue;
    if (state_a.crops.count(it->second)) continue;
    Finding f;
    f.kind = FindingKind::kCropInconsistency;
    f.category = category_for(f.kind, false);
    f.default_uids = {it->second};
    f.scaled_uids = {ub};
    f.evidence["croppedAreaDefault"] = 0;
    f.evidence["croppedAreaScaled"] = lost;
    findings.push_back(std::move(f));
  }

  return findings;
}

}  // namespace scalecheck
