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

#ifndef SCALECHECK_FIXTURE_HPP_
#define SCALECHECK_FIXTURE_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scalecheck/evaluate.hpp"
#include "scalecheck/finding.hpp"
#include "scalecheck/snapshot.hpp"

namespace scalecheck {

// Shape knobs for the synthetic page builder. Leaves never hang directly off
// the root: root children are always containers, which keeps every leaf's
// search window (its parent image) small and its pattern unique within it.
struct TreeShape {
  int depth = 3;          // container levels below the root
  int fan_out = 4;        // max children per container
  double text_ratio = 0.5;        // leaf probability of being a text view
  double scrollable_ratio = 0.1;  // container probability of a scrollable class
  double list_ratio = 0.2;        // container probability of repeated mapping ids
};

// One defect planted into the scaled snapshot. The victim is the
// target_ordinal-th eligible node in pre-order, or a seeded pick when
// negative.
struct BugInjection {
  IssueCategory kind = IssueCategory::kComponentOverlapping;
  int overlap_px = 4;   // rows of bounds intrusion between siblings
  int crop_px = 8;      // rows pushed outside the parent
  int glyph_drop = 1;   // glyph blocks removed from frozen text
  int target_ordinal = -1;
};

struct FixtureSpec {
  std::uint64_t seed = 1;
  Rect screen{0, 0, 360, 640};  // density-unit layout space
  TreeShape shape;
  ScaleSetting default_scale{"DD", 1.0, 1.0};
  ScaleSetting scaled_scale{"LL", 1.5, 4.0 / 3.0};
  int cases = 1;
  int buggy_cases = 0;      // leading cases stay clean, trailing get defects
  int min_injections = 1;
  int max_injections = 3;
  // When non-empty, every buggy case uses exactly these injections instead
  // of a seeded plan.
  std::vector<BugInjection> injections;
};

// A view realized at one scale setting: concrete pixel geometry plus flat
// paint instructions (background fill, then ink rectangles).
struct ResolvedView {
  std::string uid;
  std::optional<std::string> mapping_id;
  std::string class_name;
  Rect bounds;  // absolute px
  int z_order = 0;
  std::optional<std::string> text;
  std::optional<double> text_size;
  bool ellipsized = false;
  std::optional<bool> scroll_hint;
  std::array<std::uint8_t, 4> bg{255, 255, 255, 255};
  std::array<std::uint8_t, 4> ink{0, 0, 0, 255};
  std::vector<Rect> ink_rects;  // view-local coordinates
  std::vector<ResolvedView> children;
};

struct ResolvedTree {
  ScaleSetting scale;
  Rect screen;  // px
  ResolvedView root;
};

struct RenderResult {
  Snapshot snapshot;
  // Per image_ref, one entry per pixel: pre-order index of the view whose
  // own paint owns the pixel, -1 where nothing was painted, -2 where
  // translucent blending left no single owner.
  std::map<std::string, std::vector<std::int32_t>> provenance;
};

// Paints every view bottom-up (background, ink, then children in draw
// order, clipped to the parent) and assembles a validated snapshot.
// Throws GeometryOverflow when a canvas dimension is unreasonable.
RenderResult render_snapshot(const ResolvedTree& tree);

struct GeneratedCase {
  std::string name;
  Snapshot default_snap;
  Snapshot scaled_snap;
  PageLabel label;
  // Defect families actually applied, in application order.
  std::vector<IssueCategory> injected_kinds;
};

// Deterministically builds case number case_index of the recipe: an abstract
// page laid out so both scale settings fit it, realized at both settings,
// with the case's injections applied to the scaled side only.
// Throws InjectionInfeasible when a requested defect has no victim.
GeneratedCase generate_case(const FixtureSpec& spec, int case_index);

// Renders every case under out_dir (case-NNN/default, case-NNN/scaled) and
// writes labels.json. Reruns produce byte-identical output.
void write_corpus(const FixtureSpec& spec, const std::filesystem::path& out_dir);

FixtureSpec load_fixture_spec(const std::filesystem::path& path);

}  // namespace scalecheck

#endif  // SCALECHECK_FIXTURE_HPP_
