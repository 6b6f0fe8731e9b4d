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

#ifndef SCALECHECK_SNAPSHOT_HPP_
#define SCALECHECK_SNAPSHOT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scalecheck/geometry.hpp"
#include "scalecheck/image.hpp"

namespace scalecheck {

// Scale configuration a snapshot was captured under. "DD" is the default
// display and font scale (both 1.0); "LD" enlarges the display only; "LL"
// enlarges both.
struct ScaleSetting {
  std::string label = "DD";
  double display_scale = 1.0;
  double font_scale = 1.0;

  bool operator==(const ScaleSetting&) const = default;
};

// One node of a captured view tree. The image holds the node's own pixels
// with all of its descendants already composited in.
struct ViewNode {
  std::string uid;
  std::optional<std::string> mapping_id;
  std::string class_name;
  Rect bounds;  // absolute screen coordinates
  int z_order = 0;
  std::optional<std::string> text;
  std::optional<double> text_size;  // effective rendered size, px
  bool ellipsized = false;
  std::optional<bool> scroll_hint;
  std::string image_ref;  // key into Snapshot::images
  std::vector<ViewNode> children;

  bool is_leaf() const { return children.empty(); }
  bool has_text() const { return text.has_value(); }
};

struct Snapshot {
  ScaleSetting scale;
  Rect screen;
  ViewNode root;
  std::map<std::string, RgbaImage> images;

  const RgbaImage& image_of(const ViewNode& node) const {
    return images.at(node.image_ref);
  }
};

// Depth-first, parent before children, children in stored order.
std::vector<const ViewNode*> preorder(const ViewNode& root);

// The parent's children in paint order: ascending z-order, stable, with the
// stored (pre-order) position breaking ties.
std::vector<const ViewNode*> draw_order(const ViewNode& parent);

// Structural checks shared by the loader and the renderer: unique uids,
// image dimensions matching bounds, textSize present and positive wherever
// text is, scale label consistency. Throws on violation.
void validate_snapshot(const Snapshot& snapshot);

// Pointer-based lookups over one snapshot's tree. The snapshot must outlive
// the index and must not be moved while the index is in use.
class TreeIndex {
 public:
  explicit TreeIndex(const Snapshot& snapshot);

  const ViewNode* find(const std::string& uid) const;      // null when absent
  const ViewNode* parent_of(const std::string& uid) const;  // null for root
  const std::vector<const ViewNode*>& nodes() const { return nodes_; }  // pre-order

 private:
  std::vector<const ViewNode*> nodes_;
  std::map<std::string, const ViewNode*> by_uid_;
  std::map<std::string, const ViewNode*> parent_;
};

}  // namespace scalecheck

#endif  // SCALECHECK_SNAPSHOT_HPP_
