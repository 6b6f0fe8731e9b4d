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

#include "scalecheck/snapshot.hpp"

#include <algorithm>
#include <set>

#include "scalecheck/error.hpp"

namespace scalecheck {

namespace {

void collect_preorder(const ViewNode& node, std::vector<const ViewNode*>* out) {
  out->push_back(&node);
  for (const ViewNode& child : node.children) collect_preorder(child, out);
}

}  // namespace

std::vector<const ViewNode*> preorder(const ViewNode& root) {
  std::vector<const ViewNode*> out;
  collect_preorder(root, &out);
  return out;
}

std::vector<const ViewNode*> draw_order(const ViewNode& parent) {
  std::vector<const ViewNode*> order;
  order.reserve(parent.children.size());
  for (const ViewNode& child : parent.children) order.push_back(&child);
  // Stable sort: equal z keeps the stored (pre-order) sequence.
  std::stable_sort(order.begin(), order.end(),
                   [](const ViewNode* a, const ViewNode* b) {
                     return a->z_order < b->z_order;
                   });
  return order;
}

void validate_snapshot(const Snapshot& snapshot) {
  const ScaleSetting& s = snapshot.scale;
  if (s.label != "DD" && s.label != "LD" && s.label != "LL") {
    throw Error(ErrorKind::kSchemaViolation, "unknown scale label " + s.label);
  }
  if (s.display_scale < 1.0 || s.font_scale < 1.0) {
    throw Error(ErrorKind::kSchemaViolation, "scale factors must be >= 1");
  }
  if (s.label == "DD" && (s.display_scale != 1.0 || s.font_scale != 1.0)) {
    throw Error(ErrorKind::kSchemaViolation, "DD requires both factors == 1");
  }

  std::set<std::string> uids;
  for (const ViewNode* node : preorder(snapshot.root)) {
    if (node->uid.empty()) {
      throw Error(ErrorKind::kSchemaViolation, "node with empty uid");
    }
    if (!uids.insert(node->uid).second) {
      throw Error(ErrorKind::kSchemaViolation, "duplicate uid " + node->uid);
    }
    if (node->bounds.w < 0 || node->bounds.h < 0) {
      throw Error(ErrorKind::kSchemaViolation,
                  "negative bounds on " + node->uid);
    }
    if (node->has_text()) {
      if (!node->text_size.has_value()) {
        throw Error(ErrorKind::kSchemaViolation,
                    "text without textSize on " + node->uid);
      }
      if (*node->text_size <= 0.0) {
        throw Error(ErrorKind::kSchemaViolation,
                    "non-positive textSize on " + node->uid);
      }
    }
    auto it = snapshot.images.find(node->image_ref);
    if (it == snapshot.images.end()) {
      throw Error(ErrorKind::kMissingFile,
                  "missing image " + node->image_ref + " for " + node->uid);
    }
    if (it->second.width != node->bounds.w || it->second.height != node->bounds.h) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "image size does not match bounds for " + node->uid);
    }
  }
}

TreeIndex::TreeIndex(const Snapshot& snapshot) {
  nodes_ = preorder(snapshot.root);
  for (const ViewNode* node : nodes_) {
    by_uid_.emplace(node->uid, node);
    for (const ViewNode& child : node->children) {
      parent_.emplace(child.uid, node);
    }
  }
}

const ViewNode* TreeIndex::find(const std::string& uid) const {
  auto it = by_uid_.find(uid);
  return it == by_uid_.end() ? nullptr : it->second;
}

const ViewNode* TreeIndex::parent_of(const std::string& uid) const {
  auto it = parent_.find(uid);
  return it == parent_.end() ? nullptr : it->second;
}

}  // namespace scalecheck
