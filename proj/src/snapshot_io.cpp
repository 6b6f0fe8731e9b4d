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

#include "scalecheck/snapshot_io.hpp"

#include <fstream>

#include "json.hpp"
#include "scalecheck/error.hpp"
#include "scalecheck/png_io.hpp"

namespace scalecheck {

namespace {

using nlohmann::json;

Rect parse_rect(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 4) {
    throw Error(ErrorKind::kSchemaViolation,
                std::string(what) + " must be [x, y, w, h]");
  }
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw Error(ErrorKind::kSchemaViolation,
                  std::string(what) + " entries must be integers");
    }
  }
  return Rect{j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

json rect_to_json(const Rect& r) { return json::array({r.x, r.y, r.w, r.h}); }

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorKind::kSchemaViolation, std::string("missing field ") + key);
  }
  return *it;
}

ViewNode parse_node(const json& j) {
  if (!j.is_object()) {
    throw Error(ErrorKind::kSchemaViolation, "node must be an object");
  }
  ViewNode node;
  node.uid = require(j, "uid").get<std::string>();
  if (j.contains("mappingId") && !j["mappingId"].is_null()) {
    node.mapping_id = j["mappingId"].get<std::string>();
  }
  node.class_name = require(j, "className").get<std::string>();
  node.bounds = parse_rect(require(j, "bounds"), "bounds");
  node.z_order = require(j, "zOrder").get<int>();
  if (j.contains("text") && !j["text"].is_null()) {
    node.text = j["text"].get<std::string>();
  }
  if (j.contains("textSize") && !j["textSize"].is_null()) {
    node.text_size = j["textSize"].get<double>();
  }
  node.ellipsized = require(j, "ellipsized").get<bool>();
  if (j.contains("scrollHint") && !j["scrollHint"].is_null()) {
    node.scroll_hint = j["scrollHint"].get<bool>();
  }
  node.image_ref = require(j, "image").get<std::string>();
  for (const json& c : require(j, "children")) {
    node.children.push_back(parse_node(c));
  }
  return node;
}

json node_to_json(const ViewNode& node) {
  json j;
  j["uid"] = node.uid;
  if (node.mapping_id) j["mappingId"] = *node.mapping_id;
  j["className"] = node.class_name;
  j["bounds"] = rect_to_json(node.bounds);
  j["zOrder"] = node.z_order;
  if (node.text) j["text"] = *node.text;
  if (node.text_size) j["textSize"] = *node.text_size;
  j["ellipsized"] = node.ellipsized;
  if (node.scroll_hint) j["scrollHint"] = *node.scroll_hint;
  j["image"] = node.image_ref;
  json children = json::array();
  for (const ViewNode& c : node.children) children.push_back(node_to_json(c));
  j["children"] = std::move(children);
  return j;
}

}  // namespace

Snapshot load_snapshot(const std::filesystem::path& dir) {
  std::filesystem::path tree_path = dir / "tree.json";
  std::ifstream in(tree_path);
  if (!in) {
    throw Error(ErrorKind::kMissingFile, "cannot open " + tree_path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kSchemaViolation,
                tree_path.string() + ": " + e.what());
  }

  Snapshot snap;
  try {
    const json& scale = require(j, "scale");
    snap.scale.label = require(scale, "label").get<std::string>();
    snap.scale.display_scale = require(scale, "displayScale").get<double>();
    snap.scale.font_scale = require(scale, "fontScale").get<double>();
    snap.screen = parse_rect(require(j, "screen"), "screen");
    snap.root = parse_node(require(j, "root"));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kSchemaViolation,
                tree_path.string() + ": " + e.what());
  }

  for (const ViewNode* node : preorder(snap.root)) {
    if (snap.images.count(node->image_ref)) continue;
    snap.images.emplace(node->image_ref, read_png(dir / node->image_ref));
  }
  validate_snapshot(snap);
  return snap;
}

void write_snapshot(const Snapshot& snapshot, const std::filesystem::path& dir) {
  validate_snapshot(snapshot);
  std::filesystem::create_directories(dir);

  json j;
  j["scale"] = {{"label", snapshot.scale.label},
                {"displayScale", snapshot.scale.display_scale},
                {"fontScale", snapshot.scale.font_scale}};
  j["screen"] = rect_to_json(snapshot.screen);
  j["root"] = node_to_json(snapshot.root);

  std::ofstream out(dir / "tree.json");
  if (!out) {
    throw Error(ErrorKind::kMissingFile,
                "cannot create " + (dir / "tree.json").string());
  }
  out << j.dump(2) << '\n';

  for (const auto& [ref, image] : snapshot.images) {
    std::filesystem::path path = dir / ref;
    std::filesystem::create_directories(path.parent_path());
    write_png(path, image);
  }
}

}  // namespace scalecheck
