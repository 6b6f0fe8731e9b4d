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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "scalecheck/error.hpp"
#include "scalecheck/snapshot.hpp"
#include "scalecheck/snapshot_io.hpp"
#include "support/builders.hpp"

namespace scalecheck {
namespace {

using testing::fresh_dir;
using testing::scene_view;
using testing::thrown_kind;

Snapshot sample_snapshot() {
  ResolvedView root = scene_view("root", {0, 0, 60, 40}, {250, 250, 250, 255});
  ResolvedView panel =
      scene_view("panel", {5, 5, 50, 30}, {220, 230, 240, 255}, {{4, 4, 10, 6}});
  ResolvedView label =
      scene_view("label", {10, 10, 20, 10}, {255, 255, 255, 255}, {{2, 2, 6, 4}});
  label.text = "hi";
  label.text_size = 8.0;
  panel.children.push_back(label);
  root.children.push_back(panel);
  return testing::render_scene(std::move(root), {0, 0, 60, 40});
}

std::string file_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

TEST_SUITE("snapshot") {

TEST_CASE("preorder lists parents before children in stored order") {
  Snapshot s = sample_snapshot();
  auto nodes = preorder(s.root);
  REQUIRE(nodes.size() == 3);
  CHECK(nodes[0]->uid == "root");
  CHECK(nodes[1]->uid == "panel");
  CHECK(nodes[2]->uid == "label");
}

TEST_CASE("draw order sorts by z with stored position as tiebreak") {
  ViewNode parent;
  parent.uid = "p";
  ViewNode a, b, c;
  a.uid = "a";
  a.z_order = 1;
  b.uid = "b";
  b.z_order = 0;
  c.uid = "c";
  c.z_order = 0;
  parent.children = {a, b, c};
  auto order = draw_order(parent);
  REQUIRE(order.size() == 3);
  CHECK(order[0]->uid == "b");
  CHECK(order[1]->uid == "c");
  CHECK(order[2]->uid == "a");
}

TEST_CASE("tree index resolves nodes and parents") {
  Snapshot s = sample_snapshot();
  TreeIndex index(s);
  CHECK(index.find("label") != nullptr);
  CHECK(index.find("nope") == nullptr);
  CHECK(index.parent_of("root") == nullptr);
  REQUIRE(index.parent_of("label") != nullptr);
  CHECK(index.parent_of("label")->uid == "panel");
  CHECK(index.nodes().size() == 3);
}

TEST_CASE("validation rejects structural defects") {
  Snapshot s = sample_snapshot();
  CHECK(thrown_kind([&] { validate_snapshot(s); }) == std::nullopt);

  Snapshot dup = s;
  dup.root.children[0].children[0].uid = "root";
  CHECK(thrown_kind([&] { validate_snapshot(dup); }) ==
        ErrorKind::kSchemaViolation);

  Snapshot untyped = s;
  untyped.root.children[0].children[0].text_size.reset();
  CHECK(thrown_kind([&] { validate_snapshot(untyped); }) ==
        ErrorKind::kSchemaViolation);

  Snapshot shrunk = s;
  shrunk.root.children[0].bounds.w -= 1;
  CHECK(thrown_kind([&] { validate_snapshot(shrunk); }) ==
        ErrorKind::kDimensionMismatch);

  Snapshot imageless = s;
  imageless.images.erase(imageless.root.children[0].image_ref);
  CHECK(thrown_kind([&] { validate_snapshot(imageless); }) ==
        ErrorKind::kMissingFile);

  Snapshot odd_scale = s;
  odd_scale.scale.label = "XL";
  CHECK(thrown_kind([&] { validate_snapshot(odd_scale); }) ==
        ErrorKind::kSchemaViolation);
}

TEST_CASE("write and load round-trip the full snapshot") {
  Snapshot s = sample_snapshot();
  auto dir = fresh_dir("snapshot_roundtrip");
  write_snapshot(s, dir / "snap");
  Snapshot loaded = load_snapshot(dir / "snap");

  CHECK(loaded.scale == s.scale);
  CHECK(loaded.screen == s.screen);
  auto want = preorder(s.root);
  auto got = preorder(loaded.root);
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i]->uid == want[i]->uid);
    CHECK(got[i]->mapping_id == want[i]->mapping_id);
    CHECK(got[i]->class_name == want[i]->class_name);
    CHECK(got[i]->bounds == want[i]->bounds);
    CHECK(got[i]->z_order == want[i]->z_order);
    CHECK(got[i]->text == want[i]->text);
    CHECK(got[i]->text_size == want[i]->text_size);
    CHECK(got[i]->ellipsized == want[i]->ellipsized);
    CHECK(got[i]->scroll_hint == want[i]->scroll_hint);
    CHECK(loaded.image_of(*got[i]) == s.image_of(*want[i]));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("serialized bytes are deterministic") {
  Snapshot s = sample_snapshot();
  auto dir = fresh_dir("snapshot_bytes");
  write_snapshot(s, dir / "one");
  write_snapshot(s, dir / "two");
  CHECK(file_bytes(dir / "one" / "tree.json") ==
        file_bytes(dir / "two" / "tree.json"));
  for (const auto& [ref, image] : s.images) {
    CHECK(file_bytes(dir / "one" / ref) == file_bytes(dir / "two" / ref));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("loading a missing directory fails cleanly") {
  CHECK(thrown_kind([] { load_snapshot("/nonexistent/snapdir"); }) ==
        ErrorKind::kMissingFile);
}

}  // TEST_SUITE

}  // namespace
}  // namespace scalecheck
