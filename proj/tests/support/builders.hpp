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
//
// Small constructors for hand-built scenes and trees used across the tests.

#ifndef SCALECHECK_TESTS_SUPPORT_BUILDERS_HPP_
#define SCALECHECK_TESTS_SUPPORT_BUILDERS_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scalecheck/error.hpp"
#include "scalecheck/fixture.hpp"
#include "scalecheck/image.hpp"
#include "scalecheck/snapshot.hpp"

namespace scalecheck::testing {

// Runs fn and reports what Error kind it threw, if any.
template <typename Fn>
std::optional<ErrorKind> thrown_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline void draw_rect(RgbaImage& img, const Rect& r, std::uint8_t red,
                      std::uint8_t green, std::uint8_t blue,
                      std::uint8_t alpha = 255) {
  for (int y = r.y; y < r.bottom(); ++y) {
    for (int x = r.x; x < r.right(); ++x) {
      img.set_pixel(x, y, red, green, blue, alpha);
    }
  }
}

// Leaf of a hand-built scene; callers adjust fields afterwards as needed.
inline ResolvedView scene_view(std::string uid, Rect bounds,
                               std::array<std::uint8_t, 4> bg,
                               std::vector<Rect> ink_rects = {},
                               std::array<std::uint8_t, 4> ink = {0, 0, 0,
                                                                  255}) {
  ResolvedView v;
  v.uid = std::move(uid);
  v.mapping_id = v.uid;
  v.class_name = "View";
  v.bounds = bounds;
  v.bg = bg;
  v.ink = ink;
  v.ink_rects = std::move(ink_rects);
  return v;
}

inline Snapshot render_scene(ResolvedView root, Rect screen,
                             ScaleSetting scale = {"DD", 1.0, 1.0}) {
  ResolvedTree tree;
  tree.scale = std::move(scale);
  tree.screen = screen;
  tree.root = std::move(root);
  return render_snapshot(tree).snapshot;
}

// Bare tree node for pairing tests; geometry and images are irrelevant
// there, so only identity fields are set.
inline ViewNode id_node(std::string uid, std::optional<std::string> mapping_id,
                        std::optional<std::string> text = std::nullopt,
                        std::vector<ViewNode> children = {}) {
  ViewNode n;
  n.uid = std::move(uid);
  n.mapping_id = std::move(mapping_id);
  n.class_name = "View";
  n.text = std::move(text);
  if (n.text) n.text_size = 10.0;
  n.children = std::move(children);
  return n;
}

inline Snapshot id_snapshot(ViewNode root) {
  Snapshot s;
  s.scale = {"DD", 1.0, 1.0};
  s.screen = {0, 0, 100, 100};
  s.root = std::move(root);
  return s;
}

// Unique scratch directory under the build tree's temp area.
inline std::filesystem::path fresh_dir(const std::string& tag) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("scalecheck_test_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace scalecheck::testing

#endif  // SCALECHECK_TESTS_SUPPORT_BUILDERS_HPP_
