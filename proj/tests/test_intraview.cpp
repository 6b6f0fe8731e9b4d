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

#include <optional>

#include "doctest.h"
#include "scalecheck/error.hpp"
#include "scalecheck/intraview.hpp"
#include "support/builders.hpp"

namespace scalecheck {
namespace {

using testing::draw_rect;
using testing::thrown_kind;

ViewNode text_node(const std::string& uid, double text_size) {
  ViewNode n;
  n.uid = uid;
  n.class_name = "TextView";
  n.text = "sample";
  n.text_size = text_size;
  return n;
}

ViewNode plain_node(const std::string& uid) {
  ViewNode n;
  n.uid = uid;
  n.class_name = "ImageView";
  return n;
}

// White canvas with black ink rectangles.
RgbaImage canvas(int w, int h, const std::vector<Rect>& ink) {
  RgbaImage img = RgbaImage::filled(w, h, 255, 255, 255, 255);
  for (const Rect& r : ink) draw_rect(img, r, 0, 0, 0);
  return img;
}

TEST_SUITE("intraview") {

TEST_CASE("ink growing with the square of the size ratio is clean") {
  // gamma = 2: 8x5 = 40 px of ink against 16x10 = 160 px, ratio exactly 4.
  RgbaImage small = canvas(40, 20, {{4, 4, 8, 5}});
  RgbaImage large = canvas(80, 40, {{8, 8, 16, 10}});
  auto f = check_text_pair(text_node("a", 10), small, text_node("b", 20), large, {});
  CHECK(!f.has_value());
}

TEST_CASE("frozen ink at a larger claimed size is flagged") {
  // Same 40 px of ink on both sides, reshaped so the unchanged-component
  // matcher cannot pair them away: ratio 1.0 against an expected 4.0.
  RgbaImage small = canvas(40, 20, {{4, 4, 8, 5}});
  RgbaImage same = canvas(80, 40, {{8, 8, 10, 4}});
  auto f = check_text_pair(text_node("a", 10), small, text_node("b", 20), same, {});
  REQUIRE(f.has_value());
  CHECK(f->kind == FindingKind::kTextScaleAnomaly);
  CHECK(f->category == IssueCategory::kContentCropping);
  CHECK(f->evidence.at("actualAreaRatio").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("ink identical in shape and size is treated as an unscaled icon") {
  // Both sides hold one pixel-identical component; the matcher drops the
  // pair, nothing remains to compare, and the views pass.
  RgbaImage small = canvas(40, 20, {{4, 4, 8, 5}});
  RgbaImage same = canvas(80, 40, {{8, 8, 8, 5}});
  auto f = check_text_pair(text_node("a", 10), small, text_node("b", 20), same, {});
  CHECK(!f.has_value());
}

TEST_CASE("ink vanishing entirely is flagged without a ratio") {
  RgbaImage small = canvas(40, 20, {{4, 4, 8, 5}});
  RgbaImage blank = canvas(80, 40, {});
  auto f = check_text_pair(text_node("a", 10), small, text_node("b", 20), blank, {});
  REQUIRE(f.has_value());
  CHECK(f->evidence.at("reason") == "one-sided ink");
}

TEST_CASE("two blank views are clean at any ratio") {
  auto f = check_text_pair(text_node("a", 10), canvas(40, 20, {}),
                           text_node("b", 20), canvas(80, 40, {}), {});
  CHECK(!f.has_value());
}

TEST_CASE("ellipsized text is skipped") {
  RgbaImage small = canvas(40, 20, {{4, 4, 8, 5}});
  RgbaImage same = canvas(80, 40, {{8, 8, 8, 5}});
  ViewNode cut = text_node("b", 20);
  cut.ellipsized = true;
  CHECK(!check_text_pair(text_node("a", 10), small, cut, same, {}).has_value());
}

TEST_CASE("a text view without a size cannot be judged") {
  ViewNode bad = text_node("b", 20);
  bad.text_size.reset();
  RgbaImage img = canvas(40, 20, {{4, 4, 8, 5}});
  CHECK(thrown_kind([&] {
          check_text_pair(text_node("a", 10), img, bad, img, {});
        }) == ErrorKind::kMissingTextSize);
}

TEST_CASE("identical decorations are eliminated before the ratio") {
  // A 20x20 icon on both sides would crush the ratio to 1.27 if counted.
  RgbaImage small = canvas(60, 40, {{4, 4, 8, 5}, {30, 10, 20, 20}});
  RgbaImage large = canvas(120, 80, {{8, 8, 16, 10}, {60, 20, 20, 20}});
  auto f = check_text_pair(text_node("a", 10), small, text_node("b", 20), large, {});
  CHECK(!f.has_value());
  CHECK(f == std::nullopt);
}

TEST_CASE("raising the tolerance never creates a finding") {
  RgbaImage small = canvas(40, 20, {{4, 4, 8, 5}});
  RgbaImage shy = canvas(80, 40, {{8, 8, 16, 7}});  // ratio 2.8 vs expected 4
  bool was_flagged = true;
  for (double tol : {0.05, 0.2, 0.31, 0.5, 1.0}) {
    IntraCheckConfig config;
    config.area_tolerance = tol;
    bool flagged = check_text_pair(text_node("a", 10), small,
                                   text_node("b", 20), shy, config)
                       .has_value();
    if (!was_flagged) CHECK(!flagged);
    was_flagged = flagged;
  }
  CHECK(!was_flagged);  // 2.8 is inside [4*0, 4*2] at tolerance 1.0
}

TEST_CASE("a changed component count is a content anomaly") {
  RgbaImage two = canvas(40, 40, {{4, 4, 8, 8}, {20, 20, 8, 8}});
  RgbaImage three = canvas(60, 60, {{6, 6, 12, 12}, {30, 30, 12, 12}, {6, 40, 8, 8}});
  auto f = check_nontext_pair(plain_node("a"), two, plain_node("b"), three, {});
  REQUIRE(f.has_value());
  CHECK(f->kind == FindingKind::kNonTextAnomaly);
  CHECK(f->category == IssueCategory::kContentCropping);
  CHECK(f->evidence.at("reason") == "component count changed");
}

TEST_CASE("same count but dissimilar structure is flagged through ssim") {
  // Five vertical bars against five horizontal bars.
  std::vector<Rect> vertical, horizontal;
  for (int i = 0; i < 5; ++i) {
    vertical.push_back({4 + i * 8, 4, 4, 32});
    horizontal.push_back({4, 4 + i * 8, 32, 4});
  }
  RgbaImage a = canvas(44, 40, vertical);
  RgbaImage b = canvas(44, 40, horizontal);
  auto f = check_nontext_pair(plain_node("a"), a, plain_node("b"), b, {});
  REQUIRE(f.has_value());
  CHECK(f->evidence.at("reason") == "structural similarity too low");
  CHECK(f->evidence.at("ssim").get<double>() < 0.9);
}

TEST_CASE("a faithfully scaled drawing is clean") {
  RgbaImage a = canvas(40, 40, {{4, 4, 8, 8}, {20, 20, 8, 8}});
  RgbaImage b = canvas(60, 60, {{6, 6, 12, 12}, {30, 30, 12, 12}});
  CHECK(!check_nontext_pair(plain_node("a"), a, plain_node("b"), b, {}).has_value());
}

TEST_CASE("self comparison is always clean") {
  RgbaImage t = canvas(40, 20, {{4, 4, 8, 5}});
  ViewNode tn = text_node("t", 10);
  CHECK(!check_pair(tn, t, tn, t, {}).has_value());
  RgbaImage p = canvas(40, 40, {{4, 4, 8, 8}});
  ViewNode pn = plain_node("p");
  CHECK(!check_pair(pn, p, pn, p, {}).has_value());
}

TEST_CASE("text present on one side only is an anomaly") {
  RgbaImage img = canvas(40, 20, {{4, 4, 8, 5}});
  auto f = check_pair(text_node("a", 10), img, plain_node("b"), img, {});
  REQUIRE(f.has_value());
  CHECK(f->kind == FindingKind::kTextScaleAnomaly);
  auto g = check_pair(plain_node("a"), img, text_node("b", 10), img, {});
  REQUIRE(g.has_value());
  CHECK(g->kind == FindingKind::kTextScaleAnomaly);
}

}  // TEST_SUITE

}  // namespace
}  // namespace scalecheck
