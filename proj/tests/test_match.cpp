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

#include "doctest.h"
#include "scalecheck/error.hpp"
#include "scalecheck/image.hpp"
#include "scalecheck/match.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

namespace scalecheck {
namespace {

using testing::TestRng;
using testing::thrown_kind;

RgbaImage random_opaque(TestRng& rng, int w, int h) {
  RgbaImage img(w, h);
  for (std::size_t i = 0; i < img.pixels.size(); i += 4) {
    img.pixels[i] = rng.byte();
    img.pixels[i + 1] = rng.byte();
    img.pixels[i + 2] = rng.byte();
    img.pixels[i + 3] = 255;
  }
  return img;
}

TEST_SUITE("match") {

TEST_CASE("score map has target-minus-template-plus-one extent") {
  TestRng rng(401);
  RgbaImage target = random_opaque(rng, 100, 50);
  RgbaImage templ = crop(target, {10, 10, 40, 20});
  MatchResult r = template_match(target, templ);
  CHECK(r.map_width == 61);
  CHECK(r.map_height == 31);
  CHECK(int(r.score_map.size()) == 61 * 31);
}

TEST_CASE("recovers planted offsets with a near-perfect score") {
  TestRng rng(402);
  for (int i = 0; i < 100; ++i) {
    int tw = 20 + rng.below(40);
    int th = 20 + rng.below(40);
    int sw = 4 + rng.below(tw - 8);
    int sh = 4 + rng.below(th - 8);
    int x0 = rng.below(tw - sw + 1);
    int y0 = rng.below(th - sh + 1);
    RgbaImage target = random_opaque(rng, tw, th);
    RgbaImage templ = crop(target, {x0, y0, sw, sh});
    CAPTURE(i);
    MatchResult r = template_match(target, templ);
    CHECK(r.best_x == x0);
    CHECK(r.best_y == y0);
    CHECK(r.best_score >= 1.0 - 1e-6);
    // Scores never leave the correlation range.
    for (double s : r.score_map) {
      CHECK(s >= -1.0);
      CHECK(s <= 1.0);
    }
  }
}

TEST_CASE("constant or oversized templates are rejected") {
  RgbaImage target = RgbaImage::filled(10, 10, 100, 100, 100, 255);
  RgbaImage flat = RgbaImage::filled(4, 4, 7, 7, 7, 255);
  CHECK(thrown_kind([&] { template_match(target, flat); }) ==
        ErrorKind::kDegenerateTemplate);
  RgbaImage big(11, 4);
  CHECK(thrown_kind([&] { template_match(target, big); }) ==
        ErrorKind::kTemplateTooLarge);
  CHECK(thrown_kind([&] { template_match(target, RgbaImage{}); }) ==
        ErrorKind::kDegenerateTemplate);
}

TEST_CASE("argmax-only search agrees with the full map") {
  TestRng rng(403);
  for (int i = 0; i < 50; ++i) {
    int tw = 16 + rng.below(48);
    int th = 16 + rng.below(48);
    int sw = 3 + rng.below(12);
    int sh = 3 + rng.below(12);
    RgbaImage target = random_opaque(rng, tw, th);
    RgbaImage templ =
        (i % 2 == 0)
            ? crop(target, {rng.below(tw - sw + 1), rng.below(th - sh + 1), sw, sh})
            : random_opaque(rng, sw, sh);
    MatchResult full = template_match(target, templ);
    CAPTURE(i);
    // With no hint, with a wrong hint, and with the right hint.
    for (auto [hx, hy] : {std::pair{-1, -1}, {0, 0}, {full.best_x, full.best_y}}) {
      BestMatch fast = template_match_best(target, templ, hx, hy);
      CHECK(fast.x == full.best_x);
      CHECK(fast.y == full.best_y);
      CHECK(fast.score == full.best_score);
    }
  }
}

TEST_CASE("exact score ties resolve to the first position in row-major order") {
  // The same patch planted twice; both windows match perfectly, so the
  // earlier position must win in both search paths.
  RgbaImage target = RgbaImage::filled(24, 10, 200, 200, 200, 255);
  TestRng rng(404);
  RgbaImage patch = random_opaque(rng, 4, 4);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) {
      const std::uint8_t* p = patch.pixel(x, y);
      target.set_pixel(2 + x, 3 + y, p[0], p[1], p[2], p[3]);
      target.set_pixel(14 + x, 3 + y, p[0], p[1], p[2], p[3]);
    }
  }
  MatchResult full = template_match(target, patch);
  CHECK(full.best_x == 2);
  CHECK(full.best_y == 3);
  CHECK(full.score_at(14, 3) == full.best_score);
  // Even a hint pointing at the later twin must not steal the tiebreak.
  BestMatch fast = template_match_best(target, patch, 14, 3);
  CHECK(fast.x == 2);
  CHECK(fast.y == 3);
}

}  // TEST_SUITE

}  // namespace
}  // namespace scalecheck
