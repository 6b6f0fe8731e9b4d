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

#include <cmath>

#include "doctest.h"
#include "scalecheck/error.hpp"
#include "scalecheck/ssim.hpp"
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

TEST_SUITE("ssim") {

TEST_CASE("self comparison scores one") {
  TestRng rng(501);
  for (int w : {1, 3, 8, 11, 30}) {
    RgbaImage img = random_opaque(rng, w, w + 2);
    CHECK(std::abs(ssim(img, img) - 1.0) <= 1e-9);
  }
}

TEST_CASE("agrees with the direct-window reference") {
  TestRng rng(502);
  for (int i = 0; i < 50; ++i) {
    int w = 11 + rng.below(30);
    int h = 11 + rng.below(30);
    RgbaImage a = random_opaque(rng, w, h);
    RgbaImage b = a;
    // Spectrum from identical to unrelated.
    int mutations = rng.below(3) * (w * h / 4);
    for (int m = 0; m < mutations; ++m) {
      int x = rng.below(w), y = rng.below(h);
      b.set_pixel(x, y, rng.byte(), rng.byte(), rng.byte(), 255);
    }
    CAPTURE(i);
    CHECK(std::abs(ssim(a, b) - testing::reference_ssim(a, b)) <= 1e-3);
  }
}

TEST_CASE("inverted structure scores far below the threshold") {
  RgbaImage a = RgbaImage::filled(32, 32, 255, 255, 255, 255);
  testing::draw_rect(a, {4, 4, 24, 12}, 0, 0, 0);
  RgbaImage b(32, 32);
  for (int y = 0; y < 32; ++y) {
    for (int x = 0; x < 32; ++x) {
      const std::uint8_t* p = a.pixel(x, y);
      b.set_pixel(x, y, 255 - p[0], 255 - p[1], 255 - p[2], 255);
    }
  }
  CHECK(ssim(a, b) < 0.5);
}

TEST_CASE("all-zero color planes fall back to alpha") {
  RgbaImage a(16, 16);
  RgbaImage b(16, 16);
  TestRng rng(503);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 16; ++x) {
      std::uint8_t alpha = rng.byte();
      a.set_pixel(x, y, 0, 0, 0, alpha);
      b.set_pixel(x, y, 0, 0, 0, alpha);
    }
  }
  CHECK(std::abs(ssim(a, b) - 1.0) <= 1e-9);
  // Different alpha structure must not score as identical.
  RgbaImage c(16, 16);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 16; ++x) c.set_pixel(x, y, 0, 0, 0, rng.byte());
  }
  CHECK(ssim(a, c) < 0.9);
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK(thrown_kind([] { ssim(RgbaImage(4, 4), RgbaImage(5, 4)); }) ==
        ErrorKind::kDimensionMismatch);
  CHECK(thrown_kind([] { ssim(RgbaImage{}, RgbaImage{}); }) ==
        ErrorKind::kDimensionMismatch);
}

}  // TEST_SUITE

}  // namespace
}  // namespace scalecheck
