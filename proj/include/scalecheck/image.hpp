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

#ifndef SCALECHECK_IMAGE_HPP_
#define SCALECHECK_IMAGE_HPP_

#include <cstdint>
#include <vector>

#include "scalecheck/geometry.hpp"

namespace scalecheck {

// 8-bit RGBA raster, straight (non-premultiplied) alpha, row-major.
struct RgbaImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // width * height * 4 bytes

  RgbaImage() = default;
  RgbaImage(int w, int h) : width(w), height(h), pixels(std::size_t(w) * h * 4, 0) {}

  static RgbaImage filled(int w, int h, std::uint8_t r, std::uint8_t g,
                          std::uint8_t b, std::uint8_t a);

  std::uint8_t* pixel(int x, int y) {
    return pixels.data() + (std::size_t(y) * width + x) * 4;
  }
  const std::uint8_t* pixel(int x, int y) const {
    return pixels.data() + (std::size_t(y) * width + x) * 4;
  }
  void set_pixel(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b,
                 std::uint8_t a) {
    std::uint8_t* p = pixel(x, y);
    p[0] = r; p[1] = g; p[2] = b; p[3] = a;
  }
  bool empty() const { return width <= 0 || height <= 0; }
  Rect rect() const { return Rect{0, 0, width, height}; }

  bool operator==(const RgbaImage&) const = default;
};

// Single-channel 8-bit raster.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int w, int h) : width(w), height(h), pixels(std::size_t(w) * h, 0) {}

  std::uint8_t at(int x, int y) const { return pixels[std::size_t(y) * width + x]; }
  void set(int x, int y, std::uint8_t v) { pixels[std::size_t(y) * width + x] = v; }
  bool empty() const { return width <= 0 || height <= 0; }

  bool operator==(const GrayImage&) const = default;
};

// Source-over composite of src onto dest at the given offset. Channels are
// premultiplied for the blend and converted back to straight alpha on output.
// The src rectangle must lie fully inside dest; callers slice beforehand.
RgbaImage composite_src_over(const RgbaImage& dest, const RgbaImage& src,
                             int offset_x, int offset_y);
void composite_src_over_inplace(RgbaImage& dest, const RgbaImage& src,
                                int offset_x, int offset_y);

// Rec.601 luma, rounded to nearest. Alpha is ignored.
GrayImage to_gray(const RgbaImage& image);

// Resample to (out_w, out_h): box-filter average when shrinking an axis,
// bilinear when growing it. Each channel is resampled independently.
RgbaImage resize_area(const RgbaImage& image, int out_w, int out_h);

// Copy of the region (local coordinates); the region must lie inside image.
RgbaImage crop(const RgbaImage& image, const Rect& region);

}  // namespace scalecheck

#endif  // SCALECHECK_IMAGE_HPP_
