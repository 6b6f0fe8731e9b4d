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

#include "scalecheck/image.hpp"

#include <cmath>
#include <cstring>

#include "scalecheck/error.hpp"

namespace scalecheck {

namespace {

inline std::uint8_t clamp_round(double v) {
  if (v <= 0.0) return 0;
  if (v >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::lround(v));
}

}  // namespace

RgbaImage RgbaImage::filled(int w, int h, std::uint8_t r, std::uint8_t g,
                            std::uint8_t b, std::uint8_t a) {
  RgbaImage img(w, h);
  for (std::size_t i = 0; i < img.pixels.size(); i += 4) {
    img.pixels[i] = r;
    img.pixels[i + 1] = g;
    img.pixels[i + 2] = b;
    img.pixels[i + 3] = a;
  }
  return img;
}

void composite_src_over_inplace(RgbaImage& dest, const RgbaImage& src,
                                int offset_x, int offset_y) {
  if (offset_x < 0 || offset_y < 0 || offset_x + src.width > dest.width ||
      offset_y + src.height > dest.height) {
    throw Error(ErrorKind::kOutOfBounds,
                "source does not fit inside destination at the given offset");
  }
  for (int y = 0; y < src.height; ++y) {
    const std::uint8_t* sp = src.pixel(0, y);
    std::uint8_t* dp = dest.pixel(offset_x, offset_y + y);
    for (int x = 0; x < src.width; ++x, sp += 4, dp += 4) {
      double sa = sp[3];
      if (sa == 255.0) {
        std::memcpy(dp, sp, 4);
        continue;
      }
      if (sa == 0.0) continue;
      double da = dp[3];
      double keep = (255.0 - sa) / 255.0;
      double oa = sa + keep * da;
      // Blend in premultiplied space, then return to straight alpha.
      for (int c = 0; c < 3; ++c) {
        double sp_c = sp[c] * sa / 255.0;
        double dp_c = dp[c] * da / 255.0;
        double op_c = sp_c + keep * dp_c;
        dp[c] = oa > 0.0 ? clamp_round(op_c * 255.0 / oa) : 0;
      }
      dp[3] = clamp_round(oa);
    }
  }
}

RgbaImage composite_src_over(const RgbaImage& dest, const RgbaImage& src,
                             int offset_x, int offset_y) {
  RgbaImage out = dest;
  composite_src_over_inplace(out, src, offset_x, offset_y);
  return out;
}

GrayImage to_gray(const RgbaImage& image) {
  GrayImage out(image.width, image.height);
  const std::uint8_t* p = image.pixels.data();
  for (std::size_t i = 0; i < out.pixels.size(); ++i, p += 4) {
    out.pixels[i] = clamp_round(0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]);
  }
  return out;
}

RgbaImage crop(const RgbaImage& image, const Rect& region) {
  if (!contains(image.rect(), region) || region.empty()) {
    throw Error(ErrorKind::kOutOfBounds, "crop region outside image");
  }
  RgbaImage out(region.w, region.h);
  for (int y = 0; y < region.h; ++y) {
    std::memcpy(out.pixel(0, y), image.pixel(region.x, region.y + y),
                std::size_t(region.w) * 4);
  }
  return out;
}

namespace {

// One resampling axis: for each output index, the source taps and weights.
struct AxisPlan {
  std::vector<int> offsets;           // first tap per output index
  std::vector<std::vector<double>> weights;  // normalized taps
};

AxisPlan plan_axis(int src, int dst) {
  AxisPlan plan;
  plan.offsets.resize(dst);
  plan.weights.resize(dst);
  if (dst < src) {
    // Box filter with exact fractional coverage.
    double r = static_cast<double>(src) / dst;
    for (int i = 0; i < dst; ++i) {
      double lo = i * r;
      double hi = (i + 1) * r;
      int j0 = static_cast<int>(std::floor(lo));
      int j1 = static_cast<int>(std::ceil(hi));
      j1 = std::min(j1, src);
      plan.offsets[i] = j0;
      auto& w = plan.weights[i];
      for (int j = j0; j < j1; ++j) {
        double cover = std::min<double>(hi, j + 1) - std::max<double>(lo, j);
        w.push_back(cover / r);
      }
    }
  } else {
    // Linear interpolation between the two nearest source centers.
    for (int i = 0; i < dst; ++i) {
      double s = (i + 0.5) * src / static_cast<double>(dst) - 0.5;
      int j0 = static_cast<int>(std::floor(s));
      double f = s - j0;
      if (j0 < 0) { j0 = 0; f = 0.0; }
      if (j0 >= src - 1) { j0 = src - 1; f = 0.0; }
      plan.offsets[i] = j0;
      if (f == 0.0) {
        plan.weights[i] = {1.0};
      } else {
        plan.weights[i] = {1.0 - f, f};
      }
    }
  }
  return plan;
}

}  // namespace

RgbaImage resize_area(const RgbaImage& image, int out_w, int out_h) {
  if (image.empty() || out_w <= 0 || out_h <= 0) {
    throw Error(ErrorKind::kOutOfBounds, "resize with empty source or target");
  }
  if (out_w == image.width && out_h == image.height) return image;

  AxisPlan px = plan_axis(image.width, out_w);
  AxisPlan py = plan_axis(image.height, out_h);

  // Horizontal pass into a double buffer, then vertical, rounding once.
  std::vector<double> mid(std::size_t(out_w) * image.height * 4, 0.0);
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < out_w; ++x) {
      double acc[4] = {0, 0, 0, 0};
      const auto& w = px.weights[x];
      for (std::size_t t = 0; t < w.size(); ++t) {
        const std::uint8_t* p = image.pixel(px.offsets[x] + int(t), y);
        for (int c = 0; c < 4; ++c) acc[c] += w[t] * p[c];
      }
      double* m = &mid[(std::size_t(y) * out_w + x) * 4];
      for (int c = 0; c < 4; ++c) m[c] = acc[c];
    }
  }
  RgbaImage out(out_w, out_h);
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      double acc[4] = {0, 0, 0, 0};
      const auto& w = py.weights[y];
      for (std::size_t t = 0; t < w.size(); ++t) {
        const double* m = &mid[(std::size_t(py.offsets[y] + int(t)) * out_w + x) * 4];
        for (int c = 0; c < 4; ++c) acc[c] += w[t] * m[c];
      }
      std::uint8_t* p = out.pixel(x, y);
      for (int c = 0; c < 4; ++c) p[c] = clamp_round(acc[c]);
    }
  }
  return out;
}

}  // namespace scalecheck
