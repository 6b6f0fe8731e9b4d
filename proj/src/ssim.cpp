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

#include "scalecheck/ssim.hpp"

#include <cmath>
#include <vector>

#include "scalecheck/error.hpp"

namespace scalecheck {

namespace {

constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

std::vector<double> gaussian_kernel(int size, double sigma) {
  std::vector<double> k(size);
  int half = size / 2;
  double sum = 0.0;
  for (int i = 0; i < size; ++i) {
    double d = i - half;
    k[i] = std::exp(-(d * d) / (2.0 * sigma * sigma));
    sum += k[i];
  }
  for (double& v : k) v /= sum;
  return k;
}

// Separable Gaussian filter restricted to the fully-covered (valid) region.
// Input w*h, output (w-size+1)*(h-size+1).
std::vector<double> blur_valid(const std::vector<double>& src, int w, int h,
                               const std::vector<double>& kernel) {
  int size = int(kernel.size());
  int ow = w - size + 1;
  int oh = h - size + 1;
  std::vector<double> mid(std::size_t(ow) * h, 0.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int t = 0; t < size; ++t) acc += kernel[t] * src[std::size_t(y) * w + x + t];
      mid[std::size_t(y) * ow + x] = acc;
    }
  }
  std::vector<double> out(std::size_t(ow) * oh, 0.0);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int t = 0; t < size; ++t) acc += kernel[t] * mid[std::size_t(y + t) * ow + x];
      out[std::size_t(y) * ow + x] = acc;
    }
  }
  return out;
}

double ssim_plane(const std::vector<double>& a, const std::vector<double>& b,
                  int w, int h) {
  int size = std::min({11, w, h});
  if (size % 2 == 0) --size;
  double sigma = 1.5 * size / 11.0;
  std::vector<double> kernel =
      size > 1 ? gaussian_kernel(size, sigma) : std::vector<double>{1.0};

  std::size_t n = a.size();
  std::vector<double> aa(n), bb(n), ab(n);
  for (std::size_t i = 0; i < n; ++i) {
    aa[i] = a[i] * a[i];
    bb[i] = b[i] * b[i];
    ab[i] = a[i] * b[i];
  }
  std::vector<double> mu_a = blur_valid(a, w, h, kernel);
  std::vector<double> mu_b = blur_valid(b, w, h, kernel);
  std::vector<double> e_aa = blur_valid(aa, w, h, kernel);
  std::vector<double> e_bb = blur_valid(bb, w, h, kernel);
  std::vector<double> e_ab = blur_valid(ab, w, h, kernel);

  double total = 0.0;
  for (std::size_t i = 0; i < mu_a.size(); ++i) {
    double ma = mu_a[i], mb = mu_b[i];
    double va = e_aa[i] - ma * ma;
    double vb = e_bb[i] - mb * mb;
    double cov = e_ab[i] - ma * mb;
    total += ((2.0 * ma * mb + kC1) * (2.0 * cov + kC2)) /
             ((ma * ma + mb * mb + kC1) * (va + vb + kC2));
  }
  return total / double(mu_a.size());
}

std::vector<double> channel_plane(const RgbaImage& img, int channel) {
  std::vector<double> plane(std::size_t(img.width) * img.height);
  for (std::size_t i = 0; i < plane.size(); ++i) {
    plane[i] = img.pixels[i * 4 + channel];
  }
  return plane;
}

bool rgb_all_zero(const RgbaImage& img) {
  for (std::size_t i = 0; i < img.pixels.size(); i += 4) {
    if (img.pixels[i] || img.pixels[i + 1] || img.pixels[i + 2]) return false;
  }
  return true;
}

}  // namespace

double ssim(const RgbaImage& a, const RgbaImage& b) {
  if (a.width != b.width || a.height != b.height) {
    throw Error(ErrorKind::kDimensionMismatch, "ssim inputs differ in size");
  }
  if (a.empty()) {
    throw Error(ErrorKind::kDimensionMismatch, "ssim on empty images");
  }
  // Fully transparent black renders carry signal only in alpha.
  if (rgb_all_zero(a) && rgb_all_zero(b)) {
    return ssim_plane(channel_plane(a, 3), channel_plane(b, 3), a.width, a.height);
  }
  double total = 0.0;
  for (int c = 0; c < 3; ++c) {
    total += ssim_plane(channel_plane(a, c), channel_plane(b, c), a.width, a.height);
  }
  return total / 3.0;
}

}  // namespace scalecheck
