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

#include "scalecheck/threshold.hpp"

#include <array>
#include <cstdint>

#include "scalecheck/error.hpp"

namespace scalecheck {

int otsu_threshold(const GrayImage& image) {
  if (image.empty()) {
    throw Error(ErrorKind::kDegenerateImage, "empty image has no threshold");
  }
  std::array<std::int64_t, 256> hist{};
  for (std::uint8_t v : image.pixels) ++hist[v];

  int populated = 0;
  for (int v = 0; v < 256; ++v) {
    if (hist[v] > 0) ++populated;
  }
  if (populated <= 1) {
    throw Error(ErrorKind::kDegenerateImage, "all pixels share one value");
  }

  std::int64_t total = std::int64_t(image.width) * image.height;
  std::int64_t sum_all = 0;
  for (int v = 0; v < 256; ++v) sum_all += std::int64_t(v) * hist[v];

  // Class 0 holds values <= t. Strict comparison keeps the smallest
  // maximizing threshold.
  int best_t = 0;
  double best_var = -1.0;
  std::int64_t w0 = 0;
  std::int64_t sum0 = 0;
  for (int t = 0; t < 256; ++t) {
    w0 += hist[t];
    sum0 += std::int64_t(t) * hist[t];
    std::int64_t w1 = total - w0;
    if (w0 == 0 || w1 == 0) continue;
    double mu0 = static_cast<double>(sum0) / w0;
    double mu1 = static_cast<double>(sum_all - sum0) / w1;
    double var = static_cast<double>(w0) * static_cast<double>(w1) *
                 (mu0 - mu1) * (mu0 - mu1);
    if (var > best_var) {
      best_var = var;
      best_t = t;
    }
  }
  return best_t;
}

BinaryMatrix binarize(const GrayImage& image, int threshold) {
  BinaryMatrix m(image.width, image.height);
  for (std::size_t i = 0; i < m.cells.size(); ++i) {
    m.cells[i] = image.pixels[i] <= threshold ? 1 : 0;
  }
  return m;
}

}  // namespace scalecheck
