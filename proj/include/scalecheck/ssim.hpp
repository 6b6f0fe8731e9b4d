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

#ifndef SCALECHECK_SSIM_HPP_
#define SCALECHECK_SSIM_HPP_

#include "scalecheck/image.hpp"

namespace scalecheck {

// Structural similarity between two images of identical dimensions: the
// per-channel SSIM maps (11x11 Gaussian window, sigma 1.5, valid region only)
// are mean-pooled and averaged over R, G, B. When both images have all-zero
// RGB planes the score is computed on the alpha channel instead. Images
// smaller than the window use the largest odd window that fits, with sigma
// shrunk proportionally. Throws DimensionMismatch on unequal dimensions.
double ssim(const RgbaImage& a, const RgbaImage& b);

}  // namespace scalecheck

#endif  // SCALECHECK_SSIM_HPP_
