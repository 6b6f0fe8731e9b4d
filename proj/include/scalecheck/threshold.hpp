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

#ifndef SCALECHECK_THRESHOLD_HPP_
#define SCALECHECK_THRESHOLD_HPP_

#include "scalecheck/binary_matrix.hpp"
#include "scalecheck/image.hpp"

namespace scalecheck {

// Otsu's method: the threshold in [0, 255] that maximizes between-class
// variance of the 256-bin histogram. Ties resolve to the smallest threshold.
// Throws DegenerateImage when every pixel has the same value.
int otsu_threshold(const GrayImage& image);

// Foreground extraction: gray values <= threshold become 1 (ink on a light
// background), values above become 0.
BinaryMatrix binarize(const GrayImage& image, int threshold);

}  // namespace scalecheck

#endif  // SCALECHECK_THRESHOLD_HPP_
