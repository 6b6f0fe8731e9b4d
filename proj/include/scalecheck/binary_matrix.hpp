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

#ifndef SCALECHECK_BINARY_MATRIX_HPP_
#define SCALECHECK_BINARY_MATRIX_HPP_

#include <cstdint>
#include <vector>

#include "scalecheck/geometry.hpp"
#include "scalecheck/image.hpp"

namespace scalecheck {

// Dense 0/1 matrix tracking which pixels of a view are present.
struct BinaryMatrix {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> cells;  // values are 0 or 1

  BinaryMatrix() = default;
  BinaryMatrix(int w, int h) : width(w), height(h), cells(std::size_t(w) * h, 0) {}

  std::uint8_t at(int x, int y) const { return cells[std::size_t(y) * width + x]; }
  void set(int x, int y, std::uint8_t v) { cells[std::size_t(y) * width + x] = v; }
  std::int64_t area() const;
  bool empty() const { return width <= 0 || height <= 0; }

  bool operator==(const BinaryMatrix&) const = default;
};

// Cell is 1 exactly where the pixel's alpha is greater than zero.
BinaryMatrix visible_matrix(const RgbaImage& image);

// Copy of the region (local coordinates); must lie inside the matrix.
BinaryMatrix slice(const BinaryMatrix& m, const Rect& region);

// Cell-wise AND; dimensions must match.
BinaryMatrix bit_and(const BinaryMatrix& a, const BinaryMatrix& b);

// Within region, clears cells of m where mask (region-sized) is 1.
void clear_where(BinaryMatrix& m, const Rect& region, const BinaryMatrix& mask);

// Replaces the region of m with content (region-sized).
void paste(BinaryMatrix& m, const Rect& region, const BinaryMatrix& content);

}  // namespace scalecheck

#endif  // SCALECHECK_BINARY_MATRIX_HPP_
