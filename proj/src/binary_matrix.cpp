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

#include "scalecheck/binary_matrix.hpp"

#include <cstring>

#include "scalecheck/error.hpp"

namespace scalecheck {

std::int64_t BinaryMatrix::area() const {
  std::int64_t n = 0;
  for (std::uint8_t c : cells) n += c;
  return n;
}

BinaryMatrix visible_matrix(const RgbaImage& image) {
  BinaryMatrix m(image.width, image.height);
  const std::uint8_t* p = image.pixels.data();
  for (std::size_t i = 0; i < m.cells.size(); ++i, p += 4) {
    m.cells[i] = p[3] > 0 ? 1 : 0;
  }
  return m;
}

BinaryMatrix slice(const BinaryMatrix& m, const Rect& region) {
  if (region.empty() || region.x < 0 || region.y < 0 ||
      region.right() > m.width || region.bottom() > m.height) {
    throw Error(ErrorKind::kOutOfBounds, "slice region outside matrix");
  }
  BinaryMatrix out(region.w, region.h);
  for (int y = 0; y < region.h; ++y) {
    std::memcpy(&out.cells[std::size_t(y) * region.w],
                &m.cells[std::size_t(region.y + y) * m.width + region.x],
                std::size_t(region.w));
  }
  return out;
}

BinaryMatrix bit_and(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.width != b.width || a.height != b.height) {
    throw Error(ErrorKind::kDimensionMismatch, "AND of unequal matrices");
  }
  BinaryMatrix out(a.width, a.height);
  for (std::size_t i = 0; i < out.cells.size(); ++i) {
    out.cells[i] = a.cells[i] & b.cells[i];
  }
  return out;
}

void clear_where(BinaryMatrix& m, const Rect& region, const BinaryMatrix& mask) {
  if (mask.width != region.w || mask.height != region.h) {
    throw Error(ErrorKind::kDimensionMismatch, "mask does not match region");
  }
  for (int y = 0; y < region.h; ++y) {
    for (int x = 0; x < region.w; ++x) {
      if (mask.at(x, y)) m.set(region.x + x, region.y + y, 0);
    }
  }
}

void paste(BinaryMatrix& m, const Rect& region, const BinaryMatrix& content) {
  if (content.width != region.w || content.height != region.h) {
    throw Error(ErrorKind::kDimensionMismatch, "content does not match region");
  }
  for (int y = 0; y < region.h; ++y) {
    std::memcpy(&m.cells[std::size_t(region.y + y) * m.width + region.x],
                &content.cells[std::size_t(y) * region.w],
                std::size_t(region.w));
  }
}

}  // namespace scalecheck
