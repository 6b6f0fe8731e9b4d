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

#ifndef SCALECHECK_GEOMETRY_HPP_
#define SCALECHECK_GEOMETRY_HPP_

#include <algorithm>
#include <cstdint>

namespace scalecheck {

// Axis-aligned rectangle in integer pixels, origin at the top-left corner.
// Width/height of zero (or less) means the rectangle is empty.
struct Rect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool empty() const { return w <= 0 || h <= 0; }
  std::int64_t area() const { return empty() ? 0 : std::int64_t{w} * h; }
  int right() const { return x + w; }
  int bottom() const { return y + h; }

  bool operator==(const Rect&) const = default;
};

inline Rect intersect(const Rect& a, const Rect& b) {
  int x0 = std::max(a.x, b.x);
  int y0 = std::max(a.y, b.y);
  int x1 = std::min(a.right(), b.right());
  int y1 = std::min(a.bottom(), b.bottom());
  if (x1 <= x0 || y1 <= y0) return Rect{};
  return Rect{x0, y0, x1 - x0, y1 - y0};
}

inline bool contains(const Rect& outer, const Rect& inner) {
  if (inner.empty()) return true;
  return inner.x >= outer.x && inner.y >= outer.y &&
         inner.right() <= outer.right() && inner.bottom() <= outer.bottom();
}

// Intersection over union of two pixel rectangles. Both empty -> 0.
inline double iou(const Rect& a, const Rect& b) {
  std::int64_t inter = intersect(a, b).area();
  std::int64_t uni = a.area() + b.area() - inter;
  if (uni <= 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace scalecheck

#endif  // SCALECHECK_GEOMETRY_HPP_
