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

#include "scalecheck/components.hpp"

#include <vector>

namespace scalecheck {

std::vector<ConnectedComponent> connected_components(const BinaryMatrix& m) {
  std::vector<ConnectedComponent> result;
  if (m.empty()) return result;

  const int w = m.width;
  const int h = m.height;
  std::vector<std::int32_t> label(std::size_t(w) * h, 0);
  std::vector<std::int32_t> stack;
  int next = 1;

  for (int sy = 0; sy < h; ++sy) {
    for (int sx = 0; sx < w; ++sx) {
      std::size_t si = std::size_t(sy) * w + sx;
      if (!m.cells[si] || label[si]) continue;

      ConnectedComponent comp;
      comp.label = next;
      comp.bbox = Rect{sx, sy, 1, 1};
      int min_x = sx, min_y = sy, max_x = sx, max_y = sy;

      label[si] = next;
      stack.clear();
      stack.push_back(std::int32_t(si));
      while (!stack.empty()) {
        std::int32_t idx = stack.back();
        stack.pop_back();
        int cx = idx % w;
        int cy = idx / w;
        ++comp.area;
        min_x = std::min(min_x, cx);
        min_y = std::min(min_y, cy);
        max_x = std::max(max_x, cx);
        max_y = std::max(max_y, cy);
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            int nx = cx + dx;
            int ny = cy + dy;
            if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
            std::size_t ni = std::size_t(ny) * w + nx;
            if (m.cells[ni] && !label[ni]) {
              label[ni] = next;
              stack.push_back(std::int32_t(ni));
            }
          }
        }
      }
      comp.bbox = Rect{min_x, min_y, max_x - min_x + 1, max_y - min_y + 1};
      result.push_back(comp);
      ++next;
    }
  }
  return result;
}

}  // namespace scalecheck
