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

#ifndef SCALECHECK_COMPONENTS_HPP_
#define SCALECHECK_COMPONENTS_HPP_

#include <cstdint>
#include <vector>

#include "scalecheck/binary_matrix.hpp"

namespace scalecheck {

struct ConnectedComponent {
  int label = 0;        // dense, starting at 1
  Rect bbox;            // tight bounding box
  std::int64_t area = 0;  // number of member cells
};

// 8-connected components of the 1-cells, ordered by the row-major position
// of each component's first-encountered cell.
std::vector<ConnectedComponent> connected_components(const BinaryMatrix& m);

}  // namespace scalecheck

#endif  // SCALECHECK_COMPONENTS_HPP_
