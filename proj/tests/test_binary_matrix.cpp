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

#include "doctest.h"
#include "scalecheck/binary_matrix.hpp"

namespace scalecheck {
namespace {

TEST_SUITE("binary-matrix") {

TEST_CASE("visible matrix marks any nonzero alpha") {
  RgbaImage img(3, 1);
  img.set_pixel(0, 0, 10, 10, 10, 0);
  img.set_pixel(1, 0, 10, 10, 10, 1);
  img.set_pixel(2, 0, 10, 10, 10, 255);
  BinaryMatrix m = visible_matrix(img);
  CHECK(m.at(0, 0) == 0);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(2, 0) == 1);
  CHECK(m.area() == 2);
}

TEST_CASE("slice copies a region in local coordinates") {
  BinaryMatrix m(4, 4);
  m.set(2, 1, 1);
  BinaryMatrix s = slice(m, {1, 1, 3, 2});
  CHECK(s.width == 3);
  CHECK(s.height == 2);
  CHECK(s.at(1, 0) == 1);
  CHECK(s.area() == 1);
}

TEST_CASE("bit_and keeps only shared cells") {
  BinaryMatrix a(2, 2), b(2, 2);
  a.set(0, 0, 1);
  a.set(1, 1, 1);
  b.set(1, 1, 1);
  b.set(0, 1, 1);
  BinaryMatrix c = bit_and(a, b);
  CHECK(c.area() == 1);
  CHECK(c.at(1, 1) == 1);
}

TEST_CASE("clear_where erases only masked cells inside the region") {
  BinaryMatrix m(3, 3);
  for (std::uint8_t& c : m.cells) c = 1;
  BinaryMatrix mask(2, 2);
  mask.set(0, 0, 1);
  clear_where(m, {1, 1, 2, 2}, mask);
  CHECK(m.area() == 8);
  CHECK(m.at(1, 1) == 0);
  CHECK(m.at(2, 2) == 1);
}

TEST_CASE("paste replaces the region wholesale") {
  BinaryMatrix m(3, 3);
  for (std::uint8_t& c : m.cells) c = 1;
  BinaryMatrix content(2, 1);
  content.set(1, 0, 1);
  paste(m, {0, 2, 2, 1}, content);
  CHECK(m.at(0, 2) == 0);
  CHECK(m.at(1, 2) == 1);
  CHECK(m.at(2, 2) == 1);  // outside the region, untouched
}

}  // TEST_SUITE

}  // namespace
}  // namespace scalecheck
