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

#ifndef SCALECHECK_PNG_IO_HPP_
#define SCALECHECK_PNG_IO_HPP_

#include <filesystem>

#include "scalecheck/image.hpp"

namespace scalecheck {

// Decodes a PNG into 8-bit RGBA; palette, gray, and 16-bit inputs are
// expanded. Throws MissingFile when the file cannot be opened and
// SchemaViolation on malformed data.
RgbaImage read_png(const std::filesystem::path& path);

// Encodes 8-bit RGBA with fixed settings, so identical pixels always yield
// identical bytes.
void write_png(const std::filesystem::path& path, const RgbaImage& image);

}  // namespace scalecheck

#endif  // SCALECHECK_PNG_IO_HPP_
