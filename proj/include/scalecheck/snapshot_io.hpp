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

#ifndef SCALECHECK_SNAPSHOT_IO_HPP_
#define SCALECHECK_SNAPSHOT_IO_HPP_

#include <filesystem>

#include "scalecheck/snapshot.hpp"

namespace scalecheck {

// Reads <dir>/tree.json plus every referenced PNG and validates the result.
// Unknown JSON fields are ignored. Throws MissingFile, SchemaViolation, or
// DimensionMismatch.
Snapshot load_snapshot(const std::filesystem::path& dir);

// Inverse of load_snapshot: writes tree.json and the image files under dir,
// creating directories as needed. Output bytes are deterministic.
void write_snapshot(const Snapshot& snapshot, const std::filesystem::path& dir);

}  // namespace scalecheck

#endif  // SCALECHECK_SNAPSHOT_IO_HPP_
