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

#ifndef SCALECHECK_ERROR_HPP_
#define SCALECHECK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace scalecheck {

enum class ErrorKind {
  kMissingFile,
  kSchemaViolation,
  kDimensionMismatch,
  kOutOfBounds,
  kDegenerateImage,
  kDegenerateTemplate,
  kTemplateTooLarge,
  kMissingTextSize,
  kLabelMismatch,
  kGeometryOverflow,
  kInjectionInfeasible,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMissingFile: return "MissingFile";
    case ErrorKind::kSchemaViolation: return "SchemaViolation";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kOutOfBounds: return "OutOfBounds";
    case ErrorKind::kDegenerateImage: return "DegenerateImage";
    case ErrorKind::kDegenerateTemplate: return "DegenerateTemplate";
    case ErrorKind::kTemplateTooLarge: return "TemplateTooLarge";
    case ErrorKind::kMissingTextSize: return "MissingTextSize";
    case ErrorKind::kLabelMismatch: return "LabelMismatch";
    case ErrorKind::kGeometryOverflow: return "GeometryOverflow";
    case ErrorKind::kInjectionInfeasible: return "InjectionInfeasible";
  }
  return "UnknownError";
}

// Failure raised by library operations. The kind is machine-checkable so
// callers can distinguish recoverable conditions from caller bugs.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace scalecheck

#endif  // SCALECHECK_ERROR_HPP_
