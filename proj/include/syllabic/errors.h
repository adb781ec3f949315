// Copyright 2026 The Syllabic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYLLABIC_ERRORS_H_
#define SYLLABIC_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace syllabic {

enum class ErrorKind {
  kEmptyDictionary,
  kNotASyllable,
  kMalformedIpa,
  kOutOfDictionary,
  kNoNucleus,
  kUnknownId,
  kEmptyReference,
  kEmptyInput,
  kDegenerateInput,
  kShapeMismatch,
  kNonFinite,
  kAllPadded,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every library failure is reported through this type; kind() identifies
// the contract violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyDictionary: return "EmptyDictionary";
    case ErrorKind::kNotASyllable: return "NotASyllable";
    case ErrorKind::kMalformedIpa: return "MalformedIpa";
    case ErrorKind::kOutOfDictionary: return "OutOfDictionary";
    case ErrorKind::kNoNucleus: return "NoNucleus";
    case ErrorKind::kUnknownId: return "UnknownId";
    case ErrorKind::kEmptyReference: return "EmptyReference";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kDegenerateInput: return "DegenerateInput";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kNonFinite: return "NonFinite";
    case ErrorKind::kAllPadded: return "AllPadded";
  }
  return "Unknown";
}

}  // namespace syllabic

#endif  // SYLLABIC_ERRORS_H_
