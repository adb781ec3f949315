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

// File readers shared by the command-line tools.

#ifndef SYLLABIC_CORPUS_IO_H_
#define SYLLABIC_CORPUS_IO_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace syllabic::corpus_io {

// Raised when a file cannot be opened or a record cannot be parsed.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> ReadLines(const std::filesystem::path& path);

// One word sequence per line. A line starting with '{' is a JSON object
// whose "words" array is taken verbatim; any other line is normalized
// text. Blank lines yield empty sequences so line numbers stay aligned.
std::vector<std::vector<std::string>> ReadWordSequences(
    const std::filesystem::path& path);

// Metadata TSV keyed by 1-based line number. The first row is a header
// when its first field is not a number; without a header the columns are
// named line_no, dialect, province.
using Metadata = std::map<std::size_t, std::map<std::string, std::string>>;
Metadata ReadMetadata(const std::filesystem::path& path);

// key=value lines; '#' starts a comment.
std::map<std::string, std::string> ReadConfig(const std::filesystem::path& path);

}  // namespace syllabic::corpus_io

#endif  // SYLLABIC_CORPUS_IO_H_
