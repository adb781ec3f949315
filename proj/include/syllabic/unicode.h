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

#ifndef SYLLABIC_UNICODE_H_
#define SYLLABIC_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

// Thin UTF-8 helpers over ICU.
namespace syllabic::unicode {

std::string ToNfc(std::string_view utf8);
std::string ToNfd(std::string_view utf8);
std::string ToLower(std::string_view utf8);

std::u32string ToCodePoints(std::string_view utf8);
std::string ToUtf8(std::u32string_view code_points);

// Splits on any Unicode whitespace; empty pieces are dropped.
std::vector<std::string> SplitWhitespace(std::string_view utf8);

// Byte length of the code point that starts at utf8[offset].
std::size_t CodePointLength(std::string_view utf8, std::size_t offset);

}  // namespace syllabic::unicode

#endif  // SYLLABIC_UNICODE_H_
