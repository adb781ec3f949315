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

#ifndef SYLLABIC_DICTIONARY_H_
#define SYLLABIC_DICTIONARY_H_

#include <istream>
#include <map>
#include <string>
#include <string_view>

namespace syllabic {

// Normalized word -> IPA string (initial·glide·vowel·final·tone). Iteration
// order is byte order of the words, which fixes the TSV layout.
class Dictionary {
 public:
  using Map = std::map<std::string, std::string, std::less<>>;

  // Returns nullptr when the word is absent.
  const std::string* Find(std::string_view word) const;
  void Insert(std::string word, std::string ipa);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  // UTF-8, one "word<TAB>ipa" line per entry.
  std::string ToTsv() const;
  // Blank lines are skipped; a line without a tab is a data error
  // (std::runtime_error naming the line).
  static Dictionary FromTsv(std::istream& in);

  bool operator==(const Dictionary&) const = default;

 private:
  Map entries_;
};

}  // namespace syllabic

#endif  // SYLLABIC_DICTIONARY_H_
