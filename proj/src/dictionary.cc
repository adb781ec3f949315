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

#include "syllabic/dictionary.h"

#include <sstream>
#include <stdexcept>

namespace syllabic {

const std::string* Dictionary::Find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

void Dictionary::Insert(std::string word, std::string ipa) {
  entries_.insert_or_assign(std::move(word), std::move(ipa));
}

std::string Dictionary::ToTsv() const {
  std::string out;
  for (const auto& [word, ipa] : entries_) {
    out += word;
    out += '\t';
    out += ipa;
    out += '\n';
  }
  return out;
}

Dictionary Dictionary::FromTsv(std::istream& in) {
  Dictionary dictionary;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw std::runtime_error("dictionary line " + std::to_string(line_no) +
                               " is not word<TAB>ipa");
    }
    dictionary.Insert(line.substr(0, tab), line.substr(tab + 1));
  }
  return dictionary;
}

}  // namespace syllabic
