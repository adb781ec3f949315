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

#include "syllabic/corpus_io.h"

#include <charconv>
#include <fstream>
#include <optional>

#include "json.hpp"
#include "syllabic/g2p.h"

namespace syllabic::corpus_io {
namespace {

std::string Trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(Trim(std::string_view(line).substr(start, tab - start)));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::optional<std::size_t> ParseIndex(const std::string& s) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::vector<std::string>> ReadWordSequences(
    const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> out;
  std::size_t line_no = 0;
  for (const auto& line : ReadLines(path)) {
    ++line_no;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() != '{') {
      out.push_back(g2p::NormalizeText(line).words);
      continue;
    }
    try {
      const auto record = nlohmann::json::parse(trimmed);
      out.push_back(record.at("words").get<std::vector<std::string>>());
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
  return out;
}

Metadata ReadMetadata(const std::filesystem::path& path) {
  Metadata out;
  std::vector<std::string> columns = {"line_no", "dialect", "province"};
  bool first = true;
  std::size_t row = 0;
  for (const auto& line : ReadLines(path)) {
    ++row;
    if (Trim(line).empty()) continue;
    auto fields = SplitTabs(line);
    const auto index = ParseIndex(fields[0]);
    if (!index) {
      if (!first) {
        throw DataError(path.string() + ":" + std::to_string(row) +
                        ": line number expected");
      }
      columns = fields;
      first = false;
      continue;
    }
    first = false;
    if (*index == 0) {
      throw DataError(path.string() + ":" + std::to_string(row) +
                      ": line numbers are 1-based");
    }
    auto& entry = out[*index];
    for (std::size_t k = 1; k < fields.size() && k < columns.size(); ++k) {
      entry[columns[k]] = fields[k];
    }
  }
  return out;
}

std::map<std::string, std::string> ReadConfig(const std::filesystem::path& path) {
  std::map<std::string, std::string> out;
  std::size_t row = 0;
  for (const auto& line : ReadLines(path)) {
    ++row;
    const std::string body = Trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw DataError(path.string() + ":" + std::to_string(row) +
                      ": expected key=value");
    }
    out[Trim(body.substr(0, eq))] = Trim(body.substr(eq + 1));
  }
  return out;
}

}  // namespace syllabic::corpus_io
