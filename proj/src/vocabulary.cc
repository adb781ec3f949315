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

#include "syllabic/vocabulary.h"

#include <algorithm>
#include <set>

#include "syllabic/errors.h"
#include "syllabic/g2p.h"

namespace syllabic {
namespace {

constexpr const char* kSpecialSymbols[] = {"<pad>", "<bos>", "<eos>",
                                           "<none>"};

template <typename T, typename KeyFn>
void SortUniqueBy(std::vector<T>& items, KeyFn key) {
  std::sort(items.begin(), items.end(),
            [&](const T& a, const T& b) { return key(a) < key(b); });
  items.erase(std::unique(items.begin(), items.end(),
                          [&](const T& a, const T& b) { return key(a) == key(b); }),
              items.end());
}

[[noreturn]] void ThrowUnknown(const char* table, int id) {
  throw Error(ErrorKind::kUnknownId,
              std::string(table) + " id " + std::to_string(id));
}

}  // namespace

Vocabulary::Vocabulary(std::vector<Initial> initials, std::vector<Rhyme> rhymes,
                       std::vector<Tone> tones)
    : initials_(std::move(initials)),
      rhymes_(std::move(rhymes)),
      tones_(std::move(tones)) {
  SortUniqueBy(initials_, [](Initial i) { return std::string(IpaOf(i)); });
  SortUniqueBy(rhymes_, [](const Rhyme& r) { return RhymeIpa(r); });
  SortUniqueBy(tones_, [](Tone t) { return std::string(IpaOf(t)); });
  for (std::size_t i = 0; i < rhymes_.size(); ++i) {
    rhyme_ids_.emplace(RhymeIpa(rhymes_[i]),
                       first_rhyme_id() + static_cast<int>(i));
  }
}

int Vocabulary::initial_size() const {
  return first_initial_id() + initial_content_size();
}
int Vocabulary::rhyme_size() const {
  return first_rhyme_id() + rhyme_content_size();
}
int Vocabulary::tone_size() const {
  return first_tone_id() + tone_content_size();
}

int Vocabulary::EncodeInitial(std::optional<Initial> initial) const {
  if (!initial) return kNoneInitialId;
  auto it = std::find(initials_.begin(), initials_.end(), *initial);
  if (it == initials_.end()) {
    throw Error(ErrorKind::kUnknownId,
                "initial /" + std::string(IpaOf(*initial)) + "/ not in table");
  }
  return first_initial_id() + static_cast<int>(it - initials_.begin());
}

int Vocabulary::EncodeRhyme(const Rhyme& rhyme) const {
  auto it = rhyme_ids_.find(RhymeIpa(rhyme));
  if (it == rhyme_ids_.end()) {
    throw Error(ErrorKind::kUnknownId,
                "rhyme /" + RhymeIpa(rhyme) + "/ not in table");
  }
  return it->second;
}

int Vocabulary::EncodeTone(Tone tone) const {
  auto it = std::find(tones_.begin(), tones_.end(), tone);
  if (it == tones_.end()) {
    throw Error(ErrorKind::kUnknownId,
                "tone " + std::string(ToneName(tone)) + " not in table");
  }
  return first_tone_id() + static_cast<int>(it - tones_.begin());
}

SyllableTriplet Vocabulary::Encode(const Syllable& s) const {
  return {EncodeInitial(s.initial), EncodeRhyme(s.rhyme()),
          EncodeTone(s.tone)};
}

std::optional<Initial> Vocabulary::DecodeInitial(int id) const {
  if (id == kNoneInitialId) return std::nullopt;
  if (id < first_initial_id() || id >= initial_size()) {
    ThrowUnknown("initial", id);
  }
  return initials_[static_cast<std::size_t>(id - first_initial_id())];
}

Rhyme Vocabulary::DecodeRhyme(int id) const {
  if (id < first_rhyme_id() || id >= rhyme_size()) ThrowUnknown("rhyme", id);
  return rhymes_[static_cast<std::size_t>(id - first_rhyme_id())];
}

Tone Vocabulary::DecodeTone(int id) const {
  if (id < first_tone_id() || id >= tone_size()) ThrowUnknown("tone", id);
  return tones_[static_cast<std::size_t>(id - first_tone_id())];
}

Syllable Vocabulary::Decode(const SyllableTriplet& t) const {
  const Rhyme rhyme = DecodeRhyme(t.rhyme_id);
  return {DecodeInitial(t.initial_id), rhyme.glide, rhyme.vowel, rhyme.final,
          DecodeTone(t.tone_id)};
}

std::string Vocabulary::InitialSymbol(int id) const {
  if (id >= 0 && id < first_initial_id()) return kSpecialSymbols[id];
  return std::string(IpaOf(*DecodeInitial(id)));
}

std::string Vocabulary::RhymeSymbol(int id) const {
  if (id >= 0 && id < first_rhyme_id()) return kSpecialSymbols[id];
  return RhymeIpa(DecodeRhyme(id));
}

std::string Vocabulary::ToneSymbol(int id) const {
  if (id >= 0 && id < first_tone_id()) return kSpecialSymbols[id];
  const Tone tone = DecodeTone(id);
  return std::string(ToneName(tone));
}

std::string Vocabulary::ToTsv() const {
  std::string out;
  auto emit = [&out](const char* table, int id, const std::string& symbol) {
    out += table;
    out += '\t' + std::to_string(id) + '\t' + symbol + '\n';
  };
  for (int id = 0; id < initial_size(); ++id) emit("initial", id, InitialSymbol(id));
  for (int id = 0; id < rhyme_size(); ++id) emit("rhyme", id, RhymeSymbol(id));
  for (int id = 0; id < tone_size(); ++id) emit("tone", id, ToneSymbol(id));
  return out;
}

Vocabulary BuildVocabulary(const PhonemeInventory& inventory,
                           const Dictionary& dictionary) {
  if (dictionary.empty()) {
    throw Error(ErrorKind::kEmptyDictionary, "cannot build a vocabulary");
  }
  std::vector<Initial> initials;
  for (const auto& p : inventory.initials()) initials.push_back(p.id);
  std::vector<Tone> tones;
  for (const auto& t : inventory.tones()) tones.push_back(t.id);
  std::vector<Rhyme> rhymes;
  for (const auto& [word, ipa] : dictionary.entries()) {
    rhymes.push_back(g2p::DecomposeIpa(ipa).rhyme());
  }
  return Vocabulary(std::move(initials), std::move(rhymes), std::move(tones));
}

}  // namespace syllabic
