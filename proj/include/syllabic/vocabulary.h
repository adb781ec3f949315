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

#ifndef SYLLABIC_VOCABULARY_H_
#define SYLLABIC_VOCABULARY_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syllabic/dictionary.h"
#include "syllabic/inventory.h"

namespace syllabic {

// Reserved ids, identical in all three tables. kNoneInitialId exists only
// in the initial table; the tone table reuses its flat entry for "no tone"
// and the rhyme table has no "none" entry because the vowel is mandatory.
inline constexpr int kPadId = 0;
inline constexpr int kBosId = 1;
inline constexpr int kEosId = 2;
inline constexpr int kNoneInitialId = 3;

struct SyllableTriplet {
  int initial_id = kPadId;
  int rhyme_id = kPadId;
  int tone_id = kPadId;

  bool operator==(const SyllableTriplet&) const = default;
};

// Dense id tables for initials, rhymes and tones. Content entries follow the
// specials and are ordered by IPA byte order.
class Vocabulary {
 public:
  Vocabulary(std::vector<Initial> initials, std::vector<Rhyme> rhymes,
             std::vector<Tone> tones);

  // Table sizes including the reserved ids; these are V_i, V_r, V_t.
  int initial_size() const;
  int rhyme_size() const;
  int tone_size() const;

  int initial_content_size() const { return static_cast<int>(initials_.size()); }
  int rhyme_content_size() const { return static_cast<int>(rhymes_.size()); }
  int tone_content_size() const { return static_cast<int>(tones_.size()); }

  int first_initial_id() const { return kNoneInitialId + 1; }
  int first_rhyme_id() const { return kEosId + 1; }
  int first_tone_id() const { return kEosId + 1; }
  int tone_none_id() const { return EncodeTone(Tone::kFlat); }

  // Encoders throw Error(kUnknownId) for symbols outside the table.
  int EncodeInitial(std::optional<Initial> initial) const;
  int EncodeRhyme(const Rhyme& rhyme) const;
  int EncodeTone(Tone tone) const;
  SyllableTriplet Encode(const Syllable& syllable) const;

  // Decoders throw Error(kUnknownId) for out-of-range or reserved ids.
  std::optional<Initial> DecodeInitial(int id) const;
  Rhyme DecodeRhyme(int id) const;
  Tone DecodeTone(int id) const;
  Syllable Decode(const SyllableTriplet& triplet) const;

  // Display symbol for any id, including the reserved ones ("<pad>" ...).
  std::string InitialSymbol(int id) const;
  std::string RhymeSymbol(int id) const;
  std::string ToneSymbol(int id) const;

  // "table<TAB>id<TAB>symbol" rows.
  std::string ToTsv() const;

 private:
  std::vector<Initial> initials_;
  std::vector<Rhyme> rhymes_;
  std::vector<Tone> tones_;
  std::map<std::string, int> rhyme_ids_;  // keyed by RhymeIpa
};

// Initial and tone tables cover the whole inventory; the rhyme table holds
// the distinct rhymes found in the dictionary values. Throws
// Error(kEmptyDictionary) for an empty dictionary and Error(kMalformedIpa)
// when a value does not decompose.
Vocabulary BuildVocabulary(const PhonemeInventory& inventory,
                           const Dictionary& dictionary);

}  // namespace syllabic

#endif  // SYLLABIC_VOCABULARY_H_
