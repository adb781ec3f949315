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

#ifndef SYLLABIC_G2P_H_
#define SYLLABIC_G2P_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syllabic/dictionary.h"
#include "syllabic/inventory.h"
#include "syllabic/vocabulary.h"

namespace syllabic::g2p {

struct NormalizedText {
  std::vector<std::string> words;
  std::size_t dropped = 0;
};

// NFC, lowercase, whitespace split. Tokens that are not Vietnamese
// syllables are dropped and counted; retained tokens are rewritten to
// their canonical spelling (tone mark on the nucleus, i/y free variants
// after a consonant spelled with i), so equal syllables compare equal.
NormalizedText NormalizeText(std::string_view raw);

// Decomposes one normalized token. Throws Error(kNotASyllable) when no
// reading consumes the whole token.
Syllable AnalyzeOrthographic(std::string_view word);
std::optional<Syllable> TryAnalyzeOrthographic(std::string_view word);

struct DictionaryBuild {
  Dictionary dictionary;
  std::vector<std::string> rejected;  // words with no syllable reading
};

DictionaryBuild BuildDictionary(std::span<const std::string> words);

// Read position over a dictionary value. The sub-procedures below consume
// from the prefix (initial, glide, vowel) or the suffix (tone) and leave
// the rest for the next step.
class IpaCursor {
 public:
  explicit IpaCursor(std::string_view ipa) : remaining_(ipa) {}

  std::string_view remaining() const { return remaining_; }
  bool empty() const { return remaining_.empty(); }

  IpaCursor DropPrefix(std::size_t bytes) const {
    return IpaCursor(remaining_.substr(bytes));
  }
  IpaCursor DropSuffix(std::size_t bytes) const {
    return IpaCursor(remaining_.substr(0, remaining_.size() - bytes));
  }

 private:
  std::string_view remaining_;
};

// Flat when no contour suffix matches.
std::pair<Tone, IpaCursor> GetTone(IpaCursor s);
std::pair<std::optional<Initial>, IpaCursor> GetInitial(IpaCursor s);
std::pair<std::optional<Glide>, IpaCursor> GetGlide(IpaCursor s);
// Throws Error(kMalformedIpa) when no vowel starts the cursor.
std::pair<Vowel, IpaCursor> GetVowel(IpaCursor s);
// The cursor must hold exactly one final or nothing; anything else throws
// Error(kMalformedIpa).
std::optional<Final> GetFinal(IpaCursor s);

// tone, initial, glide, vowel, final, in that order.
Syllable DecomposeIpa(std::string_view ipa);

enum class OovPolicy { kSkip, kFail };

struct TokenizeResult {
  std::vector<std::string> words;  // retained words, one per triplet
  std::vector<SyllableTriplet> triplets;
  std::size_t dropped = 0;         // noise tokens plus skipped OOV words
};

// Throws Error(kOutOfDictionary) under OovPolicy::kFail.
TokenizeResult Tokenize(std::string_view transcript,
                        const Dictionary& dictionary,
                        const Vocabulary& vocabulary,
                        OovPolicy policy = OovPolicy::kSkip);

}  // namespace syllabic::g2p

#endif  // SYLLABIC_G2P_H_
