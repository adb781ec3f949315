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

#ifndef SYLLABIC_P2G_H_
#define SYLLABIC_P2G_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "syllabic/inventory.h"
#include "syllabic/vocabulary.h"

namespace syllabic::p2g {

// Context rules for phonemes with several writing forms. Front vowels are
// /i, e, ɛ, ie/ directly after the initial.
std::string ChooseInitialGrapheme(Initial initial, const Rhyme& rhyme);
std::string ChooseGlideGrapheme(Glide glide, Vowel following,
                                std::optional<Initial> initial);
std::string ChooseVowelGrapheme(Vowel vowel, const Rhyme& rhyme,
                                std::optional<Initial> initial);
std::string ChooseFinalGrapheme(Final final, Vowel vowel);

// Toneless spelling plus the byte offset of the letter that carries the
// tone mark.
struct BaseSpelling {
  std::string text;
  std::size_t nucleus = 0;

  bool operator==(const BaseSpelling&) const = default;
};

BaseSpelling SpellBase(const Syllable& syllable);

// Attaches the tone diacritic to the nucleus of a toneless spelling and
// returns NFC text. Throws Error(kNoNucleus) if base has no vowel letter.
std::string PlaceToneMark(std::string_view base, Tone tone);
std::string PlaceToneMark(const BaseSpelling& base, Tone tone);

std::string RenderSyllable(const Syllable& syllable);

// Words joined by single spaces. Throws Error(kUnknownId).
std::string Detokenize(std::span<const SyllableTriplet> triplets,
                       const Vocabulary& vocabulary);

}  // namespace syllabic::p2g

#endif  // SYLLABIC_P2G_H_
