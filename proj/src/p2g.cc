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

#include "syllabic/p2g.h"

#include <algorithm>

#include "syllabic/errors.h"
#include "syllabic/g2p.h"
#include "syllabic/unicode.h"

namespace syllabic::p2g {
namespace {

bool IsFrontVowel(Vowel v) {
  return v == Vowel::kI || v == Vowel::kE || v == Vowel::kOpenE ||
         v == Vowel::kIe;
}

// Code point index of the tone-bearing letter inside a vowel writing form.
std::size_t NucleusIndex(std::string_view form) {
  if (form == "iê" || form == "yê" || form == "uô" || form == "ươ" ||
      form == "oo") {
    return 1;
  }
  return 0;
}

std::size_t ByteOffsetOfCodePoint(std::string_view text, std::size_t index) {
  std::size_t offset = 0;
  for (std::size_t i = 0; i < index; ++i) {
    offset += unicode::CodePointLength(text, offset);
  }
  return offset;
}

bool IsVowelLetter(char32_t c) {
  static constexpr std::u32string_view kLetters = U"aăâeêioôơuưy";
  return kLetters.find(c) != std::u32string_view::npos;
}

bool HasShapeMark(char32_t c) {
  static constexpr std::u32string_view kLetters = U"ăâêôơư";
  return kLetters.find(c) != std::u32string_view::npos;
}

// Conventional placement for strings that are not a canonical syllable
// spelling: a shaped letter wins, then the last letter of a closed vowel
// run, then the second-to-last of an open one.
std::size_t FallbackNucleus(std::string_view base) {
  const std::u32string cps = unicode::ToCodePoints(base);
  std::size_t start = cps.size();
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (IsVowelLetter(cps[i])) {
      start = i;
      break;
    }
  }
  if (start == cps.size()) {
    throw Error(ErrorKind::kNoNucleus,
                "no vowel letter in '" + std::string(base) + "'");
  }
  std::size_t end = start;
  while (end < cps.size() && IsVowelLetter(cps[end])) ++end;
  std::size_t pick = start;
  bool shaped = false;
  for (std::size_t i = start; i < end; ++i) {
    if (HasShapeMark(cps[i])) {
      pick = i;
      shaped = true;
    }
  }
  if (!shaped && end - start > 1) {
    pick = end < cps.size() ? end - 1 : end - 2;
  }
  return ByteOffsetOfCodePoint(base, pick);
}

}  // namespace

std::string ChooseInitialGrapheme(Initial initial, const Rhyme& rhyme) {
  const bool front = !rhyme.glide && IsFrontVowel(rhyme.vowel);
  switch (initial) {
    case Initial::kK:
      if (rhyme.glide) return "q";
      return front ? "k" : "c";
    case Initial::kG:
      return front ? "gh" : "g";
    case Initial::kNg:
      return front ? "ngh" : "ng";
    default:
      return DefaultInventory().initial(initial).writing_forms.front();
  }
}

std::string ChooseGlideGrapheme(Glide, Vowel following,
                                std::optional<Initial> initial) {
  if (initial == Initial::kK) return "u";
  if (following == Vowel::kA || following == Vowel::kAShort ||
      following == Vowel::kOpenE) {
    return "o";
  }
  return "u";
}

std::string ChooseVowelGrapheme(Vowel vowel, const Rhyme& rhyme,
                                std::optional<Initial> initial) {
  const bool has_final = rhyme.final.has_value();
  const bool has_glide = rhyme.glide.has_value();
  switch (vowel) {
    case Vowel::kIe:
      if (has_final) return (has_glide || !initial) ? "yê" : "iê";
      return has_glide ? "ya" : "ia";
    case Vowel::kUo:
      return has_final ? "uô" : "ua";
    case Vowel::kUoUnrounded:
      return has_final ? "ươ" : "ưa";
    case Vowel::kAShort:
      return (rhyme.final == Final::kW || rhyme.final == Final::kJ) ? "a" : "ă";
    case Vowel::kI:
      if (has_glide) return "y";
      if (has_final) return "i";
      return initial ? "i" : "y";
    default:
      return DefaultInventory().vowel(vowel).writing_forms.front();
  }
}

std::string ChooseFinalGrapheme(Final final, Vowel vowel) {
  switch (final) {
    case Final::kJ:
      return (vowel == Vowel::kAShort || vowel == Vowel::kSchwaShort) ? "y"
                                                                      : "i";
    case Final::kW:
      return (vowel == Vowel::kA || vowel == Vowel::kOpenE ||
              vowel == Vowel::kLongOpenO)
                 ? "o"
                 : "u";
    default:
      return DefaultInventory().final_of(final).writing_forms.front();
  }
}

BaseSpelling SpellBase(const Syllable& s) {
  const Rhyme rhyme = s.rhyme();
  std::string initial =
      s.initial ? ChooseInitialGrapheme(*s.initial, rhyme) : std::string();
  std::string glide =
      s.glide ? ChooseGlideGrapheme(*s.glide, s.vowel, s.initial) : std::string();
  std::string vowel = ChooseVowelGrapheme(s.vowel, rhyme, s.initial);
  std::string final = s.final ? ChooseFinalGrapheme(*s.final, s.vowel)
                              : std::string();

  std::size_t nucleus_index = NucleusIndex(vowel);
  std::size_t nucleus;
  // "gi" shares its i with a following i-initial vowel spelling.
  if (s.initial == Initial::kZ && !s.glide && vowel.front() == 'i') {
    vowel.erase(0, 1);
    if (nucleus_index == 0) {
      nucleus = initial.size() - 1;
    } else {
      nucleus = initial.size() + ByteOffsetOfCodePoint(vowel, nucleus_index - 1);
    }
  } else {
    nucleus = initial.size() + glide.size() +
              ByteOffsetOfCodePoint(vowel, nucleus_index);
  }
  return {initial + glide + vowel + final, nucleus};
}

std::string PlaceToneMark(const BaseSpelling& base, Tone tone) {
  const char32_t mark = DefaultInventory().tone(tone).diacritic;
  if (mark == 0) return unicode::ToNfc(base.text);
  if (base.nucleus >= base.text.size()) {
    throw Error(ErrorKind::kNoNucleus, "nucleus outside '" + base.text + "'");
  }
  const std::size_t after =
      base.nucleus + unicode::CodePointLength(base.text, base.nucleus);
  std::string marked = base.text.substr(0, after);
  marked += unicode::ToUtf8(std::u32string(1, mark));
  marked += base.text.substr(after);
  return unicode::ToNfc(marked);
}

std::string PlaceToneMark(std::string_view base, Tone tone) {
  const std::string text = unicode::ToNfc(base);
  if (auto syllable = g2p::TryAnalyzeOrthographic(text)) {
    syllable->tone = Tone::kFlat;
    BaseSpelling spelled = SpellBase(*syllable);
    if (spelled.text == text) return PlaceToneMark(spelled, tone);
  }
  const std::size_t nucleus = FallbackNucleus(text);
  if (tone == Tone::kFlat) return text;
  return PlaceToneMark(BaseSpelling{text, nucleus}, tone);
}

std::string RenderSyllable(const Syllable& syllable) {
  return PlaceToneMark(SpellBase(syllable), syllable.tone);
}

std::string Detokenize(std::span<const SyllableTriplet> triplets,
                       const Vocabulary& vocabulary) {
  std::string out;
  for (const auto& triplet : triplets) {
    if (!out.empty()) out += ' ';
    out += RenderSyllable(vocabulary.Decode(triplet));
  }
  return out;
}

}  // namespace syllabic::p2g
