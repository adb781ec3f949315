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

#include "syllabic/g2p.h"

#include <algorithm>

#include "syllabic/errors.h"
#include "syllabic/p2g.h"
#include "syllabic/unicode.h"

namespace syllabic::g2p {
namespace {

template <typename Id>
struct Form {
  std::string text;
  Id id;
};

// Longest first by bytes, so "ngh" is tried before "ng" and "tʰ" before "t".
template <typename Id>
void SortLongestFirst(std::vector<Form<Id>>& forms) {
  std::stable_sort(forms.begin(), forms.end(),
                   [](const Form<Id>& a, const Form<Id>& b) {
                     if (a.text.size() != b.text.size()) {
                       return a.text.size() > b.text.size();
                     }
                     return a.text < b.text;
                   });
}

struct OrthographyTables {
  std::vector<Form<Initial>> initials;
  std::vector<Form<Vowel>> vowels;
  std::vector<Form<Final>> finals;
};

const OrthographyTables& Orthography() {
  static const OrthographyTables tables = [] {
    OrthographyTables t;
    const auto& inv = DefaultInventory();
    for (const auto& p : inv.initials()) {
      for (const auto& f : p.writing_forms) t.initials.push_back({f, p.id});
    }
    for (const auto& p : inv.vowels()) {
      for (const auto& f : p.writing_forms) t.vowels.push_back({f, p.id});
    }
    for (const auto& p : inv.finals()) {
      for (const auto& f : p.writing_forms) t.finals.push_back({f, p.id});
    }
    SortLongestFirst(t.initials);
    SortLongestFirst(t.vowels);
    SortLongestFirst(t.finals);
    return t;
  }();
  return tables;
}

struct IpaTables {
  std::vector<Form<Initial>> initials;
  std::vector<Form<Vowel>> vowels;
  std::vector<Form<Final>> finals;
  std::vector<Form<Tone>> tones;  // non-flat contours only
};

const IpaTables& Ipa() {
  static const IpaTables tables = [] {
    IpaTables t;
    const auto& inv = DefaultInventory();
    for (const auto& p : inv.initials()) t.initials.push_back({p.ipa, p.id});
    for (const auto& p : inv.vowels()) t.vowels.push_back({p.ipa, p.id});
    for (const auto& p : inv.finals()) t.finals.push_back({p.ipa, p.id});
    for (const auto& p : inv.tones()) {
      if (!p.ipa_contour.empty()) t.tones.push_back({p.ipa_contour, p.id});
    }
    SortLongestFirst(t.initials);
    SortLongestFirst(t.vowels);
    SortLongestFirst(t.finals);
    SortLongestFirst(t.tones);
    return t;
  }();
  return tables;
}

struct ToneSplit {
  Tone tone = Tone::kFlat;
  std::string base;
};

// Removes the (single) tone diacritic wherever it sits.
std::optional<ToneSplit> SplitTone(std::string_view word) {
  const auto& inv = DefaultInventory();
  std::u32string kept;
  ToneSplit split;
  int marks = 0;
  for (char32_t c : unicode::ToCodePoints(unicode::ToNfd(word))) {
    bool is_tone = false;
    for (const auto& t : inv.tones()) {
      if (t.diacritic != 0 && t.diacritic == c) {
        split.tone = t.id;
        is_tone = true;
        ++marks;
      }
    }
    if (!is_tone) kept.push_back(c);
  }
  if (marks > 1) return std::nullopt;
  split.base = unicode::ToNfc(unicode::ToUtf8(kept));
  return split;
}

// Spelling that differs from the canonical one only by y for the bare
// vowel /i/ (or i where y is canonical), e.g. "ky" for "ki".
bool IsIyVariant(const Syllable& s, const p2g::BaseSpelling& spelled,
                 std::string_view base) {
  if (s.vowel != Vowel::kI || s.glide || s.final || s.initial == Initial::kZ) {
    return false;
  }
  std::string swapped = spelled.text;
  char& letter = swapped[spelled.nucleus];
  if (letter == 'i') {
    letter = 'y';
  } else if (letter == 'y') {
    letter = 'i';
  } else {
    return false;
  }
  return swapped == base;
}

// Enumerates every split of base into writing forms and keeps the reading
// whose canonical spelling reproduces base. The enumeration order settles
// the few spellings with two readings (gi + ê reads as /z/ + /ie/).
std::optional<Syllable> ParseBase(std::string_view base) {
  const auto& tables = Orthography();
  std::optional<Syllable> variant;

  struct InitialOption {
    std::optional<Initial> id;
    std::size_t length;
  };
  std::vector<InitialOption> initial_options;
  for (const auto& f : tables.initials) {
    if (base.starts_with(f.text)) initial_options.push_back({f.id, f.text.size()});
  }
  initial_options.push_back({std::nullopt, 0});

  for (const auto& initial : initial_options) {
    const std::string_view rest = base.substr(initial.length);
    std::vector<std::string> rests;
    if (initial.id == Initial::kZ) {
      if (rest.starts_with("ê")) {
        rests = {"i" + std::string(rest), std::string(rest)};
      } else {
        rests = {std::string(rest), "i" + std::string(rest)};
      }
    } else {
      rests = {std::string(rest)};
    }

    for (const std::string& body : rests) {
      for (int with_glide = 0; with_glide < 2; ++with_glide) {
        std::string_view nucleus_part = body;
        std::optional<Glide> glide;
        if (with_glide) {
          if (!(body.starts_with('u') || body.starts_with('o'))) continue;
          glide = Glide::kW;
          nucleus_part.remove_prefix(1);
        }
        for (const auto& vowel : tables.vowels) {
          if (!nucleus_part.starts_with(vowel.text)) continue;
          const std::string_view coda = nucleus_part.substr(vowel.text.size());
          std::optional<Final> final;
          if (!coda.empty()) {
            auto it = std::find_if(tables.finals.begin(), tables.finals.end(),
                                   [&](const Form<Final>& f) { return f.text == coda; });
            if (it == tables.finals.end()) continue;
            final = it->id;
          }
          const Syllable candidate{initial.id, glide, vowel.id, final, Tone::kFlat};
          const p2g::BaseSpelling spelled = p2g::SpellBase(candidate);
          if (spelled.text == base) return candidate;
          if (!variant && IsIyVariant(candidate, spelled, base)) {
            variant = candidate;
          }
        }
      }
    }
  }
  return variant;
}

template <typename Id>
const Form<Id>* MatchPrefix(const std::vector<Form<Id>>& forms,
                            std::string_view s) {
  for (const auto& f : forms) {
    if (s.starts_with(f.text)) return &f;
  }
  return nullptr;
}

}  // namespace

std::optional<Syllable> TryAnalyzeOrthographic(std::string_view word) {
  if (word.empty()) return std::nullopt;
  auto split = SplitTone(word);
  if (!split || split->base.empty()) return std::nullopt;
  auto syllable = ParseBase(split->base);
  if (!syllable) return std::nullopt;
  syllable->tone = split->tone;
  return syllable;
}

Syllable AnalyzeOrthographic(std::string_view word) {
  auto syllable = TryAnalyzeOrthographic(word);
  if (!syllable) {
    throw Error(ErrorKind::kNotASyllable, "'" + std::string(word) + "'");
  }
  return *syllable;
}

NormalizedText NormalizeText(std::string_view raw) {
  NormalizedText out;
  const std::string folded = unicode::ToNfc(unicode::ToLower(raw));
  for (const auto& token : unicode::SplitWhitespace(folded)) {
    if (auto syllable = TryAnalyzeOrthographic(token)) {
      out.words.push_back(p2g::RenderSyllable(*syllable));
    } else {
      ++out.dropped;
    }
  }
  return out;
}

DictionaryBuild BuildDictionary(std::span<const std::string> words) {
  DictionaryBuild build;
  for (const auto& word : words) {
    const std::string folded = unicode::ToNfc(unicode::ToLower(word));
    if (auto syllable = TryAnalyzeOrthographic(folded)) {
      build.dictionary.Insert(p2g::RenderSyllable(*syllable),
                              SyllableIpa(*syllable));
    } else {
      build.rejected.push_back(word);
    }
  }
  return build;
}

std::pair<Tone, IpaCursor> GetTone(IpaCursor s) {
  for (const auto& t : Ipa().tones) {
    if (s.remaining().ends_with(t.text)) {
      return {t.id, s.DropSuffix(t.text.size())};
    }
  }
  return {Tone::kFlat, s};
}

std::pair<std::optional<Initial>, IpaCursor> GetInitial(IpaCursor s) {
  if (const auto* f = MatchPrefix(Ipa().initials, s.remaining())) {
    return {f->id, s.DropPrefix(f->text.size())};
  }
  return {std::nullopt, s};
}

std::pair<std::optional<Glide>, IpaCursor> GetGlide(IpaCursor s) {
  const std::string_view glide = IpaOf(Glide::kW);
  if (s.remaining().starts_with(glide)) {
    return {Glide::kW, s.DropPrefix(glide.size())};
  }
  return {std::nullopt, s};
}

std::pair<Vowel, IpaCursor> GetVowel(IpaCursor s) {
  if (const auto* f = MatchPrefix(Ipa().vowels, s.remaining())) {
    return {f->id, s.DropPrefix(f->text.size())};
  }
  throw Error(ErrorKind::kMalformedIpa,
              "no vowel at '" + std::string(s.remaining()) + "'");
}

std::optional<Final> GetFinal(IpaCursor s) {
  if (s.empty()) return std::nullopt;
  for (const auto& f : Ipa().finals) {
    if (s.remaining() == f.text) return f.id;
  }
  throw Error(ErrorKind::kMalformedIpa,
              "unconsumed '" + std::string(s.remaining()) + "'");
}

Syllable DecomposeIpa(std::string_view ipa) {
  IpaCursor s(ipa);
  Syllable syllable;
  std::tie(syllable.tone, s) = GetTone(s);
  std::tie(syllable.initial, s) = GetInitial(s);
  std::tie(syllable.glide, s) = GetGlide(s);
  std::tie(syllable.vowel, s) = GetVowel(s);
  syllable.final = GetFinal(s);
  return syllable;
}

TokenizeResult Tokenize(std::string_view transcript,
                        const Dictionary& dictionary,
                        const Vocabulary& vocabulary, OovPolicy policy) {
  NormalizedText normalized = NormalizeText(transcript);
  TokenizeResult result;
  result.dropped = normalized.dropped;
  result.words.reserve(normalized.words.size());
  result.triplets.reserve(normalized.words.size());
  for (auto& word : normalized.words) {
    const std::string* ipa = dictionary.Find(word);
    if (ipa == nullptr) {
      if (policy == OovPolicy::kFail) {
        throw Error(ErrorKind::kOutOfDictionary, "'" + word + "'");
      }
      ++result.dropped;
      continue;
    }
    result.triplets.push_back(vocabulary.Encode(DecomposeIpa(*ipa)));
    result.words.push_back(std::move(word));
  }
  return result;
}

}  // namespace syllabic::g2p
