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

#ifndef SYLLABIC_INVENTORY_H_
#define SYLLABIC_INVENTORY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace syllabic {

// Closed phoneme sets of the Vietnamese syllable. Enumerator order is the
// canonical inventory order; it is not the vocabulary id order.
enum class Initial : std::uint8_t {
  kB, kT, kTh, kK, kF, kD, kG, kZ, kJ, kS, kSr, kCh, kTr, kNg, kKh, kV,
  kN, kM, kNh, kR, kL, kH,
};
enum class Glide : std::uint8_t { kW };
enum class Vowel : std::uint8_t {
  kIe, kUo, kUoUnrounded,                        // diphthongs
  kA, kAShort, kSchwaShort, kI, kOpenE, kE, kU,  // monophthongs
  kUUnrounded, kO, kOpenO, kLongOpenO, kSchwa,
};
enum class Final : std::uint8_t {
  kN, kT, kM, kP, kNg, kK, kNh, kC, kW, kJ,
};
enum class Tone : std::uint8_t {
  kFlat, kLowFalling, kMidRaising, kMidFalling, kMidGlottalRaising,
  kMidGlottalFalling,
};

inline constexpr std::size_t kNumInitials = 22;
inline constexpr std::size_t kNumVowels = 15;
inline constexpr std::size_t kNumFinals = 10;
inline constexpr std::size_t kNumTones = 6;

// Writing forms are ordered longest first (in code points), ties broken by
// byte order. rule_id names the context rule that picks among several forms;
// empty when the form is unique.
struct InitialPhoneme {
  Initial id;
  std::string ipa;
  std::vector<std::string> writing_forms;
  std::string rule_id;
};

struct GlidePhoneme {
  Glide id;
  std::string ipa;
  std::vector<std::string> writing_forms;
  std::string rule_id;
};

struct VowelPhoneme {
  Vowel id;
  std::string ipa;
  bool is_diphthong;
  std::vector<std::string> writing_forms;
  std::string rule_id;
};

struct FinalPhoneme {
  Final id;
  std::string ipa;
  std::vector<std::string> writing_forms;
  std::string rule_id;
};

struct TonePhoneme {
  Tone id;
  std::string name;         // e.g. "low_falling"
  std::string ipa_contour;  // empty for the flat tone
  char32_t diacritic;       // combining mark, 0 for the flat tone
};

class PhonemeInventory {
 public:
  PhonemeInventory(std::vector<InitialPhoneme> initials, GlidePhoneme glide,
                   std::vector<VowelPhoneme> vowels,
                   std::vector<FinalPhoneme> finals,
                   std::vector<TonePhoneme> tones);

  std::span<const InitialPhoneme> initials() const { return initials_; }
  std::span<const GlidePhoneme> glides() const { return {&glide_, 1}; }
  std::span<const VowelPhoneme> vowels() const { return vowels_; }
  std::span<const FinalPhoneme> finals() const { return finals_; }
  std::span<const TonePhoneme> tones() const { return tones_; }

  const InitialPhoneme& initial(Initial id) const;
  const GlidePhoneme& glide(Glide) const { return glide_; }
  const VowelPhoneme& vowel(Vowel id) const;
  const FinalPhoneme& final_of(Final id) const;
  const TonePhoneme& tone(Tone id) const;

  // One row per phoneme: ipa, class, comma-joined writing forms, rule id.
  std::string ToTsv() const;

  bool operator==(const PhonemeInventory&) const = default;

 private:
  std::vector<InitialPhoneme> initials_;
  GlidePhoneme glide_;
  std::vector<VowelPhoneme> vowels_;
  std::vector<FinalPhoneme> finals_;
  std::vector<TonePhoneme> tones_;
};

PhonemeInventory BuildDefaultInventory();

// Process-wide immutable instance of BuildDefaultInventory().
const PhonemeInventory& DefaultInventory();

struct Rhyme {
  std::optional<Glide> glide;
  Vowel vowel = Vowel::kA;
  std::optional<Final> final;

  bool operator==(const Rhyme&) const = default;
};

struct Syllable {
  std::optional<Initial> initial;
  std::optional<Glide> glide;
  Vowel vowel = Vowel::kA;
  std::optional<Final> final;
  Tone tone = Tone::kFlat;

  Rhyme rhyme() const { return {glide, vowel, final}; }
  bool operator==(const Syllable&) const = default;
};

std::string_view IpaOf(Initial id);
std::string_view IpaOf(Glide id);
std::string_view IpaOf(Vowel id);
std::string_view IpaOf(Final id);
std::string_view IpaOf(Tone id);
std::string_view ToneName(Tone id);

// glide·vowel·final
std::string RhymeIpa(const Rhyme& rhyme);

// initial·glide·vowel·final·tone; the serialized dictionary value.
std::string SyllableIpa(const Syllable& syllable);

// Readable form used in diagnostics, e.g. "(h, w̯, a, ŋ, low_falling)".
std::string DescribeSyllable(const Syllable& syllable);

}  // namespace syllabic

#endif  // SYLLABIC_INVENTORY_H_
