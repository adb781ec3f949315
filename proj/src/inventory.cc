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

#include "syllabic/inventory.h"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "syllabic/unicode.h"

namespace syllabic {
namespace {

std::vector<std::string> Forms(std::vector<std::string> forms) {
  std::sort(forms.begin(), forms.end(),
            [](const std::string& a, const std::string& b) {
              const auto la = unicode::ToCodePoints(a).size();
              const auto lb = unicode::ToCodePoints(b).size();
              if (la != lb) return la > lb;
              return a < b;
            });
  return forms;
}

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ',';
    out += item;
  }
  return out;
}

template <typename Record, typename Id>
void CheckDense(const std::vector<Record>& records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (static_cast<std::size_t>(records[i].id) != i) {
      throw std::logic_error("inventory ids are not dense");
    }
  }
}

}  // namespace

PhonemeInventory::PhonemeInventory(std::vector<InitialPhoneme> initials,
                                   GlidePhoneme glide,
                                   std::vector<VowelPhoneme> vowels,
                                   std::vector<FinalPhoneme> finals,
                                   std::vector<TonePhoneme> tones)
    : initials_(std::move(initials)),
      glide_(std::move(glide)),
      vowels_(std::move(vowels)),
      finals_(std::move(finals)),
      tones_(std::move(tones)) {
  CheckDense<InitialPhoneme, Initial>(initials_);
  CheckDense<VowelPhoneme, Vowel>(vowels_);
  CheckDense<FinalPhoneme, Final>(finals_);
  CheckDense<TonePhoneme, Tone>(tones_);
}

const InitialPhoneme& PhonemeInventory::initial(Initial id) const {
  return initials_.at(static_cast<std::size_t>(id));
}

const VowelPhoneme& PhonemeInventory::vowel(Vowel id) const {
  return vowels_.at(static_cast<std::size_t>(id));
}

const FinalPhoneme& PhonemeInventory::final_of(Final id) const {
  return finals_.at(static_cast<std::size_t>(id));
}

const TonePhoneme& PhonemeInventory::tone(Tone id) const {
  return tones_.at(static_cast<std::size_t>(id));
}

std::string PhonemeInventory::ToTsv() const {
  std::ostringstream out;
  out << "ipa\tclass\twriting_forms\trule\n";
  for (const auto& p : initials_) {
    out << p.ipa << "\tinitial\t" << Join(p.writing_forms) << '\t'
        << p.rule_id << '\n';
  }
  out << glide_.ipa << "\tglide\t" << Join(glide_.writing_forms) << '\t'
      << glide_.rule_id << '\n';
  for (const auto& p : vowels_) {
    out << p.ipa << (p.is_diphthong ? "\tdiphthong\t" : "\tmonophthong\t")
        << Join(p.writing_forms) << '\t' << p.rule_id << '\n';
  }
  for (const auto& p : finals_) {
    out << p.ipa << "\tfinal\t" << Join(p.writing_forms) << '\t' << p.rule_id
        << '\n';
  }
  for (const auto& t : tones_) {
    std::string mark;
    if (t.diacritic != 0) mark = unicode::ToNfc(unicode::ToUtf8(std::u32string{U'a', t.diacritic}));
    else mark = "a";
    out << t.ipa_contour << "\ttone:" << t.name << '\t' << mark << "\t\n";
  }
  return out.str();
}

PhonemeInventory BuildDefaultInventory() {
  using I = Initial;
  std::vector<InitialPhoneme> initials = {
      {I::kB, "b", Forms({"b"}), ""},
      {I::kT, "t", Forms({"t"}), ""},
      {I::kTh, "tʰ", Forms({"th"}), ""},
      {I::kK, "k", Forms({"k", "c", "q"}), "initial-k"},
      {I::kF, "f", Forms({"ph"}), ""},
      {I::kD, "d", Forms({"đ"}), ""},
      {I::kG, "ɣ", Forms({"gh", "g"}), "initial-g"},
      {I::kZ, "z", Forms({"gi"}), "initial-gi"},
      {I::kJ, "j", Forms({"d"}), ""},
      {I::kS, "s", Forms({"x"}), ""},
      {I::kSr, "ʂ", Forms({"s"}), ""},
      {I::kCh, "tɕ", Forms({"ch"}), ""},
      {I::kTr, "ʈʂ", Forms({"tr"}), ""},
      {I::kNg, "ŋ", Forms({"ngh", "ng"}), "initial-ng"},
      {I::kKh, "x", Forms({"kh"}), ""},
      {I::kV, "v", Forms({"v"}), ""},
      {I::kN, "n", Forms({"n"}), ""},
      {I::kM, "m", Forms({"m"}), ""},
      {I::kNh, "ɲ", Forms({"nh"}), ""},
      {I::kR, "r", Forms({"r"}), ""},
      {I::kL, "l", Forms({"l"}), ""},
      {I::kH, "h", Forms({"h"}), ""},
  };

  GlidePhoneme glide{Glide::kW, "w̯", Forms({"u", "o"}), "glide"};

  using V = Vowel;
  std::vector<VowelPhoneme> vowels = {
      {V::kIe, "ie", true, Forms({"iê", "yê", "ia", "ya"}), "vowel-ie"},
      {V::kUo, "uo", true, Forms({"uô", "ua"}), "vowel-uo"},
      {V::kUoUnrounded, "ɯə", true, Forms({"ươ", "ưa"}), "vowel-uo-unrounded"},
      {V::kA, "a", false, Forms({"a"}), ""},
      {V::kAShort, "ă", false, Forms({"ă", "a"}), "vowel-a-short"},
      {V::kSchwaShort, "ə̆", false, Forms({"â"}), ""},
      {V::kI, "i", false, Forms({"i", "y"}), "vowel-i"},
      {V::kOpenE, "ɛ", false, Forms({"e"}), ""},
      {V::kE, "e", false, Forms({"ê"}), ""},
      {V::kU, "u", false, Forms({"u"}), ""},
      {V::kUUnrounded, "ɯ", false, Forms({"ư"}), ""},
      {V::kO, "o", false, Forms({"ô"}), ""},
      {V::kOpenO, "ɔ", false, Forms({"o"}), ""},
      {V::kLongOpenO, "ɔː", false, Forms({"oo"}), ""},
      {V::kSchwa, "ə", false, Forms({"ơ"}), ""},
  };

  using F = Final;
  std::vector<FinalPhoneme> finals = {
      {F::kN, "n", Forms({"n"}), ""},
      {F::kT, "t", Forms({"t"}), ""},
      {F::kM, "m", Forms({"m"}), ""},
      {F::kP, "p", Forms({"p"}), ""},
      {F::kNg, "ŋ", Forms({"ng"}), ""},
      {F::kK, "k", Forms({"c"}), ""},
      {F::kNh, "ɲ", Forms({"nh"}), ""},
      {F::kC, "c", Forms({"ch"}), ""},
      {F::kW, "u̯", Forms({"u", "o"}), "final-w"},
      {F::kJ, "i̯", Forms({"i", "y"}), "final-j"},
  };

  // The dot below binds to the glottalized contour ending high (as in
  // "kiệm"); the tilde takes the one ending low.
  using T = Tone;
  std::vector<TonePhoneme> tones = {
      {T::kFlat, "flat", "", 0},
      {T::kLowFalling, "low_falling", "˨˨˩˩", U'\u0300'},
      {T::kMidRaising, "mid_raising", "˧˧˥˥", U'\u0301'},
      {T::kMidFalling, "mid_falling", "˧˧˩˩", U'\u0309'},
      {T::kMidGlottalRaising, "mid_glottal_raising", "˧˧ʔ˥˥", U'\u0323'},
      {T::kMidGlottalFalling, "mid_glottal_falling", "˧˧ʔ˩˩", U'\u0303'},
  };

  return PhonemeInventory(std::move(initials), std::move(glide),
                          std::move(vowels), std::move(finals),
                          std::move(tones));
}

const PhonemeInventory& DefaultInventory() {
  static const PhonemeInventory inventory = BuildDefaultInventory();
  return inventory;
}

std::string_view IpaOf(Initial id) { return DefaultInventory().initial(id).ipa; }
std::string_view IpaOf(Glide id) { return DefaultInventory().glide(id).ipa; }
std::string_view IpaOf(Vowel id) { return DefaultInventory().vowel(id).ipa; }
std::string_view IpaOf(Final id) { return DefaultInventory().final_of(id).ipa; }
std::string_view IpaOf(Tone id) { return DefaultInventory().tone(id).ipa_contour; }
std::string_view ToneName(Tone id) { return DefaultInventory().tone(id).name; }

std::string RhymeIpa(const Rhyme& rhyme) {
  std::string out;
  if (rhyme.glide) out += IpaOf(*rhyme.glide);
  out += IpaOf(rhyme.vowel);
  if (rhyme.final) out += IpaOf(*rhyme.final);
  return out;
}

std::string SyllableIpa(const Syllable& syllable) {
  std::string out;
  if (syllable.initial) out += IpaOf(*syllable.initial);
  out += RhymeIpa(syllable.rhyme());
  out += IpaOf(syllable.tone);
  return out;
}

std::string DescribeSyllable(const Syllable& s) {
  std::string out = "(";
  out += s.initial ? std::string(IpaOf(*s.initial)) : "∅";
  out += ", ";
  out += s.glide ? std::string(IpaOf(*s.glide)) : "∅";
  out += ", ";
  out += IpaOf(s.vowel);
  out += ", ";
  out += s.final ? std::string(IpaOf(*s.final)) : "∅";
  out += ", ";
  out += ToneName(s.tone);
  out += ")";
  return out;
}

}  // namespace syllabic
