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

#include <set>
#include <string>

#include <gtest/gtest.h>

namespace syllabic {
namespace {

std::size_t CountForms(const auto& phonemes) {
  std::size_t n = 0;
  for (const auto& p : phonemes) n += p.writing_forms.size();
  return n;
}

TEST(InventoryTest, Cardinalities) {
  const PhonemeInventory& inv = DefaultInventory();
  EXPECT_EQ(inv.initials().size(), 22u);
  EXPECT_EQ(inv.glides().size(), 1u);
  EXPECT_EQ(inv.vowels().size(), 15u);
  EXPECT_EQ(inv.finals().size(), 10u);
  EXPECT_EQ(inv.tones().size(), 6u);
  EXPECT_EQ(CountForms(inv.initials()), 26u);
  EXPECT_EQ(CountForms(inv.finals()), 12u);
  EXPECT_EQ(inv.glides()[0].writing_forms.size(), 2u);
}

TEST(InventoryTest, IpaSymbolsAreUnique) {
  const PhonemeInventory& inv = DefaultInventory();
  std::set<std::string> initials, vowels, finals;
  for (const auto& p : inv.initials()) initials.insert(p.ipa);
  for (const auto& p : inv.vowels()) vowels.insert(p.ipa);
  for (const auto& p : inv.finals()) finals.insert(p.ipa);
  EXPECT_EQ(initials.size(), inv.initials().size());
  EXPECT_EQ(vowels.size(), inv.vowels().size());
  EXPECT_EQ(finals.size(), inv.finals().size());
}

TEST(InventoryTest, ThreeDiphthongs) {
  std::set<std::string> diphthongs;
  for (const auto& v : DefaultInventory().vowels()) {
    if (v.is_diphthong) diphthongs.insert(v.ipa);
  }
  EXPECT_EQ(diphthongs, (std::set<std::string>{"ie", "uo", "ɯə"}));
  const auto& ie = DefaultInventory().vowel(Vowel::kIe);
  EXPECT_EQ(std::set<std::string>(ie.writing_forms.begin(), ie.writing_forms.end()),
            (std::set<std::string>{"iê", "yê", "ia", "ya"}));
}

TEST(InventoryTest, WritingFormsSortedLongestFirst) {
  for (const auto& p : DefaultInventory().initials()) {
    for (std::size_t i = 1; i < p.writing_forms.size(); ++i) {
      EXPECT_GE(p.writing_forms[i - 1].size(), p.writing_forms[i].size()) << p.ipa;
    }
  }
  const auto& k = DefaultInventory().initial(Initial::kK);
  EXPECT_EQ(std::set<std::string>(k.writing_forms.begin(), k.writing_forms.end()),
            (std::set<std::string>{"k", "c", "q"}));
}

TEST(InventoryTest, FlatToneHasNoMark) {
  const auto& flat = DefaultInventory().tone(Tone::kFlat);
  EXPECT_TRUE(flat.ipa_contour.empty());
  EXPECT_EQ(flat.diacritic, 0);
  std::set<char32_t> marks;
  for (const auto& t : DefaultInventory().tones()) {
    if (t.id != Tone::kFlat) marks.insert(t.diacritic);
  }
  EXPECT_EQ(marks, (std::set<char32_t>{0x300, 0x301, 0x303, 0x309, 0x323}));
}

TEST(InventoryTest, SyllableEqualityIsComponentWise) {
  Syllable a{Initial::kH, Glide::kW, Vowel::kA, Final::kNg, Tone::kLowFalling};
  Syllable b = a;
  EXPECT_EQ(a, b);
  b.tone = Tone::kFlat;
  EXPECT_NE(a, b);
  EXPECT_EQ(SyllableIpa(a), "hw̯aŋ˨˨˩˩");
  EXPECT_EQ(RhymeIpa(a.rhyme()), "w̯aŋ");
}

TEST(InventoryTest, TsvHasOneRowPerPhoneme) {
  const std::string tsv = DefaultInventory().ToTsv();
  EXPECT_EQ(static_cast<std::size_t>(std::count(tsv.begin(), tsv.end(), '\n')),
            1u + 22u + 1u + 15u + 10u + 6u);  // header row first
}

}  // namespace
}  // namespace syllabic
