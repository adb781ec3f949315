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

#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "syllabic/errors.h"
#include "syllabic/p2g.h"

namespace syllabic::g2p {
namespace {

std::vector<std::string> SeedCorpus() {
  std::ifstream in(SYLLABIC_TEST_DATA "/seed_corpus.txt");
  std::vector<std::string> words;
  for (std::string w; std::getline(in, w);) {
    if (!w.empty()) words.push_back(w);
  }
  return words;
}

TEST(G2pTest, Hoang) {
  const Syllable s = AnalyzeOrthographic("hoàng");
  EXPECT_EQ(s.initial, Initial::kH);
  EXPECT_EQ(s.glide, Glide::kW);
  EXPECT_EQ(s.vowel, Vowel::kA);
  EXPECT_EQ(s.final, Final::kNg);
  EXPECT_EQ(s.tone, Tone::kLowFalling);
}

TEST(G2pTest, KiemCarriesDotTone) {
  const Syllable s = AnalyzeOrthographic("kiệm");
  EXPECT_EQ(s.initial, Initial::kK);
  EXPECT_EQ(s.vowel, Vowel::kIe);
  EXPECT_EQ(s.final, Final::kM);
  EXPECT_EQ(s.tone, Tone::kMidGlottalRaising);
}

TEST(G2pTest, DigraphsAndTrigraphs) {
  EXPECT_EQ(AnalyzeOrthographic("nghĩa").initial, Initial::kNg);
  EXPECT_EQ(AnalyzeOrthographic("nghĩa").vowel, Vowel::kIe);
  EXPECT_EQ(AnalyzeOrthographic("ghét").initial, Initial::kG);
  EXPECT_EQ(AnalyzeOrthographic("thức").initial, Initial::kTh);
  EXPECT_EQ(AnalyzeOrthographic("trùng").initial, Initial::kTr);
  EXPECT_EQ(AnalyzeOrthographic("khó").initial, Initial::kKh);
}

TEST(G2pTest, QuBindsGlide) {
  const Syllable s = AnalyzeOrthographic("quê");
  EXPECT_EQ(s.initial, Initial::kK);
  EXPECT_EQ(s.glide, Glide::kW);
  EXPECT_EQ(s.vowel, Vowel::kE);
}

TEST(G2pTest, GiHandling) {
  const Syllable gieng = AnalyzeOrthographic("giếng");
  EXPECT_EQ(gieng.initial, Initial::kZ);
  EXPECT_EQ(gieng.vowel, Vowel::kIe);
  EXPECT_EQ(gieng.final, Final::kNg);
  const Syllable gi = AnalyzeOrthographic("gì");
  EXPECT_EQ(gi.initial, Initial::kZ);
  EXPECT_EQ(gi.vowel, Vowel::kI);
  EXPECT_EQ(gi.tone, Tone::kLowFalling);
  EXPECT_EQ(AnalyzeOrthographic("gia").vowel, Vowel::kA);
}

TEST(G2pTest, ToneMarkPositionIndependent) {
  EXPECT_EQ(AnalyzeOrthographic("hòa"), AnalyzeOrthographic("hoà"));
  EXPECT_EQ(AnalyzeOrthographic("thúy"), AnalyzeOrthographic("thuý"));
}

TEST(G2pTest, DecomposedInputAccepted) {
  // "à" as a + U+0300.
  EXPECT_EQ(AnalyzeOrthographic("hoa\xcc\x80ng"), AnalyzeOrthographic("hoàng"));
}

TEST(G2pTest, RejectsNonSyllables) {
  for (const char* w : {"hello", "xyz", "", "123", "bánhh", "àá"}) {
    EXPECT_FALSE(TryAnalyzeOrthographic(w).has_value()) << w;
  }
  try {
    AnalyzeOrthographic("street");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotASyllable);
  }
}

TEST(G2pTest, NormalizeTextDropsNoise) {
  const NormalizedText t = NormalizeText("  Hôm NAY  okay trời\tđẹp 2024 ");
  EXPECT_EQ(t.words, (std::vector<std::string>{"hôm", "nay", "trời", "đẹp"}));
  EXPECT_EQ(t.dropped, 2u);
}

TEST(G2pTest, NormalizeCanonicalizesToneMarkPlacement) {
  EXPECT_EQ(NormalizeText("hòa").words, NormalizeText("hoà").words);
}

TEST(G2pTest, ConsumptionIsCompleteForDictionary) {
  const DictionaryBuild build = BuildDictionary(SeedCorpus());
  ASSERT_GT(build.dictionary.size(), 300u);
  for (const auto& [word, ipa] : build.dictionary.entries()) {
    IpaCursor c(ipa);
    auto [tone, rest] = GetTone(c);
    auto [initial, rest2] = GetInitial(rest);
    auto [glide, rest3] = GetGlide(rest2);
    auto [vowel, rest4] = GetVowel(rest3);
    std::optional<Final> final = GetFinal(rest4);
    std::size_t consumed = std::string_view(IpaOf(tone)).size() +
                           (initial ? IpaOf(*initial).size() : 0) +
                           (glide ? IpaOf(*glide).size() : 0) +
                           IpaOf(vowel).size() + (final ? IpaOf(*final).size() : 0);
    EXPECT_EQ(consumed, ipa.size()) << word;
  }
}

TEST(G2pTest, DecomposeRejectsMalformedIpa) {
  EXPECT_THROW(DecomposeIpa("hw̯"), Error);
  EXPECT_THROW(DecomposeIpa("haŋx"), Error);
  EXPECT_THROW(DecomposeIpa(""), Error);
}

TEST(G2pTest, DictionaryTsvRoundTrip) {
  const DictionaryBuild build = BuildDictionary(SeedCorpus());
  std::istringstream in(build.dictionary.ToTsv());
  const Dictionary back = Dictionary::FromTsv(in);
  EXPECT_EQ(back.entries(), build.dictionary.entries());
}

class TokenizeTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::vector<std::string> words = {"hôm", "nay", "trời", "đẹp", "quá"};
    dictionary_ = BuildDictionary(words).dictionary;
    vocabulary_.emplace(BuildVocabulary(DefaultInventory(), dictionary_));
  }
  Dictionary dictionary_;
  std::optional<Vocabulary> vocabulary_;
};

TEST_F(TokenizeTest, SkipsAndCountsOov) {
  const TokenizeResult r = Tokenize("Hôm nay trời mưa đẹp quá!", dictionary_, *vocabulary_);
  // "mưa" is a syllable but not in the dictionary; "quá!" is noise.
  EXPECT_EQ(r.words, (std::vector<std::string>{"hôm", "nay", "trời", "đẹp"}));
  EXPECT_EQ(r.triplets.size(), 4u);
  EXPECT_EQ(r.dropped, 2u);
}

TEST_F(TokenizeTest, FailPolicyThrows) {
  try {
    Tokenize("hôm mưa", dictionary_, *vocabulary_, OovPolicy::kFail);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOutOfDictionary);
  }
}

TEST_F(TokenizeTest, Deterministic) {
  const auto a = Tokenize("trời đẹp quá", dictionary_, *vocabulary_);
  const auto b = Tokenize("trời đẹp quá", dictionary_, *vocabulary_);
  EXPECT_EQ(a.triplets, b.triplets);
  EXPECT_EQ(p2g::Detokenize(a.triplets, *vocabulary_), "trời đẹp quá");
}

TEST(VocabularyTest, ReservedIds) {
  std::vector<std::string> words = {"ba", "mẹ"};
  const Dictionary d = BuildDictionary(words).dictionary;
  const Vocabulary v = BuildVocabulary(DefaultInventory(), d);
  EXPECT_EQ(v.initial_size(), 4 + 22);
  EXPECT_EQ(v.tone_size(), 3 + 6);
  EXPECT_EQ(v.rhyme_size(), 3 + 2);
  EXPECT_EQ(v.EncodeInitial(std::nullopt), kNoneInitialId);
  EXPECT_THROW(v.DecodeRhyme(kPadId), Error);
  EXPECT_THROW(v.DecodeRhyme(v.rhyme_size()), Error);
  const Syllable me = AnalyzeOrthographic("mẹ");
  EXPECT_EQ(v.Decode(v.Encode(me)), me);
}

TEST(VocabularyTest, EmptyDictionaryRejected) {
  EXPECT_THROW(BuildVocabulary(DefaultInventory(), Dictionary()), Error);
}

}  // namespace
}  // namespace syllabic::g2p
