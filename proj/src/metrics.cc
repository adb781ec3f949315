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

#include "syllabic/metrics.h"

#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

#include "syllabic/g2p.h"
#include "syllabic/unicode.h"

namespace syllabic::metrics {
namespace {

// Stand-in ids so syllables can use the triplet comparison path.
SyllableTriplet ComponentKey(const Syllable& s) {
  const int initial = s.initial ? static_cast<int>(*s.initial) + 1 : 0;
  const int rhyme = (s.glide ? 1 : 0) * 10000 +
                    static_cast<int>(s.vowel) * 100 +
                    (s.final ? static_cast<int>(*s.final) + 1 : 0);
  return {initial, rhyme, static_cast<int>(s.tone)};
}

std::vector<SyllableTriplet> ComponentKeys(std::span<const Syllable> syllables) {
  std::vector<SyllableTriplet> keys;
  keys.reserve(syllables.size());
  for (const auto& s : syllables) keys.push_back(ComponentKey(s));
  return keys;
}

std::vector<Syllable> Analyze(const Words& words) {
  std::vector<Syllable> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(g2p::AnalyzeOrthographic(w));
  return out;
}

std::u32string JoinCodePoints(const Words& words) {
  std::string joined;
  for (const auto& w : words) {
    if (!joined.empty()) joined += ' ';
    joined += w;
  }
  return unicode::ToCodePoints(joined);
}

void CheckPaired(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::kShapeMismatch, "correlation inputs differ in length");
  }
  if (x.size() < 2) {
    throw Error(ErrorKind::kDegenerateInput, "fewer than two observations");
  }
}

}  // namespace

long AlignmentTrace::cost() const { return counts().errors(); }

ErrorCounts AlignmentTrace::counts() const {
  ErrorCounts c;
  for (const auto& op : ops) {
    switch (op.kind) {
      case EditOp::kMatch: ++c.reference_length; break;
      case EditOp::kSubstitute: ++c.substitutions; ++c.reference_length; break;
      case EditOp::kDelete: ++c.deletions; ++c.reference_length; break;
      case EditOp::kInsert: ++c.insertions; break;
    }
  }
  return c;
}

double ErrorRate(const ErrorCounts& counts) {
  if (counts.reference_length <= 0) {
    throw Error(ErrorKind::kEmptyReference, "reference has no tokens");
  }
  return static_cast<double>(counts.errors()) /
         static_cast<double>(counts.reference_length);
}

ErrorCounts WordErrors(const Words& ref, const Words& hyp) {
  return Align(ref, hyp).counts();
}

ErrorCounts CharErrors(const Words& ref, const Words& hyp) {
  const std::u32string r = JoinCodePoints(ref);
  const std::u32string h = JoinCodePoints(hyp);
  return Align(std::span<const char32_t>(r), std::span<const char32_t>(h)).counts();
}

std::vector<std::string> PhoneSequence(std::span<const Syllable> syllables) {
  std::vector<std::string> phones;
  for (const auto& s : syllables) {
    if (s.initial) phones.emplace_back(IpaOf(*s.initial));
    if (s.glide) phones.emplace_back(IpaOf(*s.glide));
    phones.emplace_back(IpaOf(s.vowel));
    if (s.final) phones.emplace_back(IpaOf(*s.final));
    phones.push_back("tone:" + std::string(ToneName(s.tone)));
  }
  return phones;
}

ErrorCounts PhoneErrors(std::span<const Syllable> ref,
                        std::span<const Syllable> hyp) {
  return Align(PhoneSequence(ref), PhoneSequence(hyp)).counts();
}

ComponentCounts ComponentErrors(std::span<const SyllableTriplet> ref,
                                std::span<const SyllableTriplet> hyp) {
  ComponentCounts c;
  const AlignmentTrace trace = Align(ref, hyp);
  for (const auto& op : trace.ops) {
    switch (op.kind) {
      case EditOp::kMatch:
      case EditOp::kSubstitute: {
        const auto& r = ref[static_cast<std::size_t>(op.ref_index)];
        const auto& h = hyp[static_cast<std::size_t>(op.hyp_index)];
        c.initial.substitutions += r.initial_id != h.initial_id;
        c.rhyme.substitutions += r.rhyme_id != h.rhyme_id;
        c.tone.substitutions += r.tone_id != h.tone_id;
        break;
      }
      case EditOp::kDelete:
        ++c.initial.deletions;
        ++c.rhyme.deletions;
        ++c.tone.deletions;
        break;
      case EditOp::kInsert:
        ++c.initial.insertions;
        ++c.rhyme.insertions;
        ++c.tone.insertions;
        break;
    }
  }
  const long n = static_cast<long>(ref.size());
  c.initial.reference_length = c.rhyme.reference_length =
      c.tone.reference_length = n;
  return c;
}

ComponentCounts ComponentErrors(std::span<const Syllable> ref,
                                std::span<const Syllable> hyp) {
  const auto r = ComponentKeys(ref);
  const auto h = ComponentKeys(hyp);
  return ComponentErrors(std::span<const SyllableTriplet>(r),
                         std::span<const SyllableTriplet>(h));
}

ComponentRates ComponentErrorRates(const ComponentCounts& counts) {
  return {ErrorRate(counts.initial), ErrorRate(counts.rhyme),
          ErrorRate(counts.tone)};
}

ComponentRates ComponentErrorRates(std::span<const SyllableTriplet> ref,
                                   std::span<const SyllableTriplet> hyp) {
  return ComponentErrorRates(ComponentErrors(ref, hyp));
}

EvalReport GroupedReport(std::span<const EvalPair> pairs) {
  EvalReport report;
  report.utterances = pairs.size();
  for (const auto& pair : pairs) {
    LevelCounts counts;
    counts.word = WordErrors(pair.ref, pair.hyp);
    counts.chars = CharErrors(pair.ref, pair.hyp);
    const auto ref_syllables = Analyze(pair.ref);
    const auto hyp_syllables = Analyze(pair.hyp);
    counts.phone = PhoneErrors(ref_syllables, hyp_syllables);
    counts.component = ComponentErrors(std::span<const Syllable>(ref_syllables),
                                       std::span<const Syllable>(hyp_syllables));
    report.overall += counts;
    for (const auto& [key, label] : pair.metadata) {
      report.groups[key][label] += counts;
    }
  }
  report.unique_correct_words = UniqueCorrectWords(pairs);
  return report;
}

std::size_t UniqueCorrectWords(std::span<const EvalPair> pairs) {
  std::set<std::string> correct;
  for (const auto& pair : pairs) {
    for (const auto& op : Align(pair.ref, pair.hyp).ops) {
      if (op.kind == EditOp::kMatch) {
        correct.insert(pair.ref[static_cast<std::size_t>(op.ref_index)]);
      }
    }
  }
  return correct.size();
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  CheckPaired(x, y);
  const double n = static_cast<double>(x.size());
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorKind::kDegenerateInput, "constant variable");
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double Spearman(std::span<const double> x, std::span<const double> y) {
  CheckPaired(x, y);
  const auto rx = AverageRanks(x);
  const auto ry = AverageRanks(y);
  return Pearson(rx, ry);
}

FrequencyBias ComputeFrequencyBias(std::span<const Words> train_corpus,
                                   std::span<const EvalPair> pairs) {
  std::unordered_map<std::string, long> train;
  for (const auto& utterance : train_corpus) {
    for (const auto& w : utterance) ++train[w];
  }
  std::map<std::string, WordRecall> types;
  for (const auto& pair : pairs) {
    for (const auto& w : pair.ref) ++types[w].reference_count;
    for (const auto& op : Align(pair.ref, pair.hyp).ops) {
      if (op.kind == EditOp::kMatch) {
        ++types[pair.ref[static_cast<std::size_t>(op.ref_index)]].matched;
      }
    }
  }
  FrequencyBias bias;
  std::vector<double> log_freq, recall;
  for (auto& [word, stats] : types) {
    stats.word = word;
    auto it = train.find(word);
    stats.train_count = it == train.end() ? 0 : it->second;
    stats.log_frequency = std::log1p(static_cast<double>(stats.train_count));
    stats.recall = static_cast<double>(stats.matched) /
                   static_cast<double>(stats.reference_count);
    log_freq.push_back(stats.log_frequency);
    recall.push_back(stats.recall);
    bias.types.push_back(stats);
  }
  bias.pearson_r = Pearson(log_freq, recall);
  bias.spearman_rho = Spearman(log_freq, recall);
  return bias;
}

ClassificationScores ClassificationMetrics(std::span<const std::string> gold,
                                           std::span<const std::string> pred) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorKind::kShapeMismatch, "gold and predicted lengths differ");
  }
  if (gold.empty()) throw Error(ErrorKind::kEmptyInput, "no labels");
  struct Tally {
    long tp = 0, fp = 0, fn = 0;
  };
  std::map<std::string, Tally> classes;
  long correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == pred[i]) {
      ++correct;
      ++classes[gold[i]].tp;
    } else {
      ++classes[gold[i]].fn;
      ++classes[pred[i]].fp;
    }
  }
  double f1_sum = 0.0;
  for (const auto& [label, t] : classes) {
    const long denom = 2 * t.tp + t.fp + t.fn;
    f1_sum += denom == 0 ? 0.0 : 2.0 * static_cast<double>(t.tp) / static_cast<double>(denom);
  }
  return {static_cast<double>(correct) / static_cast<double>(gold.size()),
          f1_sum / static_cast<double>(classes.size())};
}

}  // namespace syllabic::metrics
