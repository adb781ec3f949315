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

#ifndef SYLLABIC_METRICS_H_
#define SYLLABIC_METRICS_H_

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "syllabic/errors.h"
#include "syllabic/inventory.h"
#include "syllabic/vocabulary.h"

namespace syllabic::metrics {

enum class EditOp { kMatch, kSubstitute, kDelete, kInsert };

// ref_index / hyp_index are -1 on the side an op does not touch.
struct AlignmentStep {
  EditOp kind;
  int ref_index;
  int hyp_index;

  bool operator==(const AlignmentStep&) const = default;
};

struct ErrorCounts {
  long substitutions = 0;
  long deletions = 0;
  long insertions = 0;
  long reference_length = 0;

  long errors() const { return substitutions + deletions + insertions; }
  ErrorCounts& operator+=(const ErrorCounts& o) {
    substitutions += o.substitutions;
    deletions += o.deletions;
    insertions += o.insertions;
    reference_length += o.reference_length;
    return *this;
  }
  bool operator==(const ErrorCounts&) const = default;
};

struct AlignmentTrace {
  std::vector<AlignmentStep> ops;

  long cost() const;
  ErrorCounts counts() const;
};

// Unit-cost minimum edit alignment. Among optimal alignments the backtrace
// from the end prefers match, then substitution, deletion, insertion.
template <typename T>
AlignmentTrace Align(std::span<const T> ref, std::span<const T> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<long> cost((n + 1) * (m + 1));
  auto at = [m, &cost](std::size_t i, std::size_t j) -> long& {
    return cost[i * (m + 1) + j];
  };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<long>(i);
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<long>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const long diagonal = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      at(i, j) = std::min({diagonal, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  AlignmentTrace trace;
  trace.ops.reserve(n + m);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const long here = at(i, j);
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && here == at(i - 1, j - 1)) {
      trace.ops.push_back({EditOp::kMatch, static_cast<int>(i - 1),
                           static_cast<int>(j - 1)});
      --i;
      --j;
    } else if (i > 0 && j > 0 && here == at(i - 1, j - 1) + 1) {
      trace.ops.push_back({EditOp::kSubstitute, static_cast<int>(i - 1),
                           static_cast<int>(j - 1)});
      --i;
      --j;
    } else if (i > 0 && here == at(i - 1, j) + 1) {
      trace.ops.push_back({EditOp::kDelete, static_cast<int>(i - 1), -1});
      --i;
    } else {
      trace.ops.push_back({EditOp::kInsert, -1, static_cast<int>(j - 1)});
      --j;
    }
  }
  std::reverse(trace.ops.begin(), trace.ops.end());
  return trace;
}

template <typename T>
AlignmentTrace Align(const std::vector<T>& ref, const std::vector<T>& hyp) {
  return Align(std::span<const T>(ref), std::span<const T>(hyp));
}

// (S + D + I) / N. Throws Error(kEmptyReference) when N == 0.
double ErrorRate(const ErrorCounts& counts);

using Words = std::vector<std::string>;

ErrorCounts WordErrors(const Words& ref, const Words& hyp);
// Over code points of the space-joined words.
ErrorCounts CharErrors(const Words& ref, const Words& hyp);

// initial, glide, vowel, final (those present) then the tone; the flat tone
// contributes a token too.
std::vector<std::string> PhoneSequence(std::span<const Syllable> syllables);
ErrorCounts PhoneErrors(std::span<const Syllable> ref,
                        std::span<const Syllable> hyp);

struct ComponentCounts {
  ErrorCounts initial;
  ErrorCounts rhyme;
  ErrorCounts tone;

  ComponentCounts& operator+=(const ComponentCounts& o) {
    initial += o.initial;
    rhyme += o.rhyme;
    tone += o.tone;
    return *this;
  }
};

struct ComponentRates {
  double initial = 0.0;
  double rhyme = 0.0;
  double tone = 0.0;
};

// Syllable-level alignment on whole-triplet equality; matched and
// substituted pairs are compared per component, and every deletion or
// insertion counts once for each component.
ComponentCounts ComponentErrors(std::span<const SyllableTriplet> ref,
                                std::span<const SyllableTriplet> hyp);
ComponentCounts ComponentErrors(std::span<const Syllable> ref,
                                std::span<const Syllable> hyp);
// Throws Error(kEmptyReference).
ComponentRates ComponentErrorRates(const ComponentCounts& counts);
ComponentRates ComponentErrorRates(std::span<const SyllableTriplet> ref,
                                   std::span<const SyllableTriplet> hyp);

struct EvalPair {
  Words ref;
  Words hyp;
  std::map<std::string, std::string> metadata;  // e.g. "dialect" -> "north"
};

struct LevelCounts {
  ErrorCounts word;
  ErrorCounts chars;
  ErrorCounts phone;
  ComponentCounts component;

  LevelCounts& operator+=(const LevelCounts& o) {
    word += o.word;
    chars += o.chars;
    phone += o.phone;
    component += o.component;
    return *this;
  }
};

struct EvalReport {
  LevelCounts overall;
  std::size_t utterances = 0;
  // metadata key -> label -> pooled counts
  std::map<std::string, std::map<std::string, LevelCounts>> groups;
  std::size_t unique_correct_words = 0;
};

// Counts are pooled per label before dividing (micro average). Words must
// be normalized syllables; the phone and component levels re-analyze them
// and throw Error(kNotASyllable) otherwise.
EvalReport GroupedReport(std::span<const EvalPair> pairs);

// Word types with at least one aligned match anywhere in the test set.
std::size_t UniqueCorrectWords(std::span<const EvalPair> pairs);

double Pearson(std::span<const double> x, std::span<const double> y);
// Pearson over average ranks.
double Spearman(std::span<const double> x, std::span<const double> y);
std::vector<double> AverageRanks(std::span<const double> values);

struct WordRecall {
  std::string word;
  long train_count = 0;
  double log_frequency = 0.0;  // log(1 + train_count)
  long reference_count = 0;
  long matched = 0;
  double recall = 0.0;
};

struct FrequencyBias {
  double pearson_r = 0.0;
  double spearman_rho = 0.0;
  std::vector<WordRecall> types;  // every type seen in the references
};

// Throws Error(kDegenerateInput) when fewer than two types exist or either
// variable is constant.
FrequencyBias ComputeFrequencyBias(std::span<const Words> train_corpus,
                                   std::span<const EvalPair> pairs);

struct ClassificationScores {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
};

// Classes are the union of gold and predicted labels. Throws
// Error(kEmptyInput) for empty input and Error(kShapeMismatch) for unequal
// lengths.
ClassificationScores ClassificationMetrics(std::span<const std::string> gold,
                                           std::span<const std::string> pred);

}  // namespace syllabic::metrics

#endif  // SYLLABIC_METRICS_H_
