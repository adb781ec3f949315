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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "scalar_oracle.h"
#include "syllabic/decoder.h"
#include "syllabic/g2p.h"
#include "syllabic/inventory.h"
#include "syllabic/metrics.h"
#include "syllabic/p2g.h"
#include "syllabic/unicode.h"
#include "syllabic/vocabulary.h"

namespace {

using namespace syllabic;
using Clock = std::chrono::steady_clock;
namespace fs = std::filesystem;

int failures = 0;

void Report(bool ok, const std::string& name, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
  if (!ok) ++failures;
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::vector<std::string> SeedCorpus() {
  std::ifstream in(SYLLABIC_TEST_DATA "/seed_corpus.txt");
  std::vector<std::string> words;
  for (std::string w; std::getline(in, w);) {
    if (!w.empty()) words.push_back(w);
  }
  return words;
}

// Top-down memoized recursion over prefix lengths.
template <typename T>
long RecursiveDistance(const std::vector<T>& a, const std::vector<T>& b) {
  std::map<std::pair<std::size_t, std::size_t>, long> memo;
  std::function<long(std::size_t, std::size_t)> d = [&](std::size_t i, std::size_t j) -> long {
    if (i == 0) return static_cast<long>(j);
    if (j == 0) return static_cast<long>(i);
    const auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const long v = std::min({d(i - 1, j) + 1, d(i, j - 1) + 1,
                             d(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1)});
    memo[key] = v;
    return v;
  };
  return d(a.size(), b.size());
}

double DirectPearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) { mx += x[i] / n; my += y[i] / n; }
  double num = 0, dx = 0, dy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    dx += (x[i] - mx) * (x[i] - mx);
    dy += (y[i] - my) * (y[i] - my);
  }
  return num / std::sqrt(dx * dy);
}

std::vector<double> DirectRanks(const std::vector<double>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double less = 0, equal = 0;
    for (double w : v) { less += w < v[i]; equal += w == v[i]; }
    r[i] = less + (equal + 1) / 2.0;
  }
  return r;
}

void CheckInventory() {
  const auto start = Clock::now();
  const PhonemeInventory inv = BuildDefaultInventory();
  std::size_t initial_forms = 0, final_forms = 0;
  for (const auto& p : inv.initials()) initial_forms += p.writing_forms.size();
  for (const auto& p : inv.finals()) final_forms += p.writing_forms.size();
  const double elapsed = Seconds(start);
  const bool ok = inv.initials().size() == 23 && inv.vowels().size() == 15 &&
                  inv.finals().size() == 10 && inv.tones().size() == 6 &&
                  inv.glides().size() == 1 && initial_forms == 26 &&
                  final_forms == 12 && elapsed < 1.0;
  Report(ok, "inventory_cardinalities",
         "initials=" + std::to_string(inv.initials().size()) + " (want 23)" +
             " vowels=" + std::to_string(inv.vowels().size()) +
             " finals=" + std::to_string(inv.finals().size()) +
             " tones=" + std::to_string(inv.tones().size()) +
             " glides=" + std::to_string(inv.glides().size()) +
             " initial_forms=" + std::to_string(initial_forms) +
             " final_forms=" + std::to_string(final_forms) + " time=" + Fmt(elapsed) + "s");
}

void CheckAnchors() {
  const Syllable hoang = g2p::AnalyzeOrthographic("hoàng");
  const Syllable expected{Initial::kH, Glide::kW, Vowel::kA, Final::kNg, Tone::kLowFalling};
  const Syllable kiem = g2p::AnalyzeOrthographic("kiệm");
  const bool ok = hoang == expected && kiem.tone == Tone::kMidGlottalRaising &&
                  DefaultInventory().tone(kiem.tone).diacritic == 0x323;
  Report(ok, "g2p_anchor_words",
         "hoàng=" + DescribeSyllable(hoang) + " kiệm=" + DescribeSyllable(kiem));
}

void CheckRoundTrip() {
  const auto start = Clock::now();
  const auto corpus = SeedCorpus();
  const auto build = g2p::BuildDictionary(corpus);
  const Vocabulary vocab = BuildVocabulary(DefaultInventory(), build.dictionary);
  std::size_t text_ok = 0, respelled = 0;
  std::string respelled_list;
  for (const auto& w : corpus) {
    const auto normalized = g2p::NormalizeText(w).words;
    std::string norm;
    for (std::size_t i = 0; i < normalized.size(); ++i) norm += (i ? " " : "") + normalized[i];
    if (norm != w) {
      ++respelled;
      respelled_list += " " + w + "->" + norm;
    }
    const auto tokens = g2p::Tokenize(w, build.dictionary, vocab);
    if (p2g::Detokenize(tokens.triplets, vocab) == norm && !norm.empty()) ++text_ok;
  }
  std::size_t phone_ok = 0;
  for (const auto& [word, ipa] : build.dictionary.entries()) {
    const Syllable s = g2p::DecomposeIpa(ipa);
    const auto back = g2p::TryAnalyzeOrthographic(p2g::RenderSyllable(s));
    if (back && *back == s) ++phone_ok;
  }
  const double elapsed = Seconds(start);
  const bool ok = text_ok == corpus.size() && phone_ok == build.dictionary.size() &&
                  build.rejected.empty() && elapsed < 5.0;
  Report(ok, "roundtrip_seed_corpus",
         "text " + std::to_string(text_ok) + "/" + std::to_string(corpus.size()) +
             ", syllables " + std::to_string(phone_ok) + "/" +
             std::to_string(build.dictionary.size()) + ", respelled by normalize: " +
             std::to_string(respelled) + respelled_list + ", time=" + Fmt(elapsed) + "s");
}

void CheckLinearity() {
  const auto corpus = SeedCorpus();
  const auto build = g2p::BuildDictionary(corpus);
  const Vocabulary vocab = BuildVocabulary(DefaultInventory(), build.dictionary);
  std::string base;
  for (int rep = 0; rep < 20; ++rep) {
    for (const auto& w : corpus) base += w + " ";
  }
  std::string big;
  for (int k = 0; k < 10; ++k) big += base;
  auto median_time = [&](const std::string& text) {
    g2p::Tokenize(text, build.dictionary, vocab);  // warm-up
    std::vector<double> times;
    for (int run = 0; run < 5; ++run) {
      const auto start = Clock::now();
      const auto r = g2p::Tokenize(text, build.dictionary, vocab);
      times.push_back(Seconds(start));
      if (r.triplets.empty()) std::abort();
    }
    std::sort(times.begin(), times.end());
    return times[2];
  };
  const double t1 = median_time(base);
  const double t10 = median_time(big);
  const double ratio = t10 / t1;
  Report(ratio <= 12.0, "tokenize_linearity",
         "1x=" + Fmt(t1) + "s 10x=" + Fmt(t10) + "s ratio=" + Fmt(ratio) + " (limit 12)");
}

void CheckAlignment() {
  const auto start = Clock::now();
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> len(0, 8);
  const std::vector<std::string> letters = {"ba", "bà", "mẹ", "em", "anh"};
  std::vector<Syllable> syllables;
  for (const auto& w : letters) syllables.push_back(g2p::AnalyzeOrthographic(w));
  std::uniform_int_distribution<int> pick(0, static_cast<int>(letters.size()) - 1);
  int pairs = 0, cost_ok = 0, rate_ok = 0;
  for (int trial = 0; trial < 250; ++trial) {
    std::vector<int> ia(static_cast<std::size_t>(len(rng))), ib(static_cast<std::size_t>(len(rng)));
    if (ia.empty()) ia.push_back(0);
    for (auto& x : ia) x = pick(rng);
    for (auto& x : ib) x = pick(rng);
    ++pairs;
    metrics::Words ra, rb;
    std::vector<Syllable> sa, sb;
    for (int x : ia) { ra.push_back(letters[static_cast<std::size_t>(x)]); sa.push_back(syllables[static_cast<std::size_t>(x)]); }
    for (int x : ib) { rb.push_back(letters[static_cast<std::size_t>(x)]); sb.push_back(syllables[static_cast<std::size_t>(x)]); }

    const long oracle = RecursiveDistance(ia, ib);
    cost_ok += metrics::Align(ia, ib).cost() == oracle;

    auto join = [](const metrics::Words& w) {
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i];
      return unicode::ToCodePoints(s);
    };
    const std::u32string ca = join(ra), cb = join(rb);
    const std::vector<char32_t> va(ca.begin(), ca.end()), vb(cb.begin(), cb.end());
    const auto pa = metrics::PhoneSequence(sa), pb = metrics::PhoneSequence(sb);

    const double wer = metrics::ErrorRate(metrics::WordErrors(ra, rb));
    const double cer = metrics::ErrorRate(metrics::CharErrors(ra, rb));
    const double per = metrics::ErrorRate(metrics::PhoneErrors(sa, sb));
    const double wer_o = static_cast<double>(oracle) / static_cast<double>(ia.size());
    const double cer_o = static_cast<double>(RecursiveDistance(va, vb)) / static_cast<double>(va.size());
    const double per_o = static_cast<double>(RecursiveDistance(pa, pb)) / static_cast<double>(pa.size());
    rate_ok += std::abs(wer - wer_o) <= 1e-12 && std::abs(cer - cer_o) <= 1e-12 &&
               std::abs(per - per_o) <= 1e-12;
  }
  const double elapsed = Seconds(start);
  Report(cost_ok == pairs && rate_ok == pairs && pairs >= 200 && elapsed < 30.0,
         "alignment_oracle",
         "pairs=" + std::to_string(pairs) + " cost_match=" + std::to_string(cost_ok) +
             " rate_match=" + std::to_string(rate_ok) + " time=" + Fmt(elapsed) + "s");
}

void CheckComponents() {
  const std::vector<SyllableTriplet> ref = {{4, 5, 6}, {7, 8, 3}, {5, 5, 5}};
  const std::vector<SyllableTriplet> hyp = {{4, 5, 7}, {7, 8, 4}, {5, 5, 3}};
  const auto rates = metrics::ComponentErrorRates(ref, hyp);
  const bool tone_only = rates.initial == 0.0 && rates.rhyme == 0.0 && rates.tone == 1.0;

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> id(3, 5), len(0, 7);
  int cases = 0, agree = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<SyllableTriplet> r(static_cast<std::size_t>(len(rng)) + 1), h(static_cast<std::size_t>(len(rng)));
    for (auto& t : r) t = {id(rng), id(rng), id(rng)};
    for (auto& t : h) t = {id(rng), id(rng), id(rng)};
    const auto c = metrics::ComponentErrors(r, h);
    long del = 0, ins = 0;
    for (const auto& op : metrics::Align(r, h).ops) {
      del += op.kind == metrics::EditOp::kDelete;
      ins += op.kind == metrics::EditOp::kInsert;
    }
    ++cases;
    agree += c.initial.deletions == del && c.rhyme.deletions == del && c.tone.deletions == del &&
             c.initial.insertions == ins && c.rhyme.insertions == ins && c.tone.insertions == ins;
  }
  Report(tone_only && agree == cases, "component_error_rates",
         "tone-only=(" + Fmt(rates.initial) + "," + Fmt(rates.rhyme) + "," + Fmt(rates.tone) +
             ") D/I recount agree " + std::to_string(agree) + "/" + std::to_string(cases));
}

void CheckCorrelations() {
  std::mt19937 rng(31);
  double worst = 0.0;
  int corpora = 0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::string> types;
    for (int k = 0; k < 50; ++k) types.push_back("t" + std::to_string(k));
    std::uniform_int_distribution<int> count(0, 40), reps(1, 6);
    std::bernoulli_distribution keep(0.6);
    std::vector<metrics::Words> train;
    std::map<std::string, long> freq;
    for (const auto& t : types) {
      const int n = count(rng);
      freq[t] = n;
      for (int i = 0; i < n; ++i) train.push_back({t});
    }
    std::vector<metrics::EvalPair> pairs;
    std::map<std::string, std::pair<long, long>> hits;  // matched, occurrences
    for (const auto& t : types) {
      const int n = reps(rng);
      for (int i = 0; i < n; ++i) {
        const bool ok = keep(rng);
        // Single-word utterances: recall is decided without alignment.
        pairs.push_back({{t}, {ok ? t : std::string("zz")}, {}});
        hits[t].first += ok;
        hits[t].second += 1;
      }
    }
    const auto bias = metrics::ComputeFrequencyBias(train, pairs);
    std::vector<double> f, r;
    for (const auto& t : types) {
      f.push_back(std::log1p(static_cast<double>(freq[t])));
      r.push_back(static_cast<double>(hits[t].first) / static_cast<double>(hits[t].second));
    }
    worst = std::max(worst, std::abs(bias.pearson_r - DirectPearson(f, r)));
    worst = std::max(worst, std::abs(bias.spearman_rho - DirectPearson(DirectRanks(f), DirectRanks(r))));
    ++corpora;
  }
  std::vector<double> x, y;
  for (int i = 0; i < 50; ++i) {
    x.push_back(i * 0.37 - 3.0);
    y.push_back(std::exp(x.back()) + std::pow(x.back(), 3));
  }
  const double rho = metrics::Spearman(x, y);
  Report(worst <= 1e-9 && std::abs(rho - 1.0) <= 1e-12, "frequency_bias_correlations",
         "corpora=" + std::to_string(corpora) + " max|diff|=" + Fmt(worst) +
             " spearman(monotone)=" + Fmt(rho));
}

void CheckDecoder() {
  const auto start = Clock::now();
  using namespace decoder;
  std::mt19937_64 rng(8);
  std::normal_distribution<double> normal;
  auto acoustic = [&](int frames, int dim) {
    Matrix m(frames, dim);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = normal(rng);
    return m;
  };

  // Simplex and scalar agreement on small configs.
  double simplex_err = 0.0, scalar_err = 0.0;
  for (unsigned seed = 1; seed <= 10; ++seed) {
    DecoderConfig c;
    c.dim = 4;
    c.heads = 2;
    c.initial_vocab = 7;
    c.rhyme_vocab = 9;
    c.tone_vocab = 6;
    c.seed = seed;
    const DecoderParams p = DecoderParams::Initialize(c);
    const Matrix a = acoustic(5, c.dim);
    const SyllableTriplet prev{5, 4, 3};
    const Vector f = StepFeatures(prev, static_cast<int>(seed), a, p, c);
    const StepOutput o = PredictStep(f, p, c);
    double joint = 0.0;
    for (int r = 0; r < o.p_rhyme.size(); ++r)
      for (int i = 0; i < o.p_initial.size(); ++i)
        for (int t = 0; t < o.p_tone.size(); ++t) joint += o.p_rhyme[r] * o.p_initial[i] * o.p_tone[t];
    simplex_err = std::max({simplex_err, std::abs(o.p_rhyme.sum() - 1), std::abs(o.p_initial.sum() - 1),
                            std::abs(o.p_tone.sum() - 1), std::abs(joint - 1)});
    const std::vector<double> fv(f.data(), f.data() + f.size());
    const StepOutput s = testing::ScalarPredictStep(fv, p);
    scalar_err = std::max({scalar_err, (o.p_rhyme - s.p_rhyme).cwiseAbs().maxCoeff(),
                           (o.p_initial - s.p_initial).cwiseAbs().maxCoeff(),
                           (o.p_tone - s.p_tone).cwiseAbs().maxCoeff()});
    auto q0 = testing::ScalarEmbed(prev, p);
    const Vector pe = SinusoidalPosition(static_cast<int>(seed), c.dim);
    for (std::size_t i = 0; i < q0.size(); ++i) q0[i] += pe[static_cast<Eigen::Index>(i)];
    const auto attn = testing::ScalarCrossAttend(q0, a, p, c.heads);
    for (std::size_t i = 0; i < q0.size(); ++i) {
      scalar_err = std::max(scalar_err, std::abs(f[static_cast<Eigen::Index>(i)] - (q0[i] + attn[i])));
    }
  }

  // Gradient check.
  DecoderConfig gc;
  gc.dim = 8;
  gc.heads = 2;
  gc.initial_vocab = 7;
  gc.rhyme_vocab = 9;
  gc.tone_vocab = 6;
  const ToyDataset gdata = SynthesizeToyDataset(gc, 3, 4, 1, 3, 4);
  const GradCheckResult check = GradCheck(DecoderParams::Initialize(gc), gdata.examples, gc, 1e-5);

  // Toy overfit.
  DecoderConfig tc;
  tc.dim = 32;
  tc.heads = 4;
  tc.initial_vocab = tc.rhyme_vocab = tc.tone_vocab = 16;
  tc.seed = 1;
  const ToyDataset data = SynthesizeToyDataset(tc, 20, 8, 2, 6, 11);
  DecoderParams params = DecoderParams::Initialize(tc);
  int steps = 0, exact = 0;
  double accuracy = 0.0;
  while (steps < 2000) {
    TrainGradientDescent(data.examples, params, tc, 100, 0.5);
    steps += 100;
    accuracy = TeacherForcedAccuracy(data.examples, params, tc);
    exact = 0;
    for (std::size_t i = 0; i < data.examples.size(); ++i) {
      exact += DecodeGreedy(data.examples[i].acoustic, params, tc, 16) == data.sequences[i];
    }
    if (accuracy >= 0.99 && exact >= 18) break;
  }
  const double elapsed = Seconds(start);
  const bool ok = simplex_err <= 1e-6 && scalar_err <= 1e-12 && check.max_relative_error < 1e-4 &&
                  accuracy >= 0.99 && exact >= 18 && elapsed < 120.0;
  Report(ok, "decoder_numerics_and_overfit",
         "simplex_err=" + Fmt(simplex_err) + " scalar_err=" + Fmt(scalar_err) +
             " gradcheck=" + Fmt(check.max_relative_error) + " over " +
             std::to_string(check.coordinates) + " coords/" + std::to_string(check.tensors) +
             " tensors, overfit steps=" + std::to_string(steps) + " tf_acc=" + Fmt(accuracy) +
             " exact=" + std::to_string(exact) + "/20 time=" + Fmt(elapsed) + "s");
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int Shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void CheckCli() {
  const fs::path dir = fs::temp_directory_path() / "syllabic_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = SYLLABIC_CLI_PATH;
  const std::string corpus = SYLLABIC_TEST_DATA "/seed_corpus.txt";
  auto q = [](const fs::path& p) { return "'" + p.string() + "'"; };

  std::string failures_seen;
  auto run = [&](const std::string& args, const fs::path& out) {
    const int code = Shell(q(cli) + " " + args + " > " + q(out) + " 2> " + q(dir / "stderr.txt"));
    if (code != 0) failures_seen += " [" + args + " -> exit " + std::to_string(code) + "]";
  };
  run("build-dict --wordlist " + q(corpus), dir / "dict.tsv");
  run("tokenize --in " + q(corpus) + " --dict " + q(dir / "dict.tsv"), dir / "tok.jsonl");
  run("detokenize --in " + q(dir / "tok.jsonl") + " --dict " + q(dir / "dict.tsv"), dir / "detok.txt");

  std::string expected;
  {
    std::ifstream in(corpus);
    for (std::string line; std::getline(in, line);) {
      const auto words = g2p::NormalizeText(line).words;
      for (std::size_t i = 0; i < words.size(); ++i) expected += (i ? " " : "") + words[i];
      expected += "\n";
    }
  }
  const bool identical = Slurp(dir / "detok.txt") == expected;

  run("evaluate --ref " + q(dir / "tok.jsonl") + " --hyp " + q(dir / "tok.jsonl"), dir / "eval.json");
  bool zero = false;
  try {
    const auto r = nlohmann::json::parse(Slurp(dir / "eval.json"))["overall"];
    zero = r["word"]["rate"] == 0.0 && r["char"]["rate"] == 0.0 && r["phone"]["rate"] == 0.0 &&
           r["component"]["initial"]["rate"] == 0.0 && r["component"]["rhyme"]["rate"] == 0.0 &&
           r["component"]["tone"]["rate"] == 0.0;
  } catch (const std::exception&) {
  }

  // Grouped report over a corrupted hypothesis and partial metadata.
  {
    std::ifstream in(corpus);
    std::ofstream hyp(dir / "hyp.txt"), meta(dir / "meta.tsv");
    meta << "line_no\tdialect\tprovince\n";
    int n = 0;
    const char* dialects[] = {"north", "central", "south"};
    for (std::string line; std::getline(in, line);) {
      ++n;
      hyp << (n % 4 == 0 ? "ba " + line : n % 5 == 0 ? std::string() : line) << "\n";
      if (n % 7 != 0) meta << n << '\t' << dialects[n % 3] << "\tp" << n % 5 << "\n";
    }
  }
  run("evaluate --ref " + q(corpus) + " --hyp " + q(dir / "hyp.txt") + " --meta " + q(dir / "meta.tsv"),
      dir / "grouped.json");
  bool sums = false;
  std::string sum_detail;
  try {
    const auto r = nlohmann::json::parse(Slurp(dir / "grouped.json"));
    sums = !r["groups"].empty();
    for (const auto& [key, labels] : r["groups"].items()) {
      long n = 0, words = 0, phones = 0;
      for (const auto& [label, g] : labels.items()) {
        n += g["utterances"].get<long>();
        words += g["word"]["reference_length"].get<long>();
        phones += g["phone"]["reference_length"].get<long>();
      }
      sums = sums && n == r["overall"]["utterances"].get<long>() &&
             words == r["overall"]["word"]["reference_length"].get<long>() &&
             phones == r["overall"]["phone"]["reference_length"].get<long>();
      sum_detail += " " + key + ":" + std::to_string(n) + "/" +
                    std::to_string(r["overall"]["utterances"].get<long>());
    }
  } catch (const std::exception&) {
    sums = false;
  }
  Report(failures_seen.empty() && identical && zero && sums, "cli_end_to_end",
         std::string("roundtrip_identical=") + (identical ? "yes" : "no") +
             " identical_eval_zero=" + (zero ? "yes" : "no") + " group_sums" + sum_detail +
             (failures_seen.empty() ? "" : " errors:" + failures_seen));
  fs::remove_all(dir);
}

template <typename F>
void Guard(const std::string& name, F f) {
  try {
    f();
  } catch (const std::exception& e) {
    Report(false, name, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  Guard("inventory_cardinalities", CheckInventory);
  Guard("g2p_anchor_words", CheckAnchors);
  Guard("roundtrip_seed_corpus", CheckRoundTrip);
  Guard("tokenize_linearity", CheckLinearity);
  Guard("alignment_oracle", CheckAlignment);
  Guard("component_error_rates", CheckComponents);
  Guard("frequency_bias_correlations", CheckCorrelations);
  Guard("decoder_numerics_and_overfit", CheckDecoder);
  Guard("cli_end_to_end", CheckCli);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
