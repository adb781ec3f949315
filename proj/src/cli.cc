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

#include "syllabic/cli.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "syllabic/corpus_io.h"
#include "syllabic/decoder.h"
#include "syllabic/dictionary.h"
#include "syllabic/errors.h"
#include "syllabic/g2p.h"
#include "syllabic/inventory.h"
#include "syllabic/metrics.h"
#include "syllabic/p2g.h"
#include "syllabic/unicode.h"
#include "syllabic/vocabulary.h"

namespace syllabic::cli {
namespace {

using nlohmann::json;
using corpus_io::DataError;

// Flag values after merging the config file.
struct Options {
  std::string config;
  std::string in;
  std::string dict;
  std::string on_oov;
  std::string ref;
  std::string hyp;
  std::string meta;
  std::string level = "all";
  std::string format = "json";
  std::string train;
  std::string wordlist;
  int dim = 32;
  int heads = 4;
  int steps = 2000;
  int sequences = 20;
  int vocab = 16;
  int frames = 8;
  double learning_rate = 0.5;
  int log_every = 100;
  std::uint64_t seed = 1;
};

Dictionary LoadDictionary(const std::string& path) {
  if (path.empty()) throw DataError("no dictionary: pass --dict or set dict= in --config");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  try {
    return Dictionary::FromTsv(in);
  } catch (const std::runtime_error& e) {
    throw DataError(path + ": " + e.what());
  }
}

json TripletsJson(const std::vector<SyllableTriplet>& triplets) {
  json out = json::array();
  for (const auto& t : triplets) out.push_back({t.initial_id, t.rhyme_id, t.tone_id});
  return out;
}

std::vector<SyllableTriplet> TripletsFromJson(const json& value) {
  std::vector<SyllableTriplet> out;
  for (const auto& t : value) {
    if (!t.is_array() || t.size() != 3) {
      throw DataError("triplet must be a 3-element array");
    }
    out.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  return out;
}

int Tokenize(const Options& o, std::ostream& out, std::ostream& err) {
  const Dictionary dictionary = LoadDictionary(o.dict);
  const Vocabulary vocabulary = BuildVocabulary(DefaultInventory(), dictionary);
  const auto policy = o.on_oov == "fail" ? g2p::OovPolicy::kFail : g2p::OovPolicy::kSkip;
  std::size_t line_no = 0;
  std::size_t dropped = 0;
  for (const auto& line : corpus_io::ReadLines(o.in)) {
    ++line_no;
    g2p::TokenizeResult result;
    try {
      result = g2p::Tokenize(line, dictionary, vocabulary, policy);
    } catch (const Error& e) {
      throw DataError(o.in + ":" + std::to_string(line_no) + ": " + e.what());
    }
    dropped += result.dropped;
    json record = {{"words", result.words},
                   {"triplets", TripletsJson(result.triplets)},
                   {"dropped", result.dropped}};
    out << record.dump() << '\n';
  }
  if (dropped > 0) err << "tokenize: dropped " << dropped << " tokens\n";
  return kExitOk;
}

int Detokenize(const Options& o, std::ostream& out, std::ostream&) {
  std::optional<Vocabulary> vocabulary;
  if (!o.dict.empty()) {
    vocabulary.emplace(BuildVocabulary(DefaultInventory(), LoadDictionary(o.dict)));
  }
  std::size_t line_no = 0;
  for (const auto& line : corpus_io::ReadLines(o.in)) {
    ++line_no;
    try {
      const json record = json::parse(line);
      if (vocabulary) {
        out << p2g::Detokenize(TripletsFromJson(record.at("triplets")), *vocabulary);
      } else {
        const auto words = record.at("words").get<std::vector<std::string>>();
        for (std::size_t i = 0; i < words.size(); ++i) {
          out << (i ? " " : "") << words[i];
        }
      }
      out << '\n';
    } catch (const json::exception& e) {
      throw DataError(o.in + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw DataError(o.in + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return kExitOk;
}

json RateJson(const metrics::ErrorCounts& c) {
  json out = {{"substitutions", c.substitutions},
              {"deletions", c.deletions},
              {"insertions", c.insertions},
              {"reference_length", c.reference_length}};
  out["rate"] = c.reference_length > 0 ? json(metrics::ErrorRate(c)) : json(nullptr);
  return out;
}

bool Wants(const std::string& level, std::string_view name) {
  return level == "all" || level == name;
}

json LevelJson(const metrics::LevelCounts& c, std::size_t utterances,
               const std::string& level) {
  json out = {{"utterances", utterances}};
  if (Wants(level, "word")) out["word"] = RateJson(c.word);
  if (Wants(level, "char")) out["char"] = RateJson(c.chars);
  if (Wants(level, "phone")) out["phone"] = RateJson(c.phone);
  if (Wants(level, "component")) {
    out["component"] = {{"initial", RateJson(c.component.initial)},
                        {"rhyme", RateJson(c.component.rhyme)},
                        {"tone", RateJson(c.component.tone)}};
  }
  return out;
}

std::string RateCell(const metrics::ErrorCounts& c) {
  if (c.reference_length == 0) return "NA";
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << 100.0 * metrics::ErrorRate(c);
  return s.str();
}

void TsvRow(std::ostream& out, const std::string& group, const std::string& label,
            std::size_t utterances, const metrics::LevelCounts& c,
            const std::string& level) {
  out << group << '\t' << label << '\t' << utterances;
  if (Wants(level, "word")) out << '\t' << RateCell(c.word);
  if (Wants(level, "char")) out << '\t' << RateCell(c.chars);
  if (Wants(level, "phone")) out << '\t' << RateCell(c.phone);
  if (Wants(level, "component")) {
    out << '\t' << RateCell(c.component.initial) << '\t'
        << RateCell(c.component.rhyme) << '\t' << RateCell(c.component.tone);
  }
  out << '\n';
}

std::vector<metrics::EvalPair> LoadPairs(const std::string& ref_path,
                                         const std::string& hyp_path) {
  auto ref = corpus_io::ReadWordSequences(ref_path);
  auto hyp = corpus_io::ReadWordSequences(hyp_path);
  if (ref.size() != hyp.size()) {
    throw DataError("reference has " + std::to_string(ref.size()) +
                    " lines but hypothesis has " + std::to_string(hyp.size()));
  }
  std::vector<metrics::EvalPair> pairs(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    pairs[i].ref = std::move(ref[i]);
    pairs[i].hyp = std::move(hyp[i]);
  }
  return pairs;
}

int Evaluate(const Options& o, std::ostream& out, std::ostream&) {
  auto pairs = LoadPairs(o.ref, o.hyp);
  if (!o.meta.empty()) {
    const auto metadata = corpus_io::ReadMetadata(o.meta);
    std::set<std::string> keys;
    for (const auto& [line, fields] : metadata) {
      if (line > pairs.size()) {
        throw DataError(o.meta + ": line_no " + std::to_string(line) +
                        " exceeds " + std::to_string(pairs.size()) + " utterances");
      }
      for (const auto& [key, value] : fields) keys.insert(key);
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto it = metadata.find(i + 1);
      for (const auto& key : keys) {
        std::string label = "unknown";
        if (it != metadata.end()) {
          if (auto f = it->second.find(key); f != it->second.end()) label = f->second;
        }
        pairs[i].metadata[key] = label;
      }
    }
  }
  const metrics::EvalReport report = metrics::GroupedReport(pairs);
  std::map<std::string, std::map<std::string, std::size_t>> group_sizes;
  for (const auto& pair : pairs) {
    for (const auto& [key, label] : pair.metadata) ++group_sizes[key][label];
  }

  if (o.format == "tsv") {
    out << "group\tlabel\tutterances";
    if (Wants(o.level, "word")) out << "\tWER";
    if (Wants(o.level, "char")) out << "\tCER";
    if (Wants(o.level, "phone")) out << "\tPER";
    if (Wants(o.level, "component")) out << "\tinitial_ER\trhyme_ER\ttone_ER";
    out << '\n';
    TsvRow(out, "overall", "all", report.utterances, report.overall, o.level);
    for (const auto& [key, labels] : report.groups) {
      for (const auto& [label, counts] : labels) {
        TsvRow(out, key, label, group_sizes[key][label], counts, o.level);
      }
    }
    return kExitOk;
  }

  json doc;
  doc["component_counting"] =
      "deletions and insertions of whole syllables count once per component";
  doc["averaging"] = "micro";
  doc["overall"] = LevelJson(report.overall, report.utterances, o.level);
  doc["unique_correct_words"] = report.unique_correct_words;
  doc["groups"] = json::object();
  for (const auto& [key, labels] : report.groups) {
    for (const auto& [label, counts] : labels) {
      doc["groups"][key][label] = LevelJson(counts, group_sizes[key][label], o.level);
    }
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int LexiconReport(const Options& o, std::ostream& out, std::ostream&) {
  const auto train = corpus_io::ReadWordSequences(o.train);
  const auto pairs = LoadPairs(o.ref, o.hyp);
  const std::size_t unique = metrics::UniqueCorrectWords(pairs);
  const metrics::FrequencyBias bias = metrics::ComputeFrequencyBias(train, pairs);
  if (o.format == "tsv") {
    out << "unique_correct_words\tpearson_r\tspearman_rho\ttypes\n"
        << unique << '\t' << std::setprecision(6) << bias.pearson_r << '\t'
        << bias.spearman_rho << '\t' << bias.types.size() << '\n';
    return kExitOk;
  }
  json doc = {{"unique_correct_words", unique},
              {"pearson_r", bias.pearson_r},
              {"spearman_rho", bias.spearman_rho},
              {"types", bias.types.size()}};
  json per_type = json::array();
  for (const auto& t : bias.types) {
    per_type.push_back({{"word", t.word},
                        {"train_count", t.train_count},
                        {"log_frequency", t.log_frequency},
                        {"reference_count", t.reference_count},
                        {"matched", t.matched},
                        {"recall", t.recall}});
  }
  doc["per_type"] = std::move(per_type);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int BuildDict(const Options& o, std::ostream& out, std::ostream& err) {
  // Split without analysis so non-syllables reach the rejected list.
  std::vector<std::string> raw;
  for (const auto& line : corpus_io::ReadLines(o.wordlist)) {
    for (auto& w : unicode::SplitWhitespace(unicode::ToLower(unicode::ToNfc(line)))) {
      raw.push_back(std::move(w));
    }
  }
  const g2p::DictionaryBuild build = g2p::BuildDictionary(raw);
  if (build.dictionary.empty()) throw Error(ErrorKind::kEmptyDictionary, "no syllables in " + o.wordlist);
  out << build.dictionary.ToTsv();
  for (const auto& w : build.rejected) err << "build-dict: not a syllable: " << w << '\n';
  return kExitOk;
}

int DecoderDemo(const Options& o, std::ostream& out, std::ostream&) {
  decoder::DecoderConfig config;
  config.dim = o.dim;
  config.heads = o.heads;
  config.initial_vocab = config.rhyme_vocab = config.tone_vocab = o.vocab;
  config.seed = o.seed;
  config.Validate();
  const decoder::ToyDataset data =
      decoder::SynthesizeToyDataset(config, o.sequences, o.frames, 2, 6, o.seed + 1);
  decoder::DecoderParams params = decoder::DecoderParams::Initialize(config);

  const std::size_t probe = std::min<std::size_t>(2, data.examples.size());
  const decoder::GradCheckResult check = decoder::GradCheck(
      params, std::span(data.examples).first(probe), config, 1e-5);

  json curve = json::array();
  int done = 0;
  while (done < o.steps) {
    const int chunk = std::min(o.log_every, o.steps - done);
    const auto run = decoder::TrainGradientDescent(data.examples, params, config,
                                                   chunk, o.learning_rate);
    curve.push_back({{"step", done}, {"loss", run.losses.front()}});
    done += chunk;
  }
  const double final_loss = decoder::Loss(data.examples, params, config);
  curve.push_back({{"step", done}, {"loss", final_loss}});

  int exact = 0;
  for (std::size_t i = 0; i < data.examples.size(); ++i) {
    const int limit = static_cast<int>(data.sequences[i].size()) + 2;
    exact += decoder::DecodeGreedy(data.examples[i].acoustic, params, config, limit) ==
             data.sequences[i];
  }
  json doc = {
      {"config", {{"dim", config.dim}, {"heads", config.heads},
                  {"vocab", o.vocab}, {"frames", o.frames},
                  {"sequences", o.sequences}, {"steps", o.steps},
                  {"learning_rate", o.learning_rate}, {"seed", o.seed}}},
      {"grad_check", {{"epsilon", 1e-5},
                      {"max_relative_error", check.max_relative_error},
                      {"coordinates", check.coordinates},
                      {"tensors", check.tensors}}},
      {"loss_curve", curve},
      {"final_loss", final_loss},
      {"teacher_forced_accuracy",
       decoder::TeacherForcedAccuracy(data.examples, params, config)},
      {"exact_match", exact},
  };
  out << doc.dump(2) << '\n';
  return kExitOk;
}

void ApplyConfig(Options& o) {
  if (o.config.empty()) return;
  const auto config = corpus_io::ReadConfig(o.config);
  for (const auto& [key, value] : config) {
    if (key == "dict") {
      if (o.dict.empty()) o.dict = value;
    } else if (key == "on_oov" || key == "on-oov") {
      if (value != "skip" && value != "fail") {
        throw DataError(o.config + ": on_oov must be skip or fail");
      }
      if (o.on_oov.empty()) o.on_oov = value;
    } else {
      throw DataError(o.config + ": unknown key " + key);
    }
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Vietnamese syllabic tokenization, ASR metrics and decoder demo",
               "syllabic"};
  app.require_subcommand(1);
  app.add_option("--config", o.config, "key=value file (dict, on_oov)");

  const auto oov = CLI::IsMember({"skip", "fail"});
  auto* tokenize = app.add_subcommand("tokenize", "transcripts -> JSON-lines triplets");
  tokenize->add_option("--in", o.in, "one transcript per line")->required();
  tokenize->add_option("--dict", o.dict, "dictionary TSV");
  tokenize->add_option("--on-oov", o.on_oov, "skip or fail")->check(oov);

  auto* detokenize = app.add_subcommand("detokenize", "JSON-lines -> text");
  detokenize->add_option("--in", o.in, "tokenizer output")->required();
  detokenize->add_option("--dict", o.dict,
                         "render from triplets against this dictionary's vocabulary");

  auto* evaluate = app.add_subcommand("evaluate", "WER/CER/PER/component report");
  evaluate->add_option("--ref", o.ref)->required();
  evaluate->add_option("--hyp", o.hyp)->required();
  evaluate->add_option("--meta", o.meta, "TSV: line_no, dialect, province");
  evaluate->add_option("--level", o.level)
      ->check(CLI::IsMember({"word", "char", "phone", "component", "all"}));
  evaluate->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));

  auto* lexicon = app.add_subcommand("lexicon-report", "unique correct words and frequency bias");
  lexicon->add_option("--train", o.train)->required();
  lexicon->add_option("--ref", o.ref)->required();
  lexicon->add_option("--hyp", o.hyp)->required();
  lexicon->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));

  auto* build_dict = app.add_subcommand("build-dict", "word list -> dictionary TSV");
  build_dict->add_option("--wordlist", o.wordlist)->required();

  auto* demo = app.add_subcommand("decoder-demo", "train the decoder on toy data");
  demo->add_option("--dim", o.dim)->check(CLI::PositiveNumber);
  demo->add_option("--heads", o.heads)->check(CLI::PositiveNumber);
  demo->add_option("--steps", o.steps)->check(CLI::NonNegativeNumber);
  demo->add_option("--seed", o.seed);
  demo->add_option("--sequences", o.sequences)->check(CLI::PositiveNumber);
  demo->add_option("--vocab", o.vocab)->check(CLI::Range(5, 4096));
  demo->add_option("--frames", o.frames)->check(CLI::PositiveNumber);
  demo->add_option("--lr", o.learning_rate)->check(CLI::PositiveNumber);
  demo->add_option("--log-every", o.log_every)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "syllabic: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    ApplyConfig(o);
    if (*tokenize) return Tokenize(o, out, err);
    if (*detokenize) return Detokenize(o, out, err);
    if (*evaluate) return Evaluate(o, out, err);
    if (*lexicon) return LexiconReport(o, out, err);
    if (*build_dict) return BuildDict(o, out, err);
    if (*demo) return DecoderDemo(o, out, err);
  } catch (const std::exception& e) {
    err << "syllabic: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

int Main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return Run(args, std::cout, std::cerr);
}

}  // namespace syllabic::cli
