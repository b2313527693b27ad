// Copyright (c) 2026 The s2w Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// s2w: spoken-form to written-form conversion toolkit.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parallel.h"
#include "s2w/core/error.h"
#include "s2w/core/random.h"
#include "s2w/core/tag_io.h"
#include "s2w/datapipe/clean.h"
#include "s2w/datapipe/dialog_acts.h"
#include "s2w/datapipe/example.h"
#include "s2w/datapipe/split.h"
#include "s2w/datapipe/stats.h"
#include "s2w/datapipe/synth.h"
#include "s2w/eval/score.h"
#include "s2w/tagapply/apply_tags.h"
#include "s2w/tagger/model.h"
#include "s2w/tagger/tag_source.h"
#include "s2w/tokenizer/bpe.h"
#include "s2w/wfst/grammar_set.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace s2w::cli {
namespace {

constexpr const char *kVersion = "1.0.0";
constexpr std::size_t kBlock = 4096;  // lines per parallel batch

int g_jobs = 1;

// ---- I/O helpers ----------------------------------------------------------

class Input {
 public:
  explicit Input(const std::string &path) : path_(path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw Error("cannot open '" + path + "'");
  }
  std::istream &get() { return file_ ? *file_ : std::cin; }
  const std::string &path() const { return path_; }

 private:
  std::string path_;
  std::unique_ptr<std::ifstream> file_;
};

class Output {
 public:
  explicit Output(const std::string &path, bool binary = false) {
    if (path == "-") return;
    file_ = std::make_unique<std::ofstream>(
        path, binary ? std::ios::out | std::ios::binary : std::ios::out);
    if (!*file_) throw Error("cannot write '" + path + "'");
  }
  std::ostream &get() { return file_ ? *file_ : std::cout; }
  void Close() {
    get().flush();
    if (!get()) throw Error("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// Reads up to kBlock lines; false at end of input.
bool ReadBlock(std::istream &in, std::vector<std::string> &lines) {
  lines.clear();
  std::string line;
  while (lines.size() < kBlock && std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return !lines.empty();
}

void CheckOutputDir(const std::string &path) {
  if (path.empty() || path == "-") return;
  fs::path parent = fs::path(path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) {
    throw Error("output directory '" + parent.string() + "' does not exist");
  }
}

bool IsBlank(const std::string &line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// ---- shared resources -----------------------------------------------------

struct GrammarOption {
  std::string archive;

  const wfst::GrammarSet &Get() {
    if (archive.empty()) return wfst::BuiltinGrammars();
    if (!loaded_) {
      std::ifstream in(archive, std::ios::binary);
      if (!in) throw Error("cannot open grammar archive '" + archive + "'");
      loaded_ = std::make_unique<wfst::GrammarSet>(wfst::GrammarSet::Read(in));
    }
    return *loaded_;
  }
  void Add(CLI::App *app) {
    app->add_option("--grammars", archive,
                    "compiled grammar archive (default: built-in grammars)")
        ->check(CLI::ExistingFile);
  }

 private:
  std::unique_ptr<wfst::GrammarSet> loaded_;
};

struct TaggerFiles {
  std::string model_path;
  std::string bpe_path;

  std::string BpePath() const { return bpe_path.empty() ? model_path + ".bpe" : bpe_path; }
  void Validate() const {
    if (!fs::is_regular_file(model_path)) throw Error("no tagger model at '" + model_path + "'");
    if (!fs::is_regular_file(BpePath())) throw Error("no BPE model at '" + BpePath() + "'");
  }
  std::pair<tagger::JointModel, tokenizer::BpeModel> Load() const {
    std::ifstream m(model_path, std::ios::binary);
    if (!m) throw Error("cannot open '" + model_path + "'");
    std::ifstream b(BpePath());
    if (!b) throw Error("cannot open '" + BpePath() + "'");
    try {
      auto model = tagger::JointModel::Read(m);
      return {std::move(model), tokenizer::BpeModel::Read(b)};
    } catch (const ParseError &e) {
      throw ParseError(e.message(), e.line(), e.column(), model_path + "|" + BpePath());
    }
  }
};

json SpanJson(const EntitySpan &s, const std::vector<std::string> &words) {
  return {{"type", std::string(EntityTypeName(s.type))},
          {"start", s.start},
          {"end", s.end},
          {"words", JoinWords(words, s.start, s.end)}};
}

// One report line per formatted input line with an unparsed span.
void WriteReportLine(std::ostream *report, std::size_t line_number,
                     const std::vector<std::string> &words,
                     const tagapply::FormattedOutput &out) {
  if (!report || out.unparsed_spans.empty()) return;
  json j;
  j["line"] = line_number;
  j["input"] = JoinWords(words);
  j["unparsed_spans"] = json::array();
  for (const auto &s : out.unparsed_spans) j["unparsed_spans"].push_back(SpanJson(s, words));
  *report << j.dump() << '\n';
}

// ---- compile-grammars -----------------------------------------------------

struct CompileArgs {
  std::string rules;
  std::string out;
};

int CompileGrammars(const CompileArgs &a) {
  CheckOutputDir(a.out);
  std::vector<fs::path> files;
  for (const auto &e : fs::directory_iterator(a.rules)) {
    if (e.is_regular_file() && e.path().extension() == ".grm") files.push_back(e.path());
  }
  if (files.empty()) throw Error("no .grm files in '" + a.rules + "'");
  auto set = wfst::GrammarSet::CompileDirectory(a.rules);
  Output out(a.out, true);
  set.Write(out.get());
  out.Close();
  std::cerr << "compiled " << files.size() << " rule files into " << kNumEntityTypes
            << " grammars\n";
  return 0;
}

// ---- prepare ---------------------------------------------------------------

struct PrepareArgs {
  std::string corpus;
  std::string out_prefix;
  std::uint64_t seed = 1;
  std::string dialog_acts;
  double disfluency_rate = 0.0;
  std::size_t min_words = 3;
  GrammarOption grammars;
};

struct Prepared {
  enum Kind { kExample, kRejected, kQuarantined } kind = kRejected;
  std::string line;  // tag-column record or quarantine line
};

int Prepare(PrepareArgs &a) {
  const std::string train_path = a.out_prefix + ".train.tags";
  const std::string val_path = a.out_prefix + ".val.tags";
  const std::string quarantine_path = a.out_prefix + ".quarantine.tsv";
  const std::string manifest_path = a.out_prefix + ".manifest.json";
  const std::string pool_path = a.out_prefix + ".pool.tmp";
  CheckOutputDir(train_path);
  if (a.disfluency_rate < 0 || a.disfluency_rate > 1) {
    throw InvalidArgument("--disfluency-rate must be in [0, 1]");
  }
  const auto &grammars = a.grammars.Get();

  std::size_t input_lines = 0, rejected = 0, quarantined = 0, examples = 0, dialog = 0;
  {
    Input in(a.corpus);
    Output pool(pool_path);
    Output quarantine(quarantine_path);
    std::vector<std::string> block;
    std::size_t base = 0;
    while (ReadBlock(in.get(), block)) {
      auto results = ParallelMap<Prepared>(block, g_jobs, [&](std::size_t i, const std::string &text) {
        const std::size_t line = base + i + 1;
        Prepared p;
        auto clean = datapipe::CleanRecord(text, datapipe::CleanOptions{a.min_words});
        if (!clean) return p;
        auto r = datapipe::GenerateExample(*clean, grammars, std::to_string(line));
        if (!r.example) {
          p.kind = Prepared::kQuarantined;
          p.line = std::to_string(line) + "\t" + r.diagnostic + "\t" + *clean;
          return p;
        }
        datapipe::AlignedExample ex = std::move(*r.example);
        if (a.disfluency_rate > 0) {
          std::seed_seq seq{static_cast<std::uint32_t>(a.seed), static_cast<std::uint32_t>(a.seed >> 32),
                            static_cast<std::uint32_t>(line), static_cast<std::uint32_t>(line >> 32)};
          Rng rng(seq);
          ex = datapipe::InjectDisfluencies(ex, rng, a.disfluency_rate);
        }
        p.kind = Prepared::kExample;
        p.line = FormatTagColumnLine(ex.ToTagged());
        return p;
      });
      for (auto &p : results) {
        ++input_lines;
        switch (p.kind) {
          case Prepared::kRejected: ++rejected; break;
          case Prepared::kQuarantined:
            ++quarantined;
            quarantine.get() << p.line << '\n';
            break;
          case Prepared::kExample:
            ++examples;
            pool.get() << p.line << '\n';
            break;
        }
      }
      base += block.size();
    }
    if (!a.dialog_acts.empty()) {
      Input da(a.dialog_acts);
      std::string line;
      std::size_t n = 0;
      while (std::getline(da.get(), line)) {
        ++n;
        if (IsBlank(line)) continue;
        auto rec = datapipe::ParseDisfluencyRecord(line, n);
        try {
          pool.get() << FormatTagColumnLine(datapipe::DisfluencyRecordToTagged(rec)) << '\n';
        } catch (const InvalidArgument &e) {
          throw ParseError(e.what(), n, 0, a.dialog_acts);
        }
        ++dialog;
      }
    }
    pool.Close();
    quarantine.Close();
  }
  const std::size_t total = examples + dialog;
  if (total == 0) {
    fs::remove(pool_path);
    throw Error("corpus '" + a.corpus + "' produced no usable records (" +
                std::to_string(input_lines) + " input lines)");
  }

  // Second pass routes pooled records by the split.
  const auto split = datapipe::SplitIndicesFor(total, a.seed);
  std::vector<bool> is_val(total, false);
  for (auto i : split.validation) is_val[i] = true;
  datapipe::CorpusStats train_stats, val_stats;
  {
    std::ifstream pool(pool_path);
    Output train(train_path), val(val_path);
    TagColumnReader reader(pool);
    std::size_t i = 0;
    while (auto rec = reader.Next()) {
      (is_val[i] ? val_stats : train_stats).Add(*rec);
      (is_val[i] ? val : train).get() << FormatTagColumnLine(*rec) << '\n';
      ++i;
    }
    train.Close();
    val.Close();
  }
  fs::remove(pool_path);

  json m;
  m["corpus"] = a.corpus;
  m["seed"] = a.seed;
  m["input_lines"] = input_lines;
  m["rejected_by_cleaning"] = rejected;
  m["quarantined"] = quarantined;
  m["examples"] = examples;
  m["dialog_act_records"] = dialog;
  m["disfluency_rate"] = a.disfluency_rate;
  m["train"] = {{"path", train_path}, {"records", split.train.size()}, {"stats", train_stats.ToJson()}};
  m["validation"] = {{"path", val_path}, {"records", split.validation.size()}, {"stats", val_stats.ToJson()}};
  m["quarantine"] = quarantine_path;
  Output manifest(manifest_path);
  manifest.get() << m.dump(2) << '\n';
  manifest.Close();
  std::cerr << "prepared " << total << " records: " << split.train.size() << " train, "
            << split.validation.size() << " validation; " << quarantined << " quarantined, "
            << rejected << " rejected by cleaning\n";
  return 0;
}

// ---- train -----------------------------------------------------------------

struct TrainArgs {
  std::string train;
  std::string model;
  std::string bpe_model;
  std::string task = "joint";
  std::string log;
  std::size_t vocab_size = 8000;
  int feature_bits = 20;
  int epochs = 10;
  double learning_rate = 0.1;
  double l2 = 0.0;
  std::uint64_t seed = 1;
};

int Train(const TrainArgs &a) {
  CheckOutputDir(a.model);
  CheckOutputDir(a.log);
  std::optional<Task> single;
  if (a.task != "joint") {
    single = ParseTaskName(a.task);
    if (!single) throw InvalidArgument("unknown --task '" + a.task + "'");
  }
  if (a.feature_bits < 1 || a.feature_bits > 28) {
    throw InvalidArgument("--feature-bits must be in [1, 28]");
  }
  const auto data_words = tagger::LoadTags(a.train);
  if (data_words.empty()) throw Error("training file '" + a.train + "' has no records");

  tokenizer::BpeModel bpe;
  if (!a.bpe_model.empty()) {
    std::ifstream in(a.bpe_model);
    if (!in) throw Error("cannot open '" + a.bpe_model + "'");
    bpe = tokenizer::BpeModel::Read(in);
  } else {
    std::vector<std::vector<std::string>> corpus;
    for (const auto &s : data_words) {
      if (!s.words.empty()) corpus.push_back(s.words);
    }
    bpe = tokenizer::BpeModel::Train(corpus, a.vocab_size);
  }

  tagger::TrainConfig cfg;
  cfg.feature_dim = std::size_t{1} << a.feature_bits;
  cfg.epochs = a.epochs;
  cfg.learning_rate = a.learning_rate;
  cfg.l2 = a.l2;
  cfg.seed = a.seed;
  std::vector<tagger::TokenExample> data;
  data.reserve(data_words.size());
  for (const auto &s : data_words) data.push_back(tagger::MakeTokenExample(s, bpe, cfg.feature_dim));

  std::unique_ptr<Output> log;
  if (!a.log.empty()) {
    log = std::make_unique<Output>(a.log);
    log->get() << "epoch\tce_i\tce_p\tce_c\tce_d\tce_joint\n";
  }
  auto on_epoch = [&](const tagger::EpochLog &e) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%d\t%.17g\t%.17g\t%.17g\t%.17g\t%.17g", e.epoch, e.loss.ce_i,
                  e.loss.ce_p, e.loss.ce_c, e.loss.ce_d, e.loss.ce_joint);
    if (log) log->get() << buf << '\n';
    std::fprintf(stderr, "epoch %d ce_joint %.6f (itn %.6f punct %.6f cap %.6f disf %.6f)\n",
                 e.epoch, e.loss.ce_joint, e.loss.ce_i, e.loss.ce_p, e.loss.ce_c, e.loss.ce_d);
  };
  auto result = single ? tagger::TrainSingle(data, *single, cfg, on_epoch)
                       : tagger::TrainJoint(data, cfg, on_epoch);
  if (log) log->Close();

  Output model(a.model, true);
  result.model.Write(model.get());
  model.Close();
  Output bpe_out(a.model + ".bpe");
  bpe.Write(bpe_out.get());
  bpe_out.Close();
  return 0;
}

// ---- tag / apply / convert ------------------------------------------------

struct TagArgs {
  TaggerFiles files;
  std::string input = "-";
  std::string output = "-";
};

int Tag(const TagArgs &a) {
  a.files.Validate();
  CheckOutputDir(a.output);
  const auto [model, bpe] = a.files.Load();
  Input in(a.input);
  Output out(a.output);
  std::vector<std::string> block;
  while (ReadBlock(in.get(), block)) {
    auto lines = ParallelMap<std::string>(block, g_jobs, [&](std::size_t, const std::string &text) {
      auto words = SplitWords(text);
      if (words.empty()) return std::string();
      return FormatTagColumnLine({words, tagger::Predict(words, model, bpe)});
    });
    for (const auto &l : lines) out.get() << l << '\n';
  }
  out.Close();
  return 0;
}

struct ApplyArgs {
  std::string tags = "-";
  std::string output = "-";
  std::string report;
  GrammarOption grammars;
};

int Apply(ApplyArgs &a) {
  CheckOutputDir(a.output);
  CheckOutputDir(a.report);
  const auto &g = a.grammars.Get();
  Input in(a.tags);
  Output out(a.output);
  std::unique_ptr<Output> report;
  if (!a.report.empty()) report = std::make_unique<Output>(a.report);
  std::vector<std::string> block;
  std::size_t base = 0;
  using Result = std::optional<std::pair<TaggedSentence, tagapply::FormattedOutput>>;
  while (ReadBlock(in.get(), block)) {
    auto results = ParallelMap<Result>(block, g_jobs, [&](std::size_t i, const std::string &line) -> Result {
      if (IsBlank(line)) return std::nullopt;
      TaggedSentence s;
      try {
        s = ParseTagColumnLine(line, base + i + 1);
      } catch (const ParseError &e) {
        throw ParseError(e.message(), e.line(), e.column(), a.tags);
      }
      auto f = tagapply::ApplyTags(s.words, s.tags, g);
      return std::make_pair(std::move(s), std::move(f));
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i]) {
        out.get() << '\n';
        continue;
      }
      out.get() << results[i]->second.text << '\n';
      WriteReportLine(report ? &report->get() : nullptr, base + i + 1, results[i]->first.words,
                      results[i]->second);
    }
    base += block.size();
  }
  out.Close();
  if (report) report->Close();
  return 0;
}

struct ConvertArgs {
  TaggerFiles files;
  std::string tags;
  std::string input = "-";
  std::string output = "-";
  std::string report;
  GrammarOption grammars;
};

int Convert(ConvertArgs &a) {
  if (a.tags.empty() == a.files.model_path.empty()) {
    throw InvalidArgument("give exactly one of --model and --tags");
  }
  if (!a.files.model_path.empty()) a.files.Validate();
  CheckOutputDir(a.output);
  CheckOutputDir(a.report);
  const auto &g = a.grammars.Get();
  std::optional<std::pair<tagger::JointModel, tokenizer::BpeModel>> tagger_model;
  if (!a.files.model_path.empty()) tagger_model = a.files.Load();
  std::unique_ptr<Input> tag_in;
  std::unique_ptr<TagColumnReader> tag_reader;
  if (!a.tags.empty()) {
    tag_in = std::make_unique<Input>(a.tags);
    tag_reader = std::make_unique<TagColumnReader>(tag_in->get());
  }
  Input in(a.input);
  Output out(a.output);
  std::unique_ptr<Output> report;
  if (!a.report.empty()) report = std::make_unique<Output>(a.report);

  std::vector<std::string> block;
  std::size_t base = 0;
  struct Item {
    std::vector<std::string> words;
    std::optional<TagSet> tags;  // from the tag file
  };
  using Result = std::optional<tagapply::FormattedOutput>;
  while (ReadBlock(in.get(), block)) {
    std::vector<Item> items(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) {
      items[i].words = SplitWords(block[i]);
      if (items[i].words.empty() || !tag_reader) continue;
      std::optional<TaggedSentence> rec;
      try {
        rec = tag_reader->Next();
      } catch (const ParseError &e) {
        throw ParseError(e.message(), e.line(), e.column(), a.tags);
      }
      if (!rec) {
        throw Error("tag file '" + a.tags + "' ends before input line " +
                    std::to_string(base + i + 1));
      }
      if (rec->words != items[i].words) {
        throw ParseError("tag record words differ from input line " + std::to_string(base + i + 1),
                         tag_reader->line_number(), 0, a.tags);
      }
      items[i].tags = std::move(rec->tags);
    }
    auto results = ParallelMap<Result>(items, g_jobs, [&](std::size_t, const Item &item) -> Result {
      if (item.words.empty()) return std::nullopt;
      TagSet tags = item.tags ? *item.tags
                              : tagger::Predict(item.words, tagger_model->first, tagger_model->second);
      return tagapply::ApplyTags(item.words, tags, g);
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i]) {
        out.get() << '\n';
        continue;
      }
      out.get() << results[i]->text << '\n';
      WriteReportLine(report ? &report->get() : nullptr, base + i + 1, items[i].words, *results[i]);
    }
    base += block.size();
  }
  if (tag_reader && tag_reader->Next()) {
    throw Error("tag file '" + a.tags + "' has more records than the input has non-empty lines");
  }
  out.Close();
  if (report) report->Close();
  return 0;
}

// ---- eval / stats / synth -------------------------------------------------

struct EvalArgs {
  std::string pred;
  std::string gold;
  std::string label = "model";
  std::string json_path;
  std::string output = "-";
};

int Eval(const EvalArgs &a) {
  CheckOutputDir(a.json_path);
  CheckOutputDir(a.output);
  const auto pred = tagger::LoadTags(a.pred);
  const auto gold = tagger::LoadTags(a.gold);
  const auto report = eval::Score(pred, gold);
  Output out(a.output);
  out.get() << eval::RenderReport({{a.label, report}});
  out.Close();
  if (!a.json_path.empty()) {
    Output j(a.json_path);
    json doc = report.ToJson();
    doc["label"] = a.label;
    doc["pred"] = a.pred;
    doc["gold"] = a.gold;
    j.get() << doc.dump(2) << '\n';
    j.Close();
  }
  return 0;
}

struct StatsArgs {
  std::string input = "-";
};

int Stats(const StatsArgs &a) {
  Input in(a.input);
  TagColumnReader reader(in.get());
  datapipe::CorpusStats stats;
  try {
    while (auto rec = reader.Next()) stats.Add(*rec);
  } catch (const ParseError &e) {
    throw ParseError(e.message(), e.line(), e.column(), a.input);
  }
  std::cout << stats.ToJson().dump(2) << '\n';
  return 0;
}

struct SynthArgs {
  std::size_t count = 5000;
  std::uint64_t seed = 1;
  std::string output = "-";
};

int Synth(const SynthArgs &a) {
  CheckOutputDir(a.output);
  Output out(a.output);
  for (const auto &s : datapipe::SynthesizeCorpus(a.count, a.seed)) out.get() << s << '\n';
  out.Close();
  return 0;
}

std::string VersionString() {
  return std::string("s2w ") + kVersion + "\ngrammar archive format " +
         std::to_string(wfst::kGrammarArchiveVersion) + "\ntagger model format " +
         std::to_string(tagger::kTaggerFormatVersion) + "\nbpe model format " +
         std::to_string(tokenizer::kBpeFormatVersion);
}

int Run(int argc, char **argv) {
  CLI::App app{"Spoken-form to written-form conversion: grammars, data, tagging, formatting"};
  app.require_subcommand(1);
  app.set_version_flag("--version", VersionString());
  app.add_option("--jobs,-j", g_jobs, "worker threads for record-parallel commands")
      ->check(CLI::PositiveNumber);
  int rc = 0;

  CompileArgs compile;
  auto *c = app.add_subcommand("compile-grammars", "compile rule files into a grammar archive");
  c->add_option("--rules", compile.rules, "directory of .grm rule files")
      ->required()
      ->check(CLI::ExistingDirectory);
  c->add_option("--out,-o", compile.out, "archive path")->required();
  c->callback([&] { rc = CompileGrammars(compile); });

  PrepareArgs prepare;
  auto *p = app.add_subcommand("prepare", "written corpus -> tagged train/validation files");
  p->add_option("--corpus", prepare.corpus, "written-form text, one record per line")
      ->required()
      ->check(CLI::ExistingFile);
  p->add_option("--out-prefix", prepare.out_prefix, "output path prefix")->required();
  p->add_option("--seed", prepare.seed, "split and noise seed");
  p->add_option("--dialog-acts", prepare.dialog_acts, "disfluency markup, JSON lines")
      ->check(CLI::ExistingFile);
  p->add_option("--disfluency-rate", prepare.disfluency_rate,
                "probability of inserting synthetic disfluency before a word");
  p->add_option("--min-words", prepare.min_words, "drop cleaned records shorter than this");
  prepare.grammars.Add(p);
  p->callback([&] { rc = Prepare(prepare); });

  TrainArgs train;
  auto *t = app.add_subcommand("train", "train the linear tagger (writes MODEL and MODEL.bpe)");
  t->add_option("--train", train.train, "tag-column training file")
      ->required()
      ->check(CLI::ExistingFile);
  t->add_option("--model,-o", train.model, "output model path")->required();
  t->add_option("--bpe-model", train.bpe_model, "reuse this BPE model instead of training one")
      ->check(CLI::ExistingFile);
  t->add_option("--task", train.task, "joint, itn, punct, cap or disf")
      ->check(CLI::IsMember({"joint", "itn", "punct", "cap", "disf"}));
  t->add_option("--log", train.log, "per-epoch loss log (TSV)");
  t->add_option("--vocab-size", train.vocab_size, "BPE vocabulary size");
  t->add_option("--feature-bits", train.feature_bits, "log2 of the hashed feature dimension");
  t->add_option("--epochs", train.epochs);
  t->add_option("--learning-rate", train.learning_rate);
  t->add_option("--l2", train.l2);
  t->add_option("--seed", train.seed);
  t->callback([&] { rc = Train(train); });

  TagArgs tag;
  auto *g = app.add_subcommand("tag", "spoken-form lines -> tag-column records");
  g->add_option("--model,-m", tag.files.model_path)->required();
  g->add_option("--bpe", tag.files.bpe_path, "BPE model (default MODEL.bpe)");
  g->add_option("--input,-i", tag.input)->check(CLI::ExistingFile | CLI::IsMember({"-"}));
  g->add_option("--output,-o", tag.output);
  g->callback([&] { rc = Tag(tag); });

  ApplyArgs apply;
  auto *ap = app.add_subcommand("apply", "tag-column records -> written-form lines");
  ap->add_option("--tags,-i", apply.tags)->check(CLI::ExistingFile | CLI::IsMember({"-"}));
  ap->add_option("--output,-o", apply.output);
  ap->add_option("--report", apply.report, "JSON lines of spans the grammars could not format");
  apply.grammars.Add(ap);
  ap->callback([&] { rc = Apply(apply); });

  ConvertArgs convert;
  auto *cv = app.add_subcommand("convert", "spoken-form lines -> written-form lines");
  cv->add_option("--model,-m", convert.files.model_path);
  cv->add_option("--bpe", convert.files.bpe_path, "BPE model (default MODEL.bpe)");
  cv->add_option("--tags", convert.tags, "use these tags instead of a model")
      ->check(CLI::ExistingFile);
  cv->add_option("--input,-i", convert.input)->check(CLI::ExistingFile | CLI::IsMember({"-"}));
  cv->add_option("--output,-o", convert.output);
  cv->add_option("--report", convert.report, "JSON lines of spans the grammars could not format");
  convert.grammars.Add(cv);
  cv->callback([&] { rc = Convert(convert); });

  EvalArgs ev;
  auto *e = app.add_subcommand("eval", "word-level P/R/F1 of predicted against gold tags");
  e->add_option("--pred", ev.pred)->required()->check(CLI::ExistingFile);
  e->add_option("--gold", ev.gold)->required()->check(CLI::ExistingFile);
  e->add_option("--label", ev.label, "row label");
  e->add_option("--json", ev.json_path, "JSON report with unrounded values");
  e->add_option("--output,-o", ev.output);
  e->callback([&] { rc = Eval(ev); });

  StatsArgs stats;
  auto *s = app.add_subcommand("stats", "tag distribution of a tag-column file");
  s->add_option("--input,-i", stats.input)->check(CLI::ExistingFile | CLI::IsMember({"-"}));
  s->callback([&] { rc = Stats(stats); });

  SynthArgs synth;
  auto *sy = app.add_subcommand("synth", "generate a synthetic written-form corpus");
  sy->add_option("--count,-n", synth.count);
  sy->add_option("--seed", synth.seed);
  sy->add_option("--output,-o", synth.output);
  sy->callback([&] { rc = Synth(synth); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }
  return rc;
}

}  // namespace
}  // namespace s2w::cli

int main(int argc, char **argv) {
  try {
    return s2w::cli::Run(argc, argv);
  } catch (const std::exception &e) {
    std::cerr << "s2w: error: " << e.what() << '\n';
    return 1;
  }
}
