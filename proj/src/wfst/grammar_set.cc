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

#include "s2w/wfst/grammar_set.h"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "s2w/core/error.h"
#include "s2w/wfst/grammar_compiler.h"

namespace s2w::wfst {

namespace {

constexpr char kMagic[4] = {'S', '2', 'W', 'G'};

void PutU32(std::ostream &out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b, 4);
}

void PutF64(std::ostream &out, double d) {
  std::uint64_t v = std::bit_cast<std::uint64_t>(d);
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b, 8);
}

void PutU8(std::ostream &out, std::uint8_t v) {
  out.put(static_cast<char>(v));
}

void ReadExact(std::istream &in, char *buf, std::size_t n) {
  in.read(buf, static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) {
    throw ParseError("grammar archive is truncated");
  }
}

std::uint32_t GetU32(std::istream &in) {
  unsigned char b[4];
  ReadExact(in, reinterpret_cast<char *>(b), 4);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

double GetF64(std::istream &in) {
  unsigned char b[8];
  ReadExact(in, reinterpret_cast<char *>(b), 8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return std::bit_cast<double>(v);
}

std::uint8_t GetU8(std::istream &in) {
  char c;
  ReadExact(in, &c, 1);
  return static_cast<std::uint8_t>(c);
}

std::string EntryPoint(EntityType type) {
  return "itn_" + std::string(EntityTypeName(type));
}

}  // namespace

GrammarSet GrammarSet::Compile(const std::vector<GrammarSource> &sources) {
  GrammarSet set;
  set.symbols_ = std::make_shared<SymbolTable>();
  // The space symbol separates written words on every character tape.
  set.symbols_->AddSymbol(kSpaceSymbol);
  GrammarCompiler compiler(set.symbols_);
  for (const GrammarSource &src : sources) compiler.AddSource(src.text, src.name);
  for (EntityType type : kAllEntityTypes) {
    const std::string entry = EntryPoint(type);
    if (!compiler.HasRule(entry)) {
      throw ParseError("missing entry point '" + entry + "' for entity type " +
                       std::string(EntityTypeName(type)));
    }
    set.forward_.push_back(compiler.Compile(entry));
  }
  set.Finish();
  return set;
}

GrammarSet GrammarSet::CompileDirectory(const std::filesystem::path &dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw InvalidArgument("grammar directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".grm") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<GrammarSource> sources;
  for (const auto &path : files) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    sources.push_back({path.filename().string(), text.str()});
  }
  return Compile(sources);
}

void GrammarSet::Finish() {
  inverse_.clear();
  for (std::size_t t = 0; t < forward_.size(); ++t) {
    inverse_.push_back(Invert(forward_[t]));
    auto &alphabet = written_alphabet_[t];
    alphabet.assign(symbols_->size(), false);
    const Fst &f = forward_[t];
    for (StateId s = 0; s < f.NumStates(); ++s) {
      for (const Arc &arc : f.Arcs(s)) alphabet[arc.olabel] = true;
    }
  }
}

const Fst &GrammarSet::Forward(EntityType type) const {
  return forward_.at(static_cast<std::size_t>(type));
}

const Fst &GrammarSet::Inverse(EntityType type) const {
  return inverse_.at(static_cast<std::size_t>(type));
}

std::optional<TranslationResult> GrammarSet::Format(
    EntityType type, const std::vector<std::string> &spoken) const {
  return ShortestPath(Forward(type), spoken);
}

std::optional<TranslationResult> GrammarSet::Verbalize(
    EntityType type, const std::vector<std::string> &written) const {
  const Fst &inv = Inverse(type);
  auto labels = EncodeTape(*symbols_, inv.input_tape(), written);
  if (!labels) return std::nullopt;
  const auto &alphabet = written_alphabet_[static_cast<std::size_t>(type)];
  for (Label l : *labels) {
    if (!alphabet[l]) return std::nullopt;
  }
  return ShortestPath(inv, written);
}

void GrammarSet::Write(std::ostream &out) const {
  out.write(kMagic, 4);
  PutU8(out, kGrammarArchiveVersion);
  PutU32(out, static_cast<std::uint32_t>(symbols_->size() - 1));
  for (Label l = 1; l < symbols_->size(); ++l) {
    const std::string &sym = symbols_->Symbol(l);
    PutU32(out, static_cast<std::uint32_t>(sym.size()));
    out.write(sym.data(), static_cast<std::streamsize>(sym.size()));
  }
  PutU32(out, static_cast<std::uint32_t>(forward_.size()));
  for (std::size_t t = 0; t < forward_.size(); ++t) {
    const Fst &f = forward_[t];
    PutU8(out, static_cast<std::uint8_t>(t));
    PutU8(out, static_cast<std::uint8_t>(f.input_tape()));
    PutU8(out, static_cast<std::uint8_t>(f.output_tape()));
    PutU32(out, static_cast<std::uint32_t>(f.NumStates()));
    PutU32(out, f.start());
    for (StateId s = 0; s < f.NumStates(); ++s) {
      PutF64(out, f.Final(s).value());
      PutU32(out, static_cast<std::uint32_t>(f.Arcs(s).size()));
      for (const Arc &arc : f.Arcs(s)) {
        PutU32(out, arc.ilabel);
        PutU32(out, arc.olabel);
        PutF64(out, arc.weight.value());
        PutU32(out, arc.nextstate);
      }
    }
  }
  if (!out) throw Error("failed writing grammar archive");
}

GrammarSet GrammarSet::Read(std::istream &in) {
  char magic[4];
  ReadExact(in, magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) {
    throw ParseError("not a grammar archive (bad magic)");
  }
  std::uint8_t version = GetU8(in);
  if (version != kGrammarArchiveVersion) {
    throw ParseError("unsupported grammar archive version " +
                     std::to_string(version));
  }
  GrammarSet set;
  set.symbols_ = std::make_shared<SymbolTable>();
  std::uint32_t num_symbols = GetU32(in);
  for (std::uint32_t i = 0; i < num_symbols; ++i) {
    std::uint32_t len = GetU32(in);
    std::string sym(len, '\0');
    ReadExact(in, sym.data(), len);
    if (set.symbols_->AddSymbol(sym) != i + 1) {
      throw ParseError("grammar archive has a duplicate symbol");
    }
  }
  std::uint32_t num_grammars = GetU32(in);
  if (num_grammars != kNumEntityTypes) {
    throw ParseError("grammar archive holds " + std::to_string(num_grammars) +
                     " grammars, expected " + std::to_string(kNumEntityTypes));
  }
  for (std::uint32_t g = 0; g < num_grammars; ++g) {
    if (GetU8(in) != g) throw ParseError("grammar archive entries out of order");
    auto in_tape = static_cast<TapeKind>(GetU8(in));
    auto out_tape = static_cast<TapeKind>(GetU8(in));
    Fst f(set.symbols_);
    f.SetTapes(in_tape, out_tape);
    std::uint32_t num_states = GetU32(in);
    StateId start = GetU32(in);
    for (std::uint32_t s = 0; s < num_states; ++s) f.AddState();
    for (std::uint32_t s = 0; s < num_states; ++s) {
      f.SetFinal(s, TropicalWeight(GetF64(in)));
      std::uint32_t num_arcs = GetU32(in);
      for (std::uint32_t a = 0; a < num_arcs; ++a) {
        Arc arc;
        arc.ilabel = GetU32(in);
        arc.olabel = GetU32(in);
        arc.weight = TropicalWeight(GetF64(in));
        arc.nextstate = GetU32(in);
        f.AddArc(s, arc);
      }
    }
    f.SetStart(num_states == 0 ? kNoState : start);
    if (!f.Verify()) throw ParseError("grammar archive holds an invalid FST");
    set.forward_.push_back(std::move(f));
  }
  set.Finish();
  return set;
}

NormalizedText NormalizeWithAlignment(const std::vector<std::string> &written,
                                      const GrammarSet &grammars) {
  NormalizedText out;
  std::size_t i = 0;
  while (i < written.size()) {
    std::optional<TranslationResult> best;
    EntityType best_type = EntityType::kAlphanumeric;
    std::size_t best_len = 0;
    const std::size_t max_len = std::min(kMaxEntityWindow, written.size() - i);
    for (std::size_t len = max_len; len >= 1 && !best; --len) {
      std::vector<std::string> window(written.begin() + i,
                                      written.begin() + i + len);
      for (EntityType type : kNormalizePriority) {
        best = grammars.Verbalize(type, window);
        if (best && best->output.empty()) best.reset();
        if (best) {
          best_type = type;
          best_len = len;
          break;
        }
      }
    }
    if (!best) {
      out.spoken.push_back(written[i]);
      ++i;
      continue;
    }
    const std::size_t begin = out.spoken.size();
    for (auto &w : best->output) out.spoken.push_back(std::move(w));
    out.entities.push_back(
        {best_type, {begin, out.spoken.size()}, {i, i + best_len}});
    i += best_len;
  }
  return out;
}

}  // namespace s2w::wfst
