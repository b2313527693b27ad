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

#include "s2w/core/tags.h"

#include <algorithm>

#include "s2w/core/error.h"

namespace s2w {

namespace {

constexpr std::array<std::string_view, kNumEntityTypes> kEntityNames = {
    "alphanumeric", "numeric", "ordinal", "money", "time"};
constexpr std::array<std::string_view, 4> kPunctNames = {
    "O", "comma", "period", "question_mark"};
constexpr std::array<std::string_view, 3> kCapNames = {"O", "C", "U"};
constexpr std::array<std::string_view, 7> kDisfNames = {
    "O", "C_RT", "R_RT", "C", "R", "F", "D"};

template <std::size_t N>
std::optional<std::size_t> Lookup(const std::array<std::string_view, N> &names,
                                  std::string_view text) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == text) return i;
  }
  return std::nullopt;
}

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r' || line[i] == '\n')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r' && line[j] != '\n') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string_view EntityTypeName(EntityType type) {
  return kEntityNames[static_cast<std::size_t>(type)];
}

std::optional<EntityType> ParseEntityType(std::string_view name) {
  auto i = Lookup(kEntityNames, name);
  if (!i) return std::nullopt;
  return static_cast<EntityType>(*i);
}

std::string_view TaskName(Task task) {
  static constexpr std::array<std::string_view, kNumTasks> kNames = {
      "itn", "punct", "cap", "disf"};
  return kNames[static_cast<std::size_t>(task)];
}

std::optional<Task> ParseTaskName(std::string_view name) {
  for (Task t : kAllTasks) {
    if (TaskName(t) == name) return t;
  }
  return std::nullopt;
}

char PunctChar(PunctTag tag) {
  switch (tag) {
    case PunctTag::kComma: return ',';
    case PunctTag::kPeriod: return '.';
    case PunctTag::kQuestionMark: return '?';
    case PunctTag::kO: break;
  }
  return '\0';
}

std::size_t TagTraits<ItnTag>::Index(ItnTag tag) {
  switch (tag.kind) {
    case ItnTag::Kind::kO: return 0;
    case ItnTag::Kind::kBegin: return 1 + static_cast<std::size_t>(tag.type);
    case ItnTag::Kind::kCont:
      return 1 + kNumEntityTypes + static_cast<std::size_t>(tag.type);
  }
  return 0;
}

ItnTag TagTraits<ItnTag>::FromIndex(std::size_t index) {
  if (index == 0) return ItnTag::O();
  if (index <= kNumEntityTypes) {
    return ItnTag::Begin(static_cast<EntityType>(index - 1));
  }
  if (index < kNumClasses) {
    return ItnTag::Cont(static_cast<EntityType>(index - 1 - kNumEntityTypes));
  }
  throw InvalidArgument("ITN class index out of range: " + std::to_string(index));
}

std::string TagTraits<ItnTag>::Name(ItnTag tag) {
  switch (tag.kind) {
    case ItnTag::Kind::kO: return "O";
    case ItnTag::Kind::kBegin: return std::string(EntityTypeName(tag.type));
    case ItnTag::Kind::kCont: return "_" + std::string(EntityTypeName(tag.type));
  }
  return "O";
}

std::optional<ItnTag> TagTraits<ItnTag>::Parse(std::string_view text) {
  if (text == "O") return ItnTag::O();
  bool cont = !text.empty() && text.front() == '_';
  if (cont) text.remove_prefix(1);
  auto type = ParseEntityType(text);
  if (!type) return std::nullopt;
  return cont ? ItnTag::Cont(*type) : ItnTag::Begin(*type);
}

#define S2W_SIMPLE_TRAITS(TagType, names)                                     \
  TagType TagTraits<TagType>::FromIndex(std::size_t index) {                  \
    if (index >= kNumClasses) {                                               \
      throw InvalidArgument(#TagType " class index out of range: " +          \
                            std::to_string(index));                           \
    }                                                                         \
    return static_cast<TagType>(index);                                       \
  }                                                                           \
  std::string TagTraits<TagType>::Name(TagType tag) {                         \
    return std::string(names[static_cast<std::size_t>(tag)]);                 \
  }                                                                           \
  std::optional<TagType> TagTraits<TagType>::Parse(std::string_view text) {   \
    auto i = Lookup(names, text);                                             \
    if (!i) return std::nullopt;                                              \
    return static_cast<TagType>(*i);                                          \
  }

S2W_SIMPLE_TRAITS(PunctTag, kPunctNames)
S2W_SIMPLE_TRAITS(CapTag, kCapNames)
S2W_SIMPLE_TRAITS(DisfTag, kDisfNames)

#undef S2W_SIMPLE_TRAITS

std::size_t NumClasses(Task task) {
  switch (task) {
    case Task::kItn: return TagTraits<ItnTag>::kNumClasses;
    case Task::kPunct: return TagTraits<PunctTag>::kNumClasses;
    case Task::kCap: return TagTraits<CapTag>::kNumClasses;
    case Task::kDisf: return TagTraits<DisfTag>::kNumClasses;
  }
  return 0;
}

std::string ClassName(Task task, std::size_t index) {
  switch (task) {
    case Task::kItn:
      return TagTraits<ItnTag>::Name(TagTraits<ItnTag>::FromIndex(index));
    case Task::kPunct:
      return TagTraits<PunctTag>::Name(TagTraits<PunctTag>::FromIndex(index));
    case Task::kCap:
      return TagTraits<CapTag>::Name(TagTraits<CapTag>::FromIndex(index));
    case Task::kDisf:
      return TagTraits<DisfTag>::Name(TagTraits<DisfTag>::FromIndex(index));
  }
  return "O";
}

template <class Tag>
std::vector<Tag> ParseTagLine(std::string_view line) {
  std::vector<Tag> tags;
  auto fields = SplitWhitespace(line);
  tags.reserve(fields.size());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    auto tag = TagTraits<Tag>::Parse(fields[i]);
    if (!tag) {
      throw ParseError("unknown " + std::string(TaskName(TagTraits<Tag>::kTask)) +
                           " tag '" + std::string(fields[i]) + "'",
                       0, i + 1);
    }
    tags.push_back(*tag);
  }
  return tags;
}

template <class Tag>
std::string SerializeTagLine(const std::vector<Tag> &tags) {
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i) out += ' ';
    out += TagTraits<Tag>::Name(tags[i]);
  }
  return out;
}

template std::vector<ItnTag> ParseTagLine<ItnTag>(std::string_view);
template std::vector<PunctTag> ParseTagLine<PunctTag>(std::string_view);
template std::vector<CapTag> ParseTagLine<CapTag>(std::string_view);
template std::vector<DisfTag> ParseTagLine<DisfTag>(std::string_view);
template std::string SerializeTagLine<ItnTag>(const std::vector<ItnTag> &);
template std::string SerializeTagLine<PunctTag>(const std::vector<PunctTag> &);
template std::string SerializeTagLine<CapTag>(const std::vector<CapTag> &);
template std::string SerializeTagLine<DisfTag>(const std::vector<DisfTag> &);

TagSet TagSet::AllO(std::size_t n) {
  TagSet t;
  t.itn.assign(n, ItnTag::O());
  t.punct.assign(n, PunctTag::kO);
  t.cap.assign(n, CapTag::kO);
  t.disf.assign(n, DisfTag::kO);
  return t;
}

std::size_t TagSet::ClassIndex(Task task, std::size_t i) const {
  switch (task) {
    case Task::kItn: return TagTraits<ItnTag>::Index(itn[i]);
    case Task::kPunct: return TagTraits<PunctTag>::Index(punct[i]);
    case Task::kCap: return TagTraits<CapTag>::Index(cap[i]);
    case Task::kDisf: return TagTraits<DisfTag>::Index(disf[i]);
  }
  return 0;
}

void TagSet::SetClassIndex(Task task, std::size_t i, std::size_t index) {
  switch (task) {
    case Task::kItn: itn[i] = TagTraits<ItnTag>::FromIndex(index); break;
    case Task::kPunct: punct[i] = TagTraits<PunctTag>::FromIndex(index); break;
    case Task::kCap: cap[i] = TagTraits<CapTag>::FromIndex(index); break;
    case Task::kDisf: disf[i] = TagTraits<DisfTag>::FromIndex(index); break;
  }
}

std::vector<EntitySpan> ExtractItnSpans(const std::vector<ItnTag> &itn) {
  std::vector<EntitySpan> spans;
  for (std::size_t i = 0; i < itn.size(); ++i) {
    const ItnTag &tag = itn[i];
    if (tag.is_o()) continue;
    if (tag.is_begin()) {
      spans.push_back({tag.type, i, i + 1});
      continue;
    }
    if (spans.empty() || spans.back().end != i) {
      throw WellFormednessError(
          "orphan continuation at " + std::to_string(i), i);
    }
    if (spans.back().type != tag.type) {
      throw WellFormednessError(
          "continuation type mismatch at " + std::to_string(i), i);
    }
    spans.back().end = i + 1;
  }
  return spans;
}

std::optional<Violation> ValidateTagSet(const TagSet &tags) {
  const std::size_t n = tags.itn.size();
  if (tags.punct.size() != n || tags.cap.size() != n || tags.disf.size() != n) {
    std::size_t shortest = std::min({n, tags.punct.size(), tags.cap.size(),
                                     tags.disf.size()});
    return Violation{"length mismatch", shortest};
  }
  for (std::size_t i = 0; i < n; ++i) {
    const ItnTag &tag = tags.itn[i];
    if (!tag.is_cont()) continue;
    if (i == 0 || tags.itn[i - 1].is_o()) {
      return Violation{"orphan continuation at " + std::to_string(i), i};
    }
    if (tags.itn[i - 1].type != tag.type) {
      return Violation{"continuation type mismatch at " + std::to_string(i), i};
    }
  }
  return std::nullopt;
}

void RepairItn(std::vector<ItnTag> &itn) {
  for (std::size_t i = 0; i < itn.size(); ++i) {
    if (!itn[i].is_cont()) continue;
    if (i == 0 || itn[i - 1].is_o() || itn[i - 1].type != itn[i].type) {
      itn[i] = ItnTag::Begin(itn[i].type);
    }
  }
}

}  // namespace s2w
