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

#ifndef S2W_CORE_TAGS_H_
#define S2W_CORE_TAGS_H_

// The four tag taxonomies shared by every stage of the pipeline: ITN entity
// spans, appended punctuation, capitalization and disfluency. Each taxonomy
// puts its no-op class "O" at class index 0.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace s2w {

enum class EntityType : std::uint8_t {
  kAlphanumeric = 0,
  kNumeric,
  kOrdinal,
  kMoney,
  kTime,
};

inline constexpr std::size_t kNumEntityTypes = 5;
inline constexpr std::array<EntityType, kNumEntityTypes> kAllEntityTypes = {
    EntityType::kAlphanumeric, EntityType::kNumeric, EntityType::kOrdinal,
    EntityType::kMoney, EntityType::kTime};

// Lowercase serialized name, e.g. "time".
std::string_view EntityTypeName(EntityType type);
std::optional<EntityType> ParseEntityType(std::string_view name);

enum class Task : std::uint8_t { kItn = 0, kPunct, kCap, kDisf };

inline constexpr std::size_t kNumTasks = 4;
inline constexpr std::array<Task, kNumTasks> kAllTasks = {
    Task::kItn, Task::kPunct, Task::kCap, Task::kDisf};

std::string_view TaskName(Task task);  // "itn", "punct", "cap", "disf"
std::optional<Task> ParseTaskName(std::string_view name);

// ITN tag: O, or the first word of an entity span (Begin), or a later word of
// the same span (Cont, serialized with a leading underscore).
struct ItnTag {
  enum class Kind : std::uint8_t { kO = 0, kBegin, kCont };

  Kind kind = Kind::kO;
  EntityType type = EntityType::kAlphanumeric;  // meaningless when kind == kO

  static constexpr ItnTag O() { return {}; }
  static constexpr ItnTag Begin(EntityType t) { return {Kind::kBegin, t}; }
  static constexpr ItnTag Cont(EntityType t) { return {Kind::kCont, t}; }

  bool is_o() const { return kind == Kind::kO; }
  bool is_begin() const { return kind == Kind::kBegin; }
  bool is_cont() const { return kind == Kind::kCont; }

  friend bool operator==(const ItnTag &a, const ItnTag &b) {
    return a.kind == b.kind && (a.kind == Kind::kO || a.type == b.type);
  }
};

enum class PunctTag : std::uint8_t { kO = 0, kComma, kPeriod, kQuestionMark };
enum class CapTag : std::uint8_t { kO = 0, kC, kU };
enum class DisfTag : std::uint8_t { kO = 0, kCRT, kRRT, kC, kR, kF, kD };

// Character appended by a punctuation tag; '\0' for O.
char PunctChar(PunctTag tag);

// Per-taxonomy class indexing and spelling. ITN indices: O = 0, Begin(t) =
// 1 + t, Cont(t) = 6 + t.
template <class Tag>
struct TagTraits;

template <>
struct TagTraits<ItnTag> {
  static constexpr Task kTask = Task::kItn;
  static constexpr std::size_t kNumClasses = 11;
  static std::size_t Index(ItnTag tag);
  static ItnTag FromIndex(std::size_t index);
  static std::string Name(ItnTag tag);
  static std::optional<ItnTag> Parse(std::string_view text);
};

template <>
struct TagTraits<PunctTag> {
  static constexpr Task kTask = Task::kPunct;
  static constexpr std::size_t kNumClasses = 4;
  static std::size_t Index(PunctTag tag) { return static_cast<std::size_t>(tag); }
  static PunctTag FromIndex(std::size_t index);
  static std::string Name(PunctTag tag);
  static std::optional<PunctTag> Parse(std::string_view text);
};

template <>
struct TagTraits<CapTag> {
  static constexpr Task kTask = Task::kCap;
  static constexpr std::size_t kNumClasses = 3;
  static std::size_t Index(CapTag tag) { return static_cast<std::size_t>(tag); }
  static CapTag FromIndex(std::size_t index);
  static std::string Name(CapTag tag);
  static std::optional<CapTag> Parse(std::string_view text);
};

template <>
struct TagTraits<DisfTag> {
  static constexpr Task kTask = Task::kDisf;
  static constexpr std::size_t kNumClasses = 7;
  static std::size_t Index(DisfTag tag) { return static_cast<std::size_t>(tag); }
  static DisfTag FromIndex(std::size_t index);
  static std::string Name(DisfTag tag);
  static std::optional<DisfTag> Parse(std::string_view text);
};

std::size_t NumClasses(Task task);
// Serialized name of class `index` of `task`.
std::string ClassName(Task task, std::size_t index);

// Whitespace-separated serialization of one task's tags. Parsing throws
// ParseError naming the offending token and its 1-based column (token index).
template <class Tag>
std::vector<Tag> ParseTagLine(std::string_view line);

template <class Tag>
std::string SerializeTagLine(const std::vector<Tag> &tags);

// Four parallel per-word (or per-token) tag sequences.
struct TagSet {
  std::vector<ItnTag> itn;
  std::vector<PunctTag> punct;
  std::vector<CapTag> cap;
  std::vector<DisfTag> disf;

  // All-O tags for `n` positions.
  static TagSet AllO(std::size_t n);

  std::size_t size() const { return itn.size(); }

  // Class index of position i under `task`.
  std::size_t ClassIndex(Task task, std::size_t i) const;
  void SetClassIndex(Task task, std::size_t i, std::size_t index);

  friend bool operator==(const TagSet &, const TagSet &) = default;
};

// Maximal run of positions forming one entity: [start, end).
struct EntitySpan {
  EntityType type = EntityType::kAlphanumeric;
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  friend bool operator==(const EntitySpan &, const EntitySpan &) = default;
};

// Spans in order. A Begin always opens a new span, so two adjacent entities
// of the same type stay separate. Throws WellFormednessError on an orphan
// continuation or a continuation whose type differs from its span.
std::vector<EntitySpan> ExtractItnSpans(const std::vector<ItnTag> &itn);

struct Violation {
  std::string message;
  std::size_t position = 0;
};

// First violation of the TagSet invariants, or nullopt when valid.
std::optional<Violation> ValidateTagSet(const TagSet &tags);

// Rewrites an ill-formed ITN sequence into a well-formed one: an orphan or
// type-mismatched continuation becomes a Begin of its own type.
void RepairItn(std::vector<ItnTag> &itn);

}  // namespace s2w

#endif  // S2W_CORE_TAGS_H_
