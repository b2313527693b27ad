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

#include "s2w/datapipe/synth.h"

#include <cctype>

#include "s2w/core/random.h"

namespace s2w::datapipe {

namespace {

const char *const kTemplates[] = {
    "the ticket costs {money} and the train leaves at {time}.",
    "please call me back at {phone}.",
    "my flight is {code} and it lands at {time}.",
    "we finished in {ordinal} place with {number} points.",
    "{name} paid {money} for the {noun}.",
    "can you meet {name} at {time} on {day}?",
    "what is the code for {code}?",
    "yes, the meeting starts at {time}.",
    "well, it was the {ordinal} time this year.",
    "I think {name} owes me {money}.",
    "the {org} office is on the {ordinal} floor.",
    "{org} reported {number} new cases, but {name} was not surprised.",
    "send it to {name} before {time}, and call {phone} if needed.",
    "the room number is {code}.",
    "our team sold {number} units in {place}.",
    "do you have {money} for the {noun}?",
    "is the {ordinal} meeting at {time}?",
    "when does the bus to {place} leave?",
    "we need {number} chairs for the party.",
    "the price went up to {money} last week.",
    "okay, I will be there by {time}.",
    "the serial number {code} is not valid.",
    "she lives at {number} {street} street in {place}.",
    "the temperature was {decimal} degrees on {day}.",
    "I called {phone} but nobody answered.",
    "{name} came in {ordinal} and won {money}.",
    "so, where is the {noun}?",
    "the {org} deal was worth {money}.",
    "my appointment with {name} is at {time} on {day}.",
    "the package weighs {decimal} pounds.",
    "{name} and {name} moved to {place} last year.",
    "the {noun} is in the car.",
    "how much is the {noun}?",
    "you can reach {org} support at {phone}.",
    "the order {code} ships on {day}, and it costs {money}.",
    "it is the {ordinal} anniversary of the {org} project.",
    "there were {number} people at the game in {place}.",
    "no, the store closes at {time} today.",
    "did {name} really spend {money} on a {noun}?",
    "the gate changed to {code}, so we walked for {number} minutes.",
};

const char *const kNames[] = {"john", "mary", "sarah", "david", "alex", "emma",
                              "michael", "lisa", "james", "anna"};
const char *const kPlaces[] = {"boston", "chicago", "denver", "paris", "london",
                               "texas", "seattle", "miami"};
const char *const kOrgs[] = {"NASA", "IBM", "FBI", "NPR", "UN", "BBC"};
const char *const kDays[] = {"monday", "tuesday", "wednesday", "thursday",
                             "friday", "saturday", "sunday"};
const char *const kNouns[] = {"car", "house", "tickets", "dinner", "report",
                              "laptop", "book", "bike", "phone", "camera"};
const char *const kStreets[] = {"main", "oak", "pine", "maple", "elm"};

template <std::size_t N>
const char *Pick(Rng &rng, const char *const (&list)[N]) {
  return list[UniformIndex(rng, N)];
}

std::string Grouped(std::uint64_t v) {
  std::string s = std::to_string(v);
  for (int i = static_cast<int>(s.size()) - 3; i > 0; i -= 3) {
    s.insert(static_cast<std::size_t>(i), ",");
  }
  return s;
}

std::uint64_t Amount(Rng &rng) {
  switch (UniformIndex(rng, 4)) {
    case 0: return 2 + UniformIndex(rng, 19);
    case 1: return 2 + UniformIndex(rng, 98);
    case 2: return 100 + UniformIndex(rng, 900);
    default: return 1000 + UniformIndex(rng, 999000);
  }
}

std::string TwoDigits(std::uint64_t v) {
  return (v < 10 ? "0" : "") + std::to_string(v);
}

std::string Money(Rng &rng) {
  const std::uint64_t kind = UniformIndex(rng, 5);
  if (kind == 0) return "$0." + TwoDigits(1 + UniformIndex(rng, 99));
  std::string d = "$" + Grouped(kind == 1 ? 1 : Amount(rng));
  if (UniformIndex(rng, 3) == 0) d += "." + TwoDigits(1 + UniformIndex(rng, 99));
  return d;
}

std::string Time(Rng &rng) {
  std::string t = std::to_string(1 + UniformIndex(rng, 12)) + ":";
  const std::uint64_t m = UniformIndex(rng, 4) == 0 ? 0 : 1 + UniformIndex(rng, 59);
  t += TwoDigits(m);
  if (m == 0 || UniformIndex(rng, 3) > 0) t += UniformIndex(rng, 2) ? " PM" : " AM";
  return t;
}

std::string Ordinal(Rng &rng) {
  const std::uint64_t v = UniformIndex(rng, 3) == 0 ? 1 + UniformIndex(rng, 10)
                                                    : 1 + UniformIndex(rng, 300);
  std::string suffix = "th";
  if (v % 100 < 11 || v % 100 > 13) {
    if (v % 10 == 1) suffix = "st";
    if (v % 10 == 2) suffix = "nd";
    if (v % 10 == 3) suffix = "rd";
  }
  return Grouped(v) + suffix;
}

std::string Phone(Rng &rng) {
  std::string p;
  for (int k = 0; k < 10; ++k) {
    if (k == 3 || k == 6) p += '-';
    p += static_cast<char>('0' + UniformIndex(rng, 10));
  }
  return p;
}

std::string Code(Rng &rng) {
  std::string c;
  for (std::uint64_t k = 1 + UniformIndex(rng, 3); k > 0; --k) {
    c += static_cast<char>('A' + UniformIndex(rng, 26));
  }
  for (std::uint64_t k = 1 + UniformIndex(rng, 3); k > 0; --k) {
    c += static_cast<char>('0' + UniformIndex(rng, 10));
  }
  if (UniformIndex(rng, 3) == 0) c += static_cast<char>('A' + UniformIndex(rng, 26));
  return c;
}

std::string Decimal(Rng &rng) {
  return std::to_string(UniformIndex(rng, 100)) + "." +
         std::to_string(1 + UniformIndex(rng, 9));
}

std::string Capitalized(std::string w) {
  if (!w.empty()) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
  return w;
}

std::string Fill(const std::string &slot, Rng &rng) {
  if (slot == "money") return Money(rng);
  if (slot == "time") return Time(rng);
  if (slot == "ordinal") return Ordinal(rng);
  if (slot == "number") return Grouped(Amount(rng));
  if (slot == "phone") return Phone(rng);
  if (slot == "code") return Code(rng);
  if (slot == "decimal") return Decimal(rng);
  if (slot == "name") return Capitalized(Pick(rng, kNames));
  if (slot == "place") return Capitalized(Pick(rng, kPlaces));
  if (slot == "org") return Pick(rng, kOrgs);
  if (slot == "day") return Capitalized(Pick(rng, kDays));
  if (slot == "noun") return Pick(rng, kNouns);
  if (slot == "street") return Capitalized(Pick(rng, kStreets));
  return slot;
}

}  // namespace

std::vector<std::string> SynthesizeCorpus(std::size_t sentences, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::string> out;
  out.reserve(sentences);
  constexpr std::size_t kNumTemplates = sizeof(kTemplates) / sizeof(kTemplates[0]);
  for (std::size_t i = 0; i < sentences; ++i) {
    const std::string tmpl = kTemplates[UniformIndex(rng, kNumTemplates)];
    std::string s;
    for (std::size_t k = 0; k < tmpl.size(); ++k) {
      if (tmpl[k] != '{') {
        s += tmpl[k];
        continue;
      }
      const std::size_t close = tmpl.find('}', k);
      s += Fill(tmpl.substr(k + 1, close - k - 1), rng);
      k = close;
    }
    out.push_back(Capitalized(std::move(s)));
  }
  return out;
}

}  // namespace s2w::datapipe
