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

#include "s2w/wfst/shortest_path.h"

#include <algorithm>
#include <unordered_map>

#include "s2w/core/error.h"

namespace s2w::wfst {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Word index of every symbol on a tape; kNone for separators.
std::vector<std::size_t> WordIndices(const SymbolTable &symbols, TapeKind kind,
                                     const std::vector<Label> &labels) {
  std::vector<std::size_t> index(labels.size(), kNone);
  std::size_t words = 0;
  bool in_word = false;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (kind == TapeKind::kWord) {
      index[i] = words++;
      continue;
    }
    if (symbols.Symbol(labels[i]) == kSpaceSymbol) {
      in_word = false;
      continue;
    }
    if (!in_word) {
      ++words;
      in_word = true;
    }
    index[i] = words - 1;
  }
  return index;
}

struct Edge {
  std::size_t target;
  Label olabel;
  TropicalWeight weight;
  bool consumes;
};

struct Node {
  std::size_t pos;
  StateId state;
  std::vector<Edge> edges;
  TropicalWeight final = TropicalWeight::Zero();
  TropicalWeight distance = TropicalWeight::Zero();  // best cost to accept
};

struct Step {
  std::size_t node;
  Label olabel;
  bool consumes;
};

std::vector<AlignmentPair> Align(
    const std::vector<std::size_t> &in_word_of_step,
    const std::vector<std::size_t> &out_word_of_step, std::size_t n_in,
    std::size_t n_out) {
  struct Event {
    std::size_t in, out;
  };
  std::vector<Event> events;
  for (std::size_t i = 0; i < in_word_of_step.size(); ++i) {
    if (in_word_of_step[i] == kNone && out_word_of_step[i] == kNone) continue;
    events.push_back({in_word_of_step[i], out_word_of_step[i]});
  }
  if (n_in == 0 || n_out == 0 || events.empty()) {
    return {{{0, n_in}, {0, n_out}}};
  }

  // Split points between events where neither tape has a word straddling.
  std::vector<std::size_t> last_in(events.size()), last_out(events.size());
  std::size_t li = kNone, lo = kNone;
  for (std::size_t j = 0; j < events.size(); ++j) {
    if (events[j].in != kNone) li = events[j].in;
    if (events[j].out != kNone) lo = events[j].out;
    last_in[j] = li;
    last_out[j] = lo;
  }
  std::vector<std::size_t> first_in(events.size()), first_out(events.size());
  std::size_t fi = kNone, fo = kNone;
  for (std::size_t j = events.size(); j-- > 0;) {
    if (events[j].in != kNone) fi = events[j].in;
    if (events[j].out != kNone) fo = events[j].out;
    first_in[j] = fi;
    first_out[j] = fo;
  }

  struct Group {
    std::size_t max_in = kNone, max_out = kNone;
  };
  std::vector<Group> groups(1);
  for (std::size_t j = 0; j < events.size(); ++j) {
    if (j > 0) {
      bool in_ok = last_in[j - 1] == kNone || first_in[j] == kNone ||
                   last_in[j - 1] != first_in[j];
      bool out_ok = last_out[j - 1] == kNone || first_out[j] == kNone ||
                    last_out[j - 1] != first_out[j];
      if (in_ok && out_ok) groups.emplace_back();
    }
    Group &g = groups.back();
    if (events[j].in != kNone) g.max_in = events[j].in;
    if (events[j].out != kNone) g.max_out = events[j].out;
  }

  // Fold groups that miss a side into a neighbour.
  std::vector<Group> merged;
  for (const Group &g : groups) {
    bool complete = g.max_in != kNone && g.max_out != kNone;
    if (!merged.empty() &&
        (!complete || merged.back().max_in == kNone ||
         merged.back().max_out == kNone)) {
      Group &m = merged.back();
      if (g.max_in != kNone) m.max_in = g.max_in;
      if (g.max_out != kNone) m.max_out = g.max_out;
    } else {
      merged.push_back(g);
    }
  }

  std::vector<AlignmentPair> out;
  std::size_t in_begin = 0, out_begin = 0;
  for (std::size_t k = 0; k < merged.size(); ++k) {
    bool last = k + 1 == merged.size();
    std::size_t in_end = last ? n_in : merged[k].max_in + 1;
    std::size_t out_end = last ? n_out : merged[k].max_out + 1;
    out.push_back({{in_begin, in_end}, {out_begin, out_end}});
    in_begin = in_end;
    out_begin = out_end;
  }
  return out;
}

}  // namespace

std::vector<std::string> Utf8Chars(std::string_view text) {
  std::vector<std::string> chars;
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (c >= 0xF0) {
      len = 4;
    } else if (c >= 0xE0) {
      len = 3;
    } else if (c >= 0xC0) {
      len = 2;
    }
    len = std::min(len, text.size() - i);
    chars.emplace_back(text.substr(i, len));
    i += len;
  }
  return chars;
}

std::optional<std::vector<Label>> EncodeTape(
    const SymbolTable &symbols, TapeKind kind,
    const std::vector<std::string> &words) {
  std::vector<Label> labels;
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (kind == TapeKind::kWord) {
      auto id = symbols.Find(words[w]);
      if (!id) return std::nullopt;
      labels.push_back(*id);
      continue;
    }
    if (w > 0) {
      auto space = symbols.Find(kSpaceSymbol);
      if (!space) return std::nullopt;
      labels.push_back(*space);
    }
    for (const std::string &ch : Utf8Chars(words[w])) {
      auto id = symbols.Find(ch);
      if (!id) return std::nullopt;
      labels.push_back(*id);
    }
  }
  return labels;
}

std::vector<std::string> DecodeTape(const SymbolTable &symbols, TapeKind kind,
                                    const std::vector<Label> &labels) {
  std::vector<std::string> words;
  if (kind == TapeKind::kWord) {
    for (Label l : labels) {
      if (l != kEpsilon) words.push_back(symbols.Symbol(l));
    }
    return words;
  }
  std::string current;
  for (Label l : labels) {
    if (l == kEpsilon) continue;
    const std::string &sym = symbols.Symbol(l);
    if (sym == kSpaceSymbol) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current += sym;
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::optional<TranslationResult> ShortestPath(
    const Fst &fst, const std::vector<std::string> &input) {
  if (fst.start() == kNoState || fst.NumStates() == 0) return std::nullopt;
  const SymbolTable &symbols = *fst.symbols();
  auto encoded = EncodeTape(symbols, fst.input_tape(), input);
  if (!encoded) return std::nullopt;
  const std::vector<Label> &in = *encoded;
  const std::size_t n = in.size();

  // Explore the product of the input string and the FST depth-first,
  // recording a post-order (children before parents).
  std::vector<Node> nodes;
  std::unordered_map<std::uint64_t, std::size_t> index;
  auto key = [&](std::size_t pos, StateId s) {
    return static_cast<std::uint64_t>(pos) * fst.NumStates() + s;
  };
  auto node_of = [&](std::size_t pos, StateId s, bool &fresh) {
    auto [it, inserted] = index.emplace(key(pos, s), nodes.size());
    fresh = inserted;
    if (inserted) nodes.push_back({pos, s, {}});
    return it->second;
  };

  std::vector<std::size_t> post_order;
  std::vector<char> color;  // 1 = on stack, 2 = done
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, next arc
  bool fresh = false;
  std::size_t root = node_of(0, fst.start(), fresh);
  color.push_back(1);
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    const std::size_t u = stack.back().first;
    const std::size_t next_arc = stack.back().second;
    const auto &arcs = fst.Arcs(nodes[u].state);
    if (next_arc == arcs.size()) {
      if (nodes[u].pos == n) nodes[u].final = fst.Final(nodes[u].state);
      color[u] = 2;
      post_order.push_back(u);
      stack.pop_back();
      continue;
    }
    ++stack.back().second;
    const Arc &arc = arcs[next_arc];
    std::size_t pos = nodes[u].pos;
    bool consumes = arc.ilabel != kEpsilon;
    if (consumes) {
      if (pos == n || in[pos] != arc.ilabel) continue;
      ++pos;
    }
    std::size_t v = node_of(pos, arc.nextstate, fresh);
    if (fresh) color.push_back(0);
    nodes[u].edges.push_back({v, arc.olabel, arc.weight, consumes});
    if (color[v] == 1) {
      throw InvalidArgument("shortest path: cycle reachable from input");
    }
    if (color[v] == 0) {
      color[v] = 1;
      stack.emplace_back(v, 0);
    }
  }

  for (std::size_t u : post_order) {
    Node &node = nodes[u];
    TropicalWeight best = node.final;
    for (const Edge &e : node.edges) {
      best = Plus(best, Times(e.weight, nodes[e.target].distance));
    }
    node.distance = best;
  }
  if (nodes[root].distance.is_zero()) return std::nullopt;

  auto optimal = [&](const Node &from, const Edge &e) {
    return ApproxEqual(Times(e.weight, nodes[e.target].distance),
                       from.distance);
  };

  // Walk the optimal sub-DAG one output symbol at a time, keeping the set of
  // nodes that can produce the smallest output prefix so far. Each visit is a
  // trace entry so the chosen path can be read back exactly.
  struct Trace {
    std::size_t node;
    std::size_t prev;
    Step step;
  };
  std::vector<Trace> trace = {{root, kNone, {root, kEpsilon, false}}};
  std::vector<std::size_t> frontier = {0};
  std::size_t accept = kNone;
  std::vector<std::size_t> seen_round(nodes.size(), kNone);
  for (std::size_t round = 0;; ++round) {
    std::vector<std::size_t> closure = frontier;
    for (std::size_t t : closure) seen_round[trace[t].node] = round;
    for (std::size_t i = 0; i < closure.size(); ++i) {
      const std::size_t t = closure[i];
      const Node &node = nodes[trace[t].node];
      for (const Edge &e : node.edges) {
        if (e.olabel != kEpsilon || !optimal(node, e) ||
            seen_round[e.target] == round) {
          continue;
        }
        seen_round[e.target] = round;
        trace.push_back({e.target, t, {e.target, e.olabel, e.consumes}});
        closure.push_back(trace.size() - 1);
      }
    }
    for (std::size_t t : closure) {
      const Node &node = nodes[trace[t].node];
      if (!node.final.is_zero() && ApproxEqual(node.final, node.distance)) {
        accept = t;
        break;
      }
    }
    if (accept != kNone) break;

    Label best = kEpsilon;
    for (std::size_t t : closure) {
      const Node &node = nodes[trace[t].node];
      for (const Edge &e : node.edges) {
        if (e.olabel == kEpsilon || !optimal(node, e)) continue;
        if (best == kEpsilon || e.olabel < best) best = e.olabel;
      }
    }
    if (best == kEpsilon) return std::nullopt;  // not reachable: distance is finite
    std::vector<std::size_t> next;
    for (std::size_t t : closure) {
      const Node &node = nodes[trace[t].node];
      for (const Edge &e : node.edges) {
        if (e.olabel != best || !optimal(node, e) ||
            seen_round[e.target] == round + 1) {
          continue;
        }
        seen_round[e.target] = round + 1;
        trace.push_back({e.target, t, {e.target, e.olabel, e.consumes}});
        next.push_back(trace.size() - 1);
      }
    }
    frontier = std::move(next);
  }

  std::vector<Step> path;
  for (std::size_t t = accept; t != 0; t = trace[t].prev) {
    path.push_back(trace[t].step);
  }
  std::reverse(path.begin(), path.end());

  TranslationResult result;
  result.weight = nodes[root].distance;
  std::vector<std::size_t> consumed_index;  // input symbol index per step
  std::vector<Label> out_labels_per_step;
  std::size_t pos = 0;
  for (const Step &step : path) {
    consumed_index.push_back(step.consumes ? pos++ : kNone);
    out_labels_per_step.push_back(step.olabel);
    if (step.olabel != kEpsilon) result.output_labels.push_back(step.olabel);
  }
  result.output = DecodeTape(symbols, fst.output_tape(), result.output_labels);

  const auto in_words = WordIndices(symbols, fst.input_tape(), in);
  const auto out_words =
      WordIndices(symbols, fst.output_tape(), result.output_labels);
  std::vector<std::size_t> in_word_of_step, out_word_of_step;
  std::size_t out_pos = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    in_word_of_step.push_back(
        consumed_index[i] == kNone ? kNone : in_words[consumed_index[i]]);
    out_word_of_step.push_back(out_labels_per_step[i] == kEpsilon
                                   ? kNone
                                   : out_words[out_pos++]);
  }
  std::size_t n_in_words =
      fst.input_tape() == TapeKind::kWord ? in.size() : input.size();
  result.alignment = Align(in_word_of_step, out_word_of_step, n_in_words,
                           result.output.size());
  return result;
}

}  // namespace s2w::wfst
