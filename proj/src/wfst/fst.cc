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

#include "s2w/wfst/fst.h"

#include <deque>
#include <map>
#include <tuple>
#include <unordered_map>

#include "s2w/core/error.h"

namespace s2w::wfst {

std::size_t Fst::NumArcs() const {
  std::size_t n = 0;
  for (const auto &s : states_) n += s.arcs.size();
  return n;
}

bool Fst::Verify() const {
  if (states_.empty()) return start_ == kNoState;
  if (start_ >= states_.size()) return false;
  for (const auto &s : states_) {
    for (const auto &arc : s.arcs) {
      if (arc.nextstate >= states_.size()) return false;
      if (symbols_ && (arc.ilabel >= symbols_->size() ||
                       arc.olabel >= symbols_->size())) {
        return false;
      }
    }
  }
  return true;
}

bool operator==(const Fst &a, const Fst &b) {
  return a.start_ == b.start_ && a.input_tape_ == b.input_tape_ &&
         a.output_tape_ == b.output_tape_ && a.states_ == b.states_;
}

bool SameSymbols(const Fst &a, const Fst &b) {
  if (a.symbols() == b.symbols()) return true;
  if (!a.symbols() || !b.symbols()) return false;
  return *a.symbols() == *b.symbols();
}

Fst Trim(const Fst &fst) {
  const std::size_t n = fst.NumStates();
  Fst out(fst.symbols());
  out.SetTapes(fst.input_tape(), fst.output_tape());
  if (n == 0 || fst.start() == kNoState) return out;

  std::vector<bool> access(n, false), coaccess(n, false);
  std::vector<std::vector<StateId>> reverse(n);
  std::vector<StateId> stack = {fst.start()};
  access[fst.start()] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const Arc &arc : fst.Arcs(s)) {
      reverse[arc.nextstate].push_back(s);
      if (!access[arc.nextstate]) {
        access[arc.nextstate] = true;
        stack.push_back(arc.nextstate);
      }
    }
  }
  for (StateId s = 0; s < n; ++s) {
    if (access[s] && fst.IsFinal(s)) {
      coaccess[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : reverse[s]) {
      if (!coaccess[p]) {
        coaccess[p] = true;
        stack.push_back(p);
      }
    }
  }
  if (!coaccess[fst.start()]) return out;

  std::vector<StateId> remap(n, kNoState);
  for (StateId s = 0; s < n; ++s) {
    if (access[s] && coaccess[s]) remap[s] = out.AddState();
  }
  for (StateId s = 0; s < n; ++s) {
    if (remap[s] == kNoState) continue;
    out.SetFinal(remap[s], fst.Final(s));
    for (const Arc &arc : fst.Arcs(s)) {
      if (remap[arc.nextstate] == kNoState) continue;
      Arc copy = arc;
      copy.nextstate = remap[arc.nextstate];
      out.AddArc(remap[s], copy);
    }
  }
  out.SetStart(remap[fst.start()]);
  return out;
}

Fst Compose(const Fst &a, const Fst &b) {
  if (!SameSymbols(a, b)) {
    throw InvalidArgument("compose: symbol tables differ");
  }
  Fst out(a.symbols());
  out.SetTapes(a.input_tape(), b.output_tape());
  if (a.start() == kNoState || b.start() == kNoState) return out;

  // (state of a, state of b, filter state)
  using Triple = std::tuple<StateId, StateId, int>;
  std::map<Triple, StateId> ids;
  std::deque<Triple> queue;
  auto id_of = [&](const Triple &t) {
    auto it = ids.find(t);
    if (it != ids.end()) return it->second;
    StateId s = out.AddState();
    ids.emplace(t, s);
    queue.push_back(t);
    return s;
  };
  out.SetStart(id_of({a.start(), b.start(), 0}));

  while (!queue.empty()) {
    auto [sa, sb, filter] = queue.front();
    queue.pop_front();
    const StateId s = ids.at({sa, sb, filter});
    out.SetFinal(s, Times(a.Final(sa), b.Final(sb)));

    for (const Arc &x : a.Arcs(sa)) {
      if (x.olabel == kEpsilon) {
        if (filter != 0) continue;
        StateId t = id_of({x.nextstate, sb, 0});
        out.AddArc(s, {x.ilabel, kEpsilon, x.weight, t});
        continue;
      }
      for (const Arc &y : b.Arcs(sb)) {
        if (y.ilabel != x.olabel) continue;
        StateId t = id_of({x.nextstate, y.nextstate, 0});
        out.AddArc(s, {x.ilabel, y.olabel, Times(x.weight, y.weight), t});
      }
    }
    for (const Arc &y : b.Arcs(sb)) {
      if (y.ilabel != kEpsilon) continue;
      StateId t = id_of({sa, y.nextstate, 1});
      out.AddArc(s, {kEpsilon, y.olabel, y.weight, t});
    }
  }
  return Trim(out);
}

Fst Invert(const Fst &fst) {
  Fst out = fst;
  for (StateId s = 0; s < out.NumStates(); ++s) {
    for (Arc &arc : out.MutableArcs(s)) std::swap(arc.ilabel, arc.olabel);
  }
  out.SetTapes(fst.output_tape(), fst.input_tape());
  return out;
}

bool IsAcyclic(const Fst &fst) {
  const std::size_t n = fst.NumStates();
  if (n == 0 || fst.start() == kNoState) return true;
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<char> color(n, 0);
  std::vector<std::pair<StateId, std::size_t>> stack;
  stack.emplace_back(fst.start(), 0);
  color[fst.start()] = 1;
  while (!stack.empty()) {
    auto &[s, next_arc] = stack.back();
    const auto &arcs = fst.Arcs(s);
    if (next_arc == arcs.size()) {
      color[s] = 2;
      stack.pop_back();
      continue;
    }
    StateId t = arcs[next_arc++].nextstate;
    if (color[t] == 1) return false;
    if (color[t] == 0) {
      color[t] = 1;
      stack.emplace_back(t, 0);
    }
  }
  return true;
}

}  // namespace s2w::wfst
