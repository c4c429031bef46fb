// Copyright 2026 The delcon authors
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

#include "delcon/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace delcon {

std::string to_string(AcceptanceKind k) {
  switch (k) {
    case AcceptanceKind::Safety: return "safety";
    case AcceptanceKind::Reachability: return "reach";
    case AcceptanceKind::Parity: return "parity";
  }
  return "?";
}

int OmegaAutomaton::add_state(const std::string& name) {
  state_names.push_back(name);
  next.emplace_back(letters.size(), 0);
  marked.push_back(0);
  color.push_back(0);
  return num_states() - 1;
}

std::string pair_letter(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::pair<std::string, std::string> split_pair_letter(const std::string& l) {
  if (l.size() < 5 || l.front() != '(' || l.back() != ')')
    throw usage_error("not a pair letter: " + l);
  auto comma = l.find(',');
  if (comma == std::string::npos)
    throw usage_error("not a pair letter: " + l);
  return {l.substr(1, comma - 1), l.substr(comma + 1, l.size() - comma - 2)};
}

std::vector<std::string> pair_alphabet(const std::vector<std::string>& in,
                                       const std::vector<std::string>& out) {
  std::vector<std::string> r;
  r.reserve(in.size() * out.size());
  for (const auto& a : in)
    for (const auto& b : out) r.push_back(pair_letter(a, b));
  return r;
}

std::vector<std::string> validate(const OmegaAutomaton& aut) {
  std::vector<std::string> errs;
  int n = aut.num_states();
  int l = aut.num_letters();
  if (n == 0) errs.push_back("automaton has no states");
  if (l == 0) errs.push_back("automaton has no letters");
  if (aut.initial < 0 || aut.initial >= n)
    errs.push_back("initial state out of range");
  std::set<std::string> seen;
  for (const auto& s : aut.state_names)
    if (!seen.insert(s).second) errs.push_back("duplicate state name: " + s);
  seen.clear();
  for (const auto& s : aut.letters)
    if (!seen.insert(s).second) errs.push_back("duplicate letter: " + s);
  if (static_cast<int>(aut.next.size()) != n) {
    errs.push_back("transition table has wrong row count");
    return errs;
  }
  for (int q = 0; q < n; ++q) {
    if (static_cast<int>(aut.next[q].size()) != l) {
      errs.push_back("state " + aut.state_names[q] + " has a partial transition row");
      continue;
    }
    for (int a = 0; a < l; ++a)
      if (aut.next[q][a] < 0 || aut.next[q][a] >= n)
        errs.push_back("transition out of range at " + aut.state_names[q] + " on " +
                       aut.letters[a]);
  }
  if (aut.kind == AcceptanceKind::Parity) {
    if (static_cast<int>(aut.color.size()) != n)
      errs.push_back("color table has wrong size");
    for (int c : aut.color)
      if (c < 0) errs.push_back("negative color");
  } else if (static_cast<int>(aut.marked.size()) != n) {
    errs.push_back("marked table has wrong size");
  }
  return errs;
}

OmegaAutomaton saturated(const OmegaAutomaton& aut) {
  if (aut.kind == AcceptanceKind::Parity) return aut;
  OmegaAutomaton r = aut;
  for (int q = 0; q < r.num_states(); ++q)
    if (r.marked[q])
      for (int a = 0; a < r.num_letters(); ++a) r.next[q][a] = q;
  return r;
}

OmegaAutomaton complement_of(const OmegaAutomaton& aut) {
  OmegaAutomaton r = aut;
  switch (aut.kind) {
    case AcceptanceKind::Safety:
      r.kind = AcceptanceKind::Reachability;
      break;
    case AcceptanceKind::Reachability:
      r.kind = AcceptanceKind::Safety;
      break;
    case AcceptanceKind::Parity:
      for (int& c : r.color) c += 1;
      break;
  }
  return r;
}

OmegaAutomaton normalize_colors(const OmegaAutomaton& aut) {
  if (aut.kind != AcceptanceKind::Parity) return aut;
  OmegaAutomaton r = aut;
  std::set<int> used(aut.color.begin(), aut.color.end());
  std::map<int, int> remap;
  int base = (*used.begin()) % 2;
  int nextc = base;
  for (int c : used) {
    if (c % 2 != nextc % 2) ++nextc;
    remap[c] = nextc;
    ++nextc;
  }
  for (int& c : r.color) c = remap[c];
  return r;
}

OmegaAutomaton rename_letters(
    const OmegaAutomaton& aut,
    const std::vector<std::pair<std::string, std::string>>& table) {
  OmegaAutomaton r = aut;
  for (auto& l : r.letters)
    for (const auto& [from, to] : table)
      if (l == from) {
        l = to;
        break;
      }
  return r;
}

namespace {

// Highest color on the cycle part and whether marked/unsafe states are
// visited, shared by both membership drivers.
bool accepts(const OmegaAutomaton& aut, std::span<const int> u,
             std::span<const int> v) {
  if (v.empty()) throw usage_error("lasso cycle must be nonempty");
  int q = aut.initial;
  bool hit = aut.kind != AcceptanceKind::Parity && aut.marked[q];
  for (int a : u) {
    q = aut.next[q][a];
    if (aut.kind != AcceptanceKind::Parity && aut.marked[q]) hit = true;
  }
  // Pump the cycle until the state repeats at the cycle boundary.
  std::map<int, int> seen;
  std::vector<int> boundary;
  while (!seen.count(q)) {
    seen[q] = static_cast<int>(boundary.size());
    boundary.push_back(q);
    for (int a : v) {
      q = aut.next[q][a];
      if (aut.kind != AcceptanceKind::Parity && aut.marked[q]) hit = true;
    }
  }
  switch (aut.kind) {
    case AcceptanceKind::Safety: return !hit;
    case AcceptanceKind::Reachability: return hit;
    case AcceptanceKind::Parity: break;
  }
  int maxc = -1;
  for (int i = seen[q]; i < static_cast<int>(boundary.size()); ++i) {
    int p = boundary[i];
    maxc = std::max(maxc, aut.color[p]);
    for (int a : v) {
      p = aut.next[p][a];
      maxc = std::max(maxc, aut.color[p]);
    }
  }
  return maxc % 2 == 0;
}

}  // namespace

bool run_automaton_idx(const OmegaAutomaton& aut, std::span<const int> u,
                       std::span<const int> v) {
  return accepts(aut, u, v);
}

bool run_automaton(const OmegaAutomaton& aut, const std::vector<std::string>& u,
                   const std::vector<std::string>& v) {
  auto to_idx = [&](const std::vector<std::string>& w) {
    std::vector<int> r;
    r.reserve(w.size());
    for (const auto& l : w) {
      int i = aut.letter_index(l);
      if (i < 0) throw usage_error("letter not in alphabet: " + l);
      r.push_back(i);
    }
    return r;
  };
  auto ui = to_idx(u);
  auto vi = to_idx(v);
  return accepts(aut, ui, vi);
}

namespace {

// Parity view with marked states turned into absorbing colored sinks, so
// the product analysis below only ever deals with colors.
OmegaAutomaton as_parity(const OmegaAutomaton& aut) {
  OmegaAutomaton r = saturated(aut);
  switch (aut.kind) {
    case AcceptanceKind::Safety:
      for (int q = 0; q < r.num_states(); ++q) r.color[q] = r.marked[q] ? 1 : 0;
      break;
    case AcceptanceKind::Reachability:
      for (int q = 0; q < r.num_states(); ++q) r.color[q] = r.marked[q] ? 2 : 1;
      break;
    case AcceptanceKind::Parity:
      break;
  }
  r.kind = AcceptanceKind::Parity;
  return r;
}

struct ProductGraph {
  int n = 0, na = 0, nb = 0, nl = 0;
  std::vector<int> ca, cb;  // per product vertex
  const OmegaAutomaton* a = nullptr;
  const OmegaAutomaton* b = nullptr;
  int pack(int qa, int qb) const { return qa * nb + qb; }
  int step(int v, int l) const {
    return pack(a->next[v / nb][l], b->next[v % nb][l]);
  }
};

// Shortest letter path between vertex sets inside an allowed mask.
std::optional<std::pair<std::vector<int>, int>> bfs_path(
    const ProductGraph& g, const std::vector<int>& from,
    const std::vector<char>& allowed, const std::vector<char>& goal,
    bool require_step) {
  std::vector<int> pre(g.n, -2), prel(g.n, -1);
  std::deque<int> q;
  for (int v : from) {
    if (!require_step && goal[v]) return std::make_pair(std::vector<int>{}, v);
    pre[v] = -1;
    q.push_back(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int l = 0; l < g.nl; ++l) {
      int w = g.step(v, l);
      if (!allowed[w]) continue;
      if (goal[w]) {
        std::vector<int> letters;
        for (int x = v; pre[x] != -1; x = pre[x]) letters.push_back(prel[x]);
        std::reverse(letters.begin(), letters.end());
        letters.push_back(l);
        return std::make_pair(letters, w);
      }
      if (pre[w] != -2) continue;
      pre[w] = v;
      prel[w] = l;
      q.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Lasso> difference_witness(const OmegaAutomaton& a,
                                        const OmegaAutomaton& b) {
  if (a.letters != b.letters)
    throw usage_error("difference_witness: alphabets differ");
  OmegaAutomaton pa = normalize_colors(as_parity(a));
  OmegaAutomaton pb = normalize_colors(as_parity(b));
  ProductGraph g;
  g.na = pa.num_states();
  g.nb = pb.num_states();
  g.n = g.na * g.nb;
  g.nl = pa.num_letters();
  g.a = &pa;
  g.b = &pb;
  g.ca.resize(g.n);
  g.cb.resize(g.n);
  for (int qa = 0; qa < g.na; ++qa)
    for (int qb = 0; qb < g.nb; ++qb) {
      g.ca[g.pack(qa, qb)] = pa.color[qa];
      g.cb[g.pack(qa, qb)] = pb.color[qb];
    }
  int init = g.pack(pa.initial, pb.initial);

  std::vector<char> reach(g.n, 0);
  {
    std::deque<int> q{init};
    reach[init] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int l = 0; l < g.nl; ++l) {
        int w = g.step(v, l);
        if (!reach[w]) {
          reach[w] = 1;
          q.push_back(w);
        }
      }
    }
  }

  int maxa = *std::max_element(pa.color.begin(), pa.color.end());
  int maxb = *std::max_element(pb.color.begin(), pb.color.end());
  for (int i = 0; i <= maxa; ++i) {
    for (int j = 0; j <= maxb; ++j) {
      if (i % 2 == j % 2) continue;
      std::vector<char> allowed(g.n, 0);
      std::vector<int> cands;
      for (int v = 0; v < g.n; ++v)
        if (reach[v] && g.ca[v] <= i && g.cb[v] <= j) {
          allowed[v] = 1;
          if (g.ca[v] == i) cands.push_back(v);
        }
      // A lasso whose cycle tops out at exactly (i, j): walk from a
      // ca = i vertex to a cb = j vertex and close the loop.
      for (int u : cands) {
        std::vector<char> goal_b(g.n, 0), goal_u(g.n, 0);
        for (int v = 0; v < g.n; ++v)
          if (allowed[v] && g.cb[v] == j) goal_b[v] = 1;
        goal_u[u] = 1;
        auto leg1 = bfs_path(g, {u}, allowed, goal_b, false);
        if (!leg1) continue;
        auto leg2 = bfs_path(g, {leg1->second}, allowed, goal_u,
                             leg1->first.empty());
        if (!leg2) continue;
        std::vector<char> goal_cyc(g.n, 0);
        goal_cyc[u] = 1;
        std::vector<char> anywhere(g.n, 1);
        auto stem = bfs_path(g, {init}, anywhere, goal_cyc, false);
        if (!stem) continue;
        std::vector<int> cyc = leg1->first;
        cyc.insert(cyc.end(), leg2->first.begin(), leg2->first.end());
        if (cyc.empty()) continue;
        Lasso w;
        for (int l : stem->first) w.stem.push_back(a.letters[l]);
        for (int l : cyc) w.cycle.push_back(a.letters[l]);
        if (run_automaton(a, w.stem, w.cycle) != run_automaton(b, w.stem, w.cycle))
          return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace delcon
