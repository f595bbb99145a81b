#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "agx/minimize.hpp"

namespace agx {

using BigInt = boost::multiprecision::cpp_int;

struct SccResult {
  std::vector<int> comp;  // vertex -> component id
  int count = 0;          // ids are in reverse topological order
};

// Iterative Tarjan. For an edge u -> v across components, comp[v] < comp[u].
inline SccResult strongly_connected_components(int n, const std::vector<std::vector<int>>& adj) {
  SccResult r;
  r.comp.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0;
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on[static_cast<std::size_t>(root)] = 1;
    call.push_back({root, 0});
    while (!call.empty()) {
      int v = call.back().first;
      std::size_t ci = call.back().second;
      if (ci < adj[static_cast<std::size_t>(v)].size()) {
        call.back().second++;
        int w = adj[static_cast<std::size_t>(v)][ci];
        if (index[static_cast<std::size_t>(w)] == -1) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
          stack.push_back(w);
          on[static_cast<std::size_t>(w)] = 1;
          call.push_back({w, 0});
        } else if (on[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] =
              std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
        }
      } else {
        if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
          int id = r.count++;
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on[static_cast<std::size_t>(w)] = 0;
            r.comp[static_cast<std::size_t>(w)] = id;
            if (w == v) break;
          }
        }
        call.pop_back();
        if (!call.empty()) {
          int p = call.back().first;
          low[static_cast<std::size_t>(p)] =
              std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
        }
      }
    }
  }
  return r;
}

struct ClassificationReport {
  std::vector<std::string> states;  // names in the minimized automaton
  std::optional<std::string> trivial_state;
  std::vector<std::vector<std::string>> scc_list;  // trivial state removed, topological order
  std::vector<bool> cycle_sccs;                    // parallel to scc_list
  bool is_polynomial = false;
  std::optional<int> degree;                     // empty means "not polynomial"
  std::vector<std::optional<int>> state_degree;  // per state; empty = not polynomial from there
  std::vector<std::string> circuit_states;
  std::vector<std::string> finitary_states;
  Automaton minimized;
};

// Structural activity classification on the Moore diagram with the trivial
// state removed: the automaton is polynomial iff every strongly connected
// component there is a single simple directed cycle (internal edge count ==
// vertex count, counting letter multiplicity), and the degree is the largest
// number of cycle components met along a directed path, minus one.
inline ClassificationReport classify(const Automaton& input) {
  ClassificationReport rep;
  rep.minimized = minimize(input);
  const Automaton& a = rep.minimized;
  const int n = a.size();
  const int t = a.identity ? *a.identity : -1;
  rep.states = a.names;
  if (t >= 0) rep.trivial_state = a.names[static_cast<std::size_t>(t)];

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    if (s == t) continue;
    for (int x = 0; x < a.alphabet; ++x) {
      int d = a.next(s, x);
      if (d != t) adj[static_cast<std::size_t>(s)].push_back(d);
    }
  }
  SccResult scc = strongly_connected_components(n, adj);
  const int tc = t >= 0 ? scc.comp[static_cast<std::size_t>(t)] : -1;

  std::vector<int> size(static_cast<std::size_t>(scc.count), 0);
  std::vector<int> internal(static_cast<std::size_t>(scc.count), 0);
  std::vector<std::set<int>> succ(static_cast<std::size_t>(scc.count));
  for (int s = 0; s < n; ++s) {
    if (s == t) continue;
    int c = scc.comp[static_cast<std::size_t>(s)];
    size[static_cast<std::size_t>(c)]++;
    for (int d : adj[static_cast<std::size_t>(s)]) {
      int cd = scc.comp[static_cast<std::size_t>(d)];
      if (cd == c)
        internal[static_cast<std::size_t>(c)]++;
      else
        succ[static_cast<std::size_t>(c)].insert(cd);
    }
  }

  std::vector<bool> cycle(static_cast<std::size_t>(scc.count), false);
  bool poly = true;
  for (int c = 0; c < scc.count; ++c) {
    if (c == tc || size[static_cast<std::size_t>(c)] == 0) continue;
    if (internal[static_cast<std::size_t>(c)] == size[static_cast<std::size_t>(c)])
      cycle[static_cast<std::size_t>(c)] = true;
    else if (internal[static_cast<std::size_t>(c)] != 0)
      poly = false;
  }

  // Components come out of Tarjan with successors first, so a single ascending
  // pass computes the longest cycle-count path and the local polynomial flag.
  std::vector<int> cycles_ahead(static_cast<std::size_t>(scc.count), 0);
  std::vector<bool> poly_ahead(static_cast<std::size_t>(scc.count), true);
  for (int c = 0; c < scc.count; ++c) {
    if (c == tc || size[static_cast<std::size_t>(c)] == 0) continue;
    int best = 0;
    bool ok = internal[static_cast<std::size_t>(c)] == 0 || cycle[static_cast<std::size_t>(c)];
    for (int d : succ[static_cast<std::size_t>(c)]) {
      if (d == tc) continue;
      best = std::max(best, cycles_ahead[static_cast<std::size_t>(d)]);
      ok = ok && poly_ahead[static_cast<std::size_t>(d)];
    }
    cycles_ahead[static_cast<std::size_t>(c)] = best + (cycle[static_cast<std::size_t>(c)] ? 1 : 0);
    poly_ahead[static_cast<std::size_t>(c)] = ok;
  }

  rep.is_polynomial = poly;
  if (poly) {
    int most = 0;
    for (int c = 0; c < scc.count; ++c)
      if (c != tc) most = std::max(most, cycles_ahead[static_cast<std::size_t>(c)]);
    rep.degree = most - 1;
  }

  rep.state_degree.assign(static_cast<std::size_t>(n), std::nullopt);
  for (int s = 0; s < n; ++s) {
    if (s == t) {
      rep.state_degree[static_cast<std::size_t>(s)] = -1;
      continue;
    }
    int c = scc.comp[static_cast<std::size_t>(s)];
    if (poly_ahead[static_cast<std::size_t>(c)])
      rep.state_degree[static_cast<std::size_t>(s)] = cycles_ahead[static_cast<std::size_t>(c)] - 1;
  }

  for (int s = 0; s < n; ++s) {
    if (s == t) continue;
    int c = scc.comp[static_cast<std::size_t>(s)];
    if (internal[static_cast<std::size_t>(c)] >= 1)
      rep.circuit_states.push_back(a.names[static_cast<std::size_t>(s)]);
    if (cycles_ahead[static_cast<std::size_t>(c)] == 0 && poly_ahead[static_cast<std::size_t>(c)])
      rep.finitary_states.push_back(a.names[static_cast<std::size_t>(s)]);
  }
  if (t >= 0) rep.finitary_states.push_back(a.names[static_cast<std::size_t>(t)]);

  // Emit components topologically (sources first), trivial state's component
  // dropped.
  for (int c = scc.count - 1; c >= 0; --c) {
    if (c == tc || size[static_cast<std::size_t>(c)] == 0) continue;
    std::vector<std::string> comp_names;
    for (int s = 0; s < n; ++s)
      if (s != t && scc.comp[static_cast<std::size_t>(s)] == c)
        comp_names.push_back(a.names[static_cast<std::size_t>(s)]);
    rep.scc_list.push_back(std::move(comp_names));
    rep.cycle_sccs.push_back(cycle[static_cast<std::size_t>(c)]);
  }
  return rep;
}

// Number of directed paths of length n in the Moore diagram that avoid the
// trivial state (paths may start at any nontrivial state). Grows like n^degree
// for polynomial automata, exponentially otherwise.
inline BigInt activity_path_count(const Automaton& input, int n) {
  if (n < 0) fail("UnsupportedParameter", "path length must be >= 0");
  Automaton a = minimize(input);
  const int m = a.size();
  const int t = a.identity ? *a.identity : -1;
  std::vector<BigInt> cnt(static_cast<std::size_t>(m), 1);
  if (t >= 0) cnt[static_cast<std::size_t>(t)] = 0;
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next_cnt(static_cast<std::size_t>(m), 0);
    for (int s = 0; s < m; ++s) {
      if (s == t) continue;
      BigInt acc = 0;
      for (int x = 0; x < a.alphabet; ++x) {
        int d = a.next(s, x);
        if (d != t) acc += cnt[static_cast<std::size_t>(d)];
      }
      next_cnt[static_cast<std::size_t>(s)] = std::move(acc);
    }
    cnt = std::move(next_cnt);
  }
  BigInt total = 0;
  for (int s = 0; s < m; ++s)
    if (s != t) total += cnt[static_cast<std::size_t>(s)];
  return total;
}

}  // namespace agx
