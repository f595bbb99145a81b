#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "agx/action.hpp"
#include "agx/transforms.hpp"

namespace agx {

inline constexpr long long kDefaultLevelCap = 6561;  // 3^8 vertices
inline constexpr long long kDefaultBallCap = 1000000;

struct SchreierEdge {
  int u = 0;
  int v = 0;                // u < v, indices into vertices
  std::vector<int> labels;  // closure letters realizing the edge, sorted
};

// Undirected simplicial graph of a generator action: fixed points produce no
// loops and parallel edges collapse with their labels merged. Vertices are
// kept sorted so exports are deterministic.
template <typename V>
struct SchreierGraph {
  std::vector<V> vertices;
  std::vector<SchreierEdge> edges;
  std::optional<int> basepoint;
  std::vector<std::string> generator_names;  // indexed by closure letter
};

using LevelGraph = SchreierGraph<Word>;
using OrbitalGraph = SchreierGraph<EpWord>;

namespace detail {

inline std::vector<SchreierEdge> pack_edges(std::map<std::pair<int, int>, std::vector<int>>& raw) {
  std::vector<SchreierEdge> edges;
  edges.reserve(raw.size());
  for (auto& [key, labels] : raw) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    edges.push_back({key.first, key.second, std::move(labels)});
  }
  return edges;
}

}  // namespace detail

// Graph on all length-n words, adjacent when some symmetrized generator maps
// one to the other.
inline LevelGraph schreier_level_graph(const Automaton& a, int n,
                                       long long vertex_cap = kDefaultLevelCap) {
  if (n < 0) fail("UnsupportedParameter", "level must be nonnegative");
  const SymmetricClosure sc = symmetric_closure(a);
  const int q = a.alphabet;
  long long count = 1;
  for (int i = 0; i < n; ++i) {
    count *= q;
    if (count > vertex_cap)
      fail("BudgetExceeded", "level graph would have more than " + std::to_string(vertex_cap) +
                                 " vertices");
  }

  LevelGraph g;
  g.generator_names = sc.aut.names;
  g.vertices.reserve(static_cast<std::size_t>(count));
  for (long long rank = 0; rank < count; ++rank)
    g.vertices.push_back(word_from_rank(rank, q, n));

  std::map<std::pair<int, int>, std::vector<int>> raw;
  for (int i = 0; i < static_cast<int>(count); ++i)
    for (int s : sc.generators) {
      Word image = apply_state(sc.aut, s, g.vertices[static_cast<std::size_t>(i)]).first;
      int j = static_cast<int>(word_rank(image, q));
      if (j == i) continue;
      raw[{std::min(i, j), std::max(i, j)}].push_back(s);
    }
  g.edges = detail::pack_edges(raw);
  return g;
}

// Induced graph on the radius-r ball around w in its orbit, with exact
// eventually periodic equality for deduplication.
inline OrbitalGraph orbital_ball(const Automaton& a, const EpWord& w, int r,
                                 long long vertex_cap = kDefaultBallCap) {
  if (r < 0) fail("UnsupportedParameter", "radius must be nonnegative");
  const SymmetricClosure sc = symmetric_closure(a);
  const EpWord base = EpWord::make(w.pre, w.per);

  std::map<EpWord, int> depth;
  depth[base] = 0;
  std::queue<EpWord> frontier;
  frontier.push(base);
  while (!frontier.empty()) {
    EpWord u = frontier.front();
    frontier.pop();
    int d = depth[u];
    if (d == r) continue;
    for (int s : sc.generators) {
      EpWord v = act_epword(sc.aut, std::vector<int>{s}, u);
      if (depth.count(v)) continue;
      if (static_cast<long long>(depth.size()) >= vertex_cap)
        fail("BudgetExceeded",
             "orbital ball exceeded " + std::to_string(vertex_cap) + " vertices");
      depth[v] = d + 1;
      frontier.push(v);
    }
  }

  OrbitalGraph g;
  g.generator_names = sc.aut.names;
  g.vertices.reserve(depth.size());
  for (const auto& [v, d] : depth) g.vertices.push_back(v);  // std::map: already sorted
  std::map<EpWord, int> index;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    index[g.vertices[static_cast<std::size_t>(i)]] = i;
  g.basepoint = index[base];

  std::map<std::pair<int, int>, std::vector<int>> raw;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    for (int s : sc.generators) {
      EpWord v = act_epword(sc.aut, std::vector<int>{s}, g.vertices[static_cast<std::size_t>(i)]);
      auto it = index.find(v);
      if (it == index.end() || it->second == i) continue;
      raw[{std::min(i, it->second), std::max(i, it->second)}].push_back(s);
    }
  g.edges = detail::pack_edges(raw);
  return g;
}

struct GraphMetrics {
  int components = 0;
  std::vector<int> component_sizes;          // by component, basepoint's first if set
  std::vector<int> diameter_per_component;   // aligned with component_sizes
  bool diameters_exact = true;
  std::vector<long long> ball_sizes_from_basepoint;  // |B(base,d)|, d = 0.. while growing
};

namespace detail {

inline std::vector<int> bfs_dist(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(src)] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(v);
      }
  }
  return dist;
}

}  // namespace detail

template <typename V>
GraphMetrics graph_metrics(const SchreierGraph<V>& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : g.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }

  GraphMetrics m;
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<int> roots;
  int first = g.basepoint.value_or(0);
  for (int pass = 0; pass < n + 1; ++pass) {
    int src = -1;
    if (pass == 0 && n > 0)
      src = first;
    else
      for (int v = 0; v < n; ++v)
        if (comp[static_cast<std::size_t>(v)] < 0) {
          src = v;
          break;
        }
    if (src < 0) break;
    auto dist = detail::bfs_dist(adj, src);
    for (int v = 0; v < n; ++v)
      if (dist[static_cast<std::size_t>(v)] >= 0) comp[static_cast<std::size_t>(v)] = m.components;
    roots.push_back(src);
    ++m.components;
  }
  m.component_sizes.assign(static_cast<std::size_t>(m.components), 0);
  for (int v = 0; v < n; ++v) m.component_sizes[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])]++;

  // Diameters: exact all-source scan on small graphs; double sweep with a
  // midpoint eccentricity bound otherwise, flagged unless the bounds meet.
  m.diameter_per_component.assign(static_cast<std::size_t>(m.components), 0);
  if (n <= 20000) {
    for (int v = 0; v < n; ++v) {
      auto dist = detail::bfs_dist(adj, v);
      int& diam = m.diameter_per_component[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
      for (int u = 0; u < n; ++u) diam = std::max(diam, dist[static_cast<std::size_t>(u)]);
    }
  } else {
    for (int c = 0; c < m.components; ++c) {
      auto d0 = detail::bfs_dist(adj, roots[static_cast<std::size_t>(c)]);
      int x = roots[static_cast<std::size_t>(c)];
      for (int v = 0; v < n; ++v)
        if (d0[static_cast<std::size_t>(v)] > d0[static_cast<std::size_t>(x)]) x = v;
      auto dx = detail::bfs_dist(adj, x);
      int y = x, lower = 0;
      for (int v = 0; v < n; ++v)
        if (dx[static_cast<std::size_t>(v)] > lower) {
          lower = dx[static_cast<std::size_t>(v)];
          y = v;
        }
      // vertex halfway along a shortest x-y walk bounds the diameter above
      auto dy = detail::bfs_dist(adj, y);
      int mid = y;
      for (int v = 0; v < n; ++v)
        if (dx[static_cast<std::size_t>(v)] + dy[static_cast<std::size_t>(v)] == lower &&
            dx[static_cast<std::size_t>(v)] == (lower + 1) / 2)
          mid = v;
      auto dm = detail::bfs_dist(adj, mid);
      int ecc = 0;
      for (int v = 0; v < n; ++v) ecc = std::max(ecc, dm[static_cast<std::size_t>(v)]);
      int upper = 2 * ecc;
      m.diameter_per_component[static_cast<std::size_t>(c)] = lower;
      if (upper != lower) m.diameters_exact = false;
    }
  }

  if (g.basepoint) {
    auto dist = detail::bfs_dist(adj, *g.basepoint);
    int ecc = 0;
    for (int v = 0; v < n; ++v) ecc = std::max(ecc, dist[static_cast<std::size_t>(v)]);
    m.ball_sizes_from_basepoint.assign(static_cast<std::size_t>(ecc) + 1, 0);
    for (int v = 0; v < n; ++v)
      if (dist[static_cast<std::size_t>(v)] >= 0)
        m.ball_sizes_from_basepoint[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])]++;
    long long run = 0;
    for (auto& b : m.ball_sizes_from_basepoint) {
      run += b;
      b = run;
    }
  }
  return m;
}

struct GrowthRow {
  int radius = 0;
  long long ball_size = 0;
};

struct GrowthSeries {
  std::vector<GrowthRow> rows;
  EpWord basepoint;
  std::string generating_set;
  bool truncated = false;  // budget ran out; rows hold the complete prefix
};

// Ball sizes around w for r = 0..r_max by one expanding orbit search.
inline GrowthSeries growth_series(const Automaton& a, const EpWord& w, int r_max,
                                  long long vertex_cap = kDefaultBallCap) {
  if (r_max < 0) fail("UnsupportedParameter", "radius must be nonnegative");
  const SymmetricClosure sc = symmetric_closure(a);

  GrowthSeries series;
  series.basepoint = EpWord::make(w.pre, w.per);
  for (std::size_t i = 0; i < sc.generators.size(); ++i) {
    if (i) series.generating_set += ",";
    series.generating_set += sc.aut.names[static_cast<std::size_t>(sc.generators[i])];
  }

  std::map<EpWord, int> seen;
  seen[series.basepoint] = 0;
  std::vector<EpWord> frontier{series.basepoint};
  series.rows.push_back({0, 1});
  for (int r = 1; r <= r_max && !frontier.empty(); ++r) {
    std::vector<EpWord> next;
    for (const auto& u : frontier)
      for (int s : sc.generators) {
        EpWord v = act_epword(sc.aut, std::vector<int>{s}, u);
        if (seen.count(v)) continue;
        if (static_cast<long long>(seen.size()) >= vertex_cap) {
          series.truncated = true;
          return series;
        }
        seen[v] = r;
        next.push_back(v);
      }
    frontier = std::move(next);
    series.rows.push_back({r, static_cast<long long>(seen.size())});
  }
  // orbit exhausted early: the ball stops growing
  for (int r = static_cast<int>(series.rows.size()); r <= r_max; ++r)
    series.rows.push_back({r, static_cast<long long>(seen.size())});
  return series;
}

}  // namespace agx
