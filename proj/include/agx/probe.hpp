#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "agx/action.hpp"
#include "agx/classify.hpp"
#include "agx/transforms.hpp"

namespace agx {

struct ProbeRow {
  int length = 0;        // requested word length n
  int sample_index = 0;  // position within this length's batch
  std::vector<int> word; // letters of the symmetric closure
  std::string word_text;
  int minimal_depth = -1;  // -1 when the depth budget ran out
  std::string outcome;     // "ok" or "depth_exhausted"
};

struct ProbeTable {
  int degree = 0;
  int depth_max = 0;
  int samples = 0;  // 0 means exhaustive
  std::uint64_t seed = 0;
  std::vector<ProbeRow> rows;
};

namespace detail {

// Minimal depth d <= depth_max at which every induced word of g at depth d
// either consists only of letters from the low layer or repeats identically
// under some letter. Low-layer words are closed under restriction and are
// pruned; everything else stays in the frontier.
inline int probe_one_word(const SymmetricClosure& sc, const std::vector<char>& low_layer,
                          const std::vector<int>& g, int depth_max) {
  const int q = sc.aut.alphabet;
  auto in_low_layer = [&](const std::vector<int>& key) {
    for (int s : key)
      if (!low_layer[static_cast<std::size_t>(s)]) return false;
    return true;
  };
  auto child = [&](const std::vector<int>& key, int x) {
    std::vector<int> states = key;
    cascade_step(sc.aut, states, x);
    return sc.element_word(states);
  };

  std::set<std::vector<int>> frontier;
  if (!in_low_layer(g)) frontier.insert(sc.element_word(g));
  for (int d = 0; d <= depth_max; ++d) {
    bool all_repeat = true;
    for (const auto& key : frontier) {
      bool repeats = false;
      for (int x = 0; x < q && !repeats; ++x) repeats = child(key, x) == key;
      if (!repeats) {
        all_repeat = false;
        break;
      }
    }
    if (all_repeat) return d;
    if (d == depth_max) break;
    std::set<std::vector<int>> next;
    for (const auto& key : frontier)
      for (int x = 0; x < q; ++x) {
        auto k = child(key, x);
        if (!in_low_layer(k)) next.insert(std::move(k));
      }
    frontier = std::move(next);
  }
  return -1;
}

}  // namespace detail

// Depth probe for the layered dichotomy on polynomial automata: restrictions
// of any group word eventually have all letters one activity layer down, or
// sit on a circuit. Empirical per-word evidence up to depth_max, not a proof.
// samples == 0 enumerates every reduced word of each requested length.
inline ProbeTable probe_weak_contraction(const Automaton& a, const std::vector<int>& word_lengths,
                                         int depth_max, int samples = 0, std::uint64_t seed = 0) {
  ClassificationReport base = classify(a);
  if (!base.is_polynomial) fail("NotPolynomial", "activity growth is exponential");
  if (base.degree.value() < 0)
    fail("NotPolynomial", "all states are finitary; the layered dichotomy needs degree >= 0");
  if (depth_max < 0) fail("UnsupportedParameter", "depth_max must be nonnegative");

  SymmetricClosure sc = symmetric_closure(a);
  ClassificationReport rep = classify(sc.aut);
  if (!rep.is_polynomial || rep.degree != base.degree)
    fail("Internal", "symmetrized automaton disagrees on the degree");
  const int m = rep.degree.value();
  std::vector<char> low_layer(static_cast<std::size_t>(sc.aut.size()), 0);
  for (int s = 0; s < sc.aut.size(); ++s) {
    auto deg = rep.state_degree[static_cast<std::size_t>(s)];
    if (deg && *deg <= m - 1) low_layer[static_cast<std::size_t>(s)] = 1;
  }

  ProbeTable table;
  table.degree = m;
  table.depth_max = depth_max;
  table.samples = samples;
  table.seed = seed;

  const auto& gens = sc.generators;
  if (gens.empty()) fail("Internal", "no nontrivial generators");
  std::mt19937_64 rng(seed);

  auto add_row = [&](int n, int idx, std::vector<int> word) {
    ProbeRow row;
    row.length = n;
    row.sample_index = idx;
    row.word_text = sc.format(word);
    row.word = std::move(word);
    row.minimal_depth = detail::probe_one_word(sc, low_layer, row.word, depth_max);
    row.outcome = row.minimal_depth >= 0 ? "ok" : "depth_exhausted";
    table.rows.push_back(std::move(row));
  };

  for (int n : word_lengths) {
    if (n < 0) fail("UnsupportedParameter", "word lengths must be nonnegative");
    if (n >= 2 && gens.size() == 1 && sc.inv[static_cast<std::size_t>(gens[0])] == gens[0])
      continue;  // a single involution admits no reduced word this long
    if (samples == 0) {
      // every reduced word of length exactly n, in lex order over generators
      std::vector<int> word;
      int idx = 0;
      auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == n) {
          add_row(n, idx++, word);
          return;
        }
        for (int g : gens) {
          if (!word.empty() && sc.inv[static_cast<std::size_t>(word.back())] == g) continue;
          word.push_back(g);
          self(self);
          word.pop_back();
        }
      };
      rec(rec);
    } else {
      for (int idx = 0; idx < samples; ++idx) {
        std::vector<int> word;
        word.reserve(static_cast<std::size_t>(n));
        while (static_cast<int>(word.size()) < n) {
          int g = gens[rng() % gens.size()];
          if (!word.empty() && sc.inv[static_cast<std::size_t>(word.back())] == g) continue;
          word.push_back(g);
        }
        add_row(n, idx, std::move(word));
      }
    }
  }
  return table;
}

}  // namespace agx
