// End-to-end acceptance gate. Each check prints exactly one PASS/FAIL line;
// the process exits nonzero if any check fails. Tolerances and budgets are
// deliberately hard-coded here so a regression cannot hide behind a config.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "agx/nucleus.hpp"
#include "agx/probe.hpp"
#include "agx/schreier.hpp"
#include "agx/wordproblem.hpp"

#include "common.hpp"

using namespace agx;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void run(int index, const std::string& name, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("unexpected exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %2d  %-38s (%.1f s)%s%s\n", c.ok ? "PASS" : "FAIL", index, name.c_str(), secs,
              c.ok ? "" : "  -- ", c.detail.c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

std::vector<Word> binary_words(int max_len) {
  std::vector<Word> out{{}};
  for (std::size_t at = 0; at < out.size(); ++at) {
    if (static_cast<int>(out[at].size()) == max_len) continue;
    for (int b = 0; b < 2; ++b) {
      Word w = out[at];
      w.push_back(b);
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::string bits_name(const Word& v) {
  std::string name = "omega:";
  for (Letter b : v) name += static_cast<char>('0' + b);
  return name;
}

// ---- 1: activity degrees of the built-in families ----

void families_classify(Check& c) {
  c.expect(classify(build_family("adding")).degree == 0, "adding degree != 0");
  for (const Word& v : binary_words(3)) {
    if (v.empty()) continue;
    ClassificationReport rep = classify(build_family(bits_name(v)));
    c.expect(rep.is_polynomial && rep.degree == static_cast<int>(v.size()),
             bits_name(v) + " degree != " + std::to_string(v.size()));
  }
  c.expect(classify(build_family("hanoi:3")).degree == 0, "hanoi:3 degree != 0");
  for (int k : {4, 5})
    c.expect(!classify(build_family("hanoi:" + std::to_string(k))).is_polynomial,
             "hanoi:" + std::to_string(k) + " classified polynomial");
  c.expect(!classify(build_family("nonpoly_b")).is_polynomial, "nonpoly_b classified polynomial");
}

// ---- 2: three-peg level graphs: 3^n vertices, diameter 2^n - 1 ----

void hanoi3_levels(Check& c) {
  Automaton a = build_family("hanoi:3");
  long long vertices = 1;
  for (int n = 1; n <= 7; ++n) {
    vertices *= 3;
    LevelGraph g = schreier_level_graph(a, n);
    GraphMetrics m = graph_metrics(g);
    c.expect(static_cast<long long>(g.vertices.size()) == vertices,
             "level " + std::to_string(n) + " vertex count");
    c.expect(m.components == 1, "level " + std::to_string(n) + " disconnected");
    c.expect(m.diameters_exact, "level " + std::to_string(n) + " diameter not exact");
    int want = (1 << n) - 1;
    c.expect(m.diameter_per_component == std::vector<int>{want},
             "level " + std::to_string(n) + " diameter != " + std::to_string(want));
  }
}

// ---- 3: four-peg diameters grow subexponentially ----

void hanoi4_levels(Check& c) {
  Automaton a = build_family("hanoi:4");
  std::vector<double> d(7, 0.0);
  for (int n = 1; n <= 6; ++n) {
    LevelGraph g = schreier_level_graph(a, n);
    GraphMetrics m = graph_metrics(g);
    c.expect(m.components == 1, "level " + std::to_string(n) + " disconnected");
    c.expect(m.diameters_exact, "level " + std::to_string(n) + " diameter not exact");
    d[static_cast<std::size_t>(n)] = m.diameter_per_component[0];
    if (n >= 3)
      c.expect(d[static_cast<std::size_t>(n)] < (1 << n) - 1,
               "level " + std::to_string(n) + " diameter not below 2^n - 1");
  }
  // log2-increments over n = 3..5 must be nonincreasing, one bad step allowed
  int bad_steps = 0;
  std::string trend;
  for (int n = 3; n <= 5; ++n) {
    double delta = std::log2(d[static_cast<std::size_t>(n + 1)]) -
                   std::log2(d[static_cast<std::size_t>(n)]);
    if (!trend.empty()) trend += ",";
    trend += std::to_string(delta).substr(0, 5);
    if (n > 3) {
      double prev = std::log2(d[static_cast<std::size_t>(n)]) -
                    std::log2(d[static_cast<std::size_t>(n - 1)]);
      if (delta > prev + 1e-9) ++bad_steps;
    }
  }
  c.expect(bad_steps <= 1, "log2 increments rise twice: " + trend);
}

// ---- 4: odometer levels are single cycles; orbit growth is 2r + 1 ----

void adding_line(Check& c) {
  Automaton a = build_family("adding");
  for (int n = 1; n <= 12; ++n) {
    LevelGraph g = schreier_level_graph(a, n);
    GraphMetrics m = graph_metrics(g);
    std::size_t verts = std::size_t{1} << n;
    c.expect(g.vertices.size() == verts, "level " + std::to_string(n) + " vertex count");
    c.expect(m.components == 1, "level " + std::to_string(n) + " disconnected");
    if (n == 1) {
      c.expect(g.edges.size() == 1, "level 1 is not a single edge");
      c.expect(m.diameter_per_component == std::vector<int>{1}, "level 1 diameter");
      continue;
    }
    c.expect(g.edges.size() == verts, "level " + std::to_string(n) + " edge count");
    std::vector<int> deg(verts, 0);
    for (const auto& e : g.edges) {
      deg[static_cast<std::size_t>(e.u)]++;
      deg[static_cast<std::size_t>(e.v)]++;
    }
    for (int dv : deg) c.expect(dv == 2, "level " + std::to_string(n) + " vertex degree != 2");
    c.expect(m.diameters_exact && m.diameter_per_component == std::vector<int>{1 << (n - 1)},
             "level " + std::to_string(n) + " diameter != 2^(n-1)");
  }

  GrowthSeries s = growth_series(a, EpWord::make({}, {0}), 1000);
  c.expect(!s.truncated, "growth ran into the vertex cap");
  c.expect(s.rows.size() == 1001, "growth row count");
  for (const auto& row : s.rows)
    c.expect(row.ball_size == 2ll * row.radius + 1,
             "gamma(" + std::to_string(row.radius) + ") != 2r + 1");
}

// ---- 5: one-rung tower orbit growth sits between polynomial and exponential ----

void omega0_growth(Check& c) {
  GrowthSeries s = growth_series(build_family("omega:0"), EpWord::make({}, {0}), 64);
  c.expect(!s.truncated, "growth ran into the vertex cap");
  c.expect(s.rows.size() == 65, "growth row count");
  for (std::size_t i = 1; i < s.rows.size(); ++i)
    c.expect(s.rows[i].ball_size >= s.rows[i - 1].ball_size, "gamma not nondecreasing");

  auto gamma = [&](int r) { return static_cast<double>(s.rows[static_cast<std::size_t>(r)].ball_size); };
  c.expect(gamma(64) > 64.0 * 64.0, "gamma(64) <= 64^2");
  c.expect(std::log2(gamma(64)) / 64.0 < 0.5, "gamma(64) looks exponential");

  // growth exponent log gamma(r) / log r rises with r; one flat step tolerated
  int bad_steps = 0;
  std::string trend;
  double prev = 0.0;
  for (int r : {8, 16, 32, 64}) {
    double e = std::log(gamma(r)) / std::log(static_cast<double>(r));
    if (!trend.empty()) trend += ",";
    trend += std::to_string(e).substr(0, 5);
    if (r > 8 && e <= prev + 1e-12) ++bad_steps;
    prev = e;
  }
  c.expect(bad_steps <= 1, "growth exponent not increasing: " + trend);
}

// ---- 6: exact word problem vs the brute-force depth scan ----

void wordproblem_differential(Check& c) {
  std::mt19937_64 rng(2026);
  for (const Automaton& a : agxtest::standard_families()) {
    SymmetricClosure sc = symmetric_closure(a);
    WordProblem wp(sc);
    for (int trial = 0; trial < 200; ++trial) {
      GroupWord g = agxtest::random_group_word(rng, a, static_cast<int>(rng() % 7));
      std::vector<int> word = sc.resolve(g);
      // a depth-10 witness must force a nontrivial verdict, and a trivial
      // verdict must leave no witness; both directions are this one condition
      bool trivial = wp.is_trivial(word);
      WordProblem::Naive scan = wp.is_trivial_naive(word, 10);
      c.expect(!(trivial && scan == WordProblem::Naive::moved),
               "trivial verdict with a depth-10 mover");
    }
  }

  Automaton adding = build_family("adding");
  SymmetricClosure sc = symmetric_closure(adding);
  WordProblem wp(sc);
  for (int n = 4; n <= 8; ++n) {
    std::vector<int> word(std::size_t{1} << n, sc.plus[1]);
    c.expect(!wp.is_trivial(word), "a^(2^" + std::to_string(n) + ") declared trivial");
    bool fixes = true;
    for (const Word& w : agxtest::all_words(2, n))
      fixes = fixes && apply_word(sc.aut, word, w).image == w;
    c.expect(fixes, "a^(2^" + std::to_string(n) + ") moves a depth-" + std::to_string(n) + " word");
  }
}

// ---- 7: nucleus computations ----

void nucleus_results(Check& c) {
  NucleusResult add = nucleus(build_family("adding"));
  c.expect(add.contracting && add.nucleus.size() == 3, "adding nucleus size");
  std::set<std::string> add_names(add.nucleus.names.begin(), add.nucleus.names.end());
  c.expect(add_names == std::set<std::string>{"1", "a", "a^-1"}, "adding nucleus elements");

  NucleusResult h3 = nucleus(build_family("hanoi:3"));
  c.expect(h3.contracting && h3.nucleus.size() == 4, "hanoi:3 nucleus size");
  std::set<std::string> h3_names(h3.nucleus.names.begin(), h3.nucleus.names.end());
  c.expect(h3_names == std::set<std::string>{"1", "a_(01)", "a_(02)", "a_(12)"},
           "hanoi:3 nucleus is not the symmetrized generator set");

  Automaton core = subautomaton(build_family("nonpoly_b"), {"e", "b", "b^-1", "b^2", "b^-2"});
  SymmetricClosure sc = symmetric_closure(core);
  NucleusResult r = nucleus(sc);
  c.expect(r.contracting && r.nucleus.size() == 7, "power-machine core nucleus size");
  WordProblem wp(sc);
  int b = core.state_index("b");
  for (int k = -3; k <= 3 && r.contracting; ++k) {
    std::vector<int> want;
    for (int i = 0; i < std::abs(k); ++i)
      want.push_back(k > 0 ? sc.plus[static_cast<std::size_t>(b)]
                           : sc.minus[static_cast<std::size_t>(b)]);
    int hits = 0;
    for (const auto& elem : r.element_words)
      if (wp.are_equal(elem, want)) ++hits;
    c.expect(hits == 1, "power-machine nucleus misses b^" + std::to_string(k));
  }
}

// ---- 8: layered-restriction probe on one- and two-rung towers ----

void layered_probe(Check& c) {
  for (const Word& v : binary_words(2)) {
    if (v.empty()) continue;
    Automaton a = build_family(bits_name(v));
    ProbeTable exhaustive = probe_weak_contraction(a, {2}, 16, 0, 0);
    ProbeTable sampled = probe_weak_contraction(a, {4, 8}, 16, 32, 0);
    c.expect(!exhaustive.rows.empty() && sampled.rows.size() == 64,
             bits_name(v) + " probe row counts");
    for (const auto& t : {exhaustive, sampled})
      for (const ProbeRow& row : t.rows)
        c.expect(row.outcome == "ok" && row.minimal_depth >= 0 && row.minimal_depth <= 16,
                 bits_name(v) + " word " + row.word_text + " exhausted depth 16");
  }
}

// ---- 9: rung gates pass straight through to the carry machine ----

void gate_action_law(Check& c) {
  std::mt19937_64 rng(909);
  for (const Word& v : binary_words(2)) {
    if (v.empty()) continue;
    Automaton a = build_family(bits_name(v));
    const int k = static_cast<int>(v.size());
    int carry = a.state_index("a");
    for (int i = 1; i <= k; ++i) {
      int rung = a.state_index("a" + std::to_string(i));
      c.expect(rung >= 0, bits_name(v) + " misses rung " + std::to_string(i));
      std::vector<int> reps(static_cast<std::size_t>(i), 0);
      for (;;) {
        // gate x_i^(n_i) xbar_i ... x_1^(n_1) xbar_1 for the current exponents
        Word gate;
        for (int j = i; j >= 1; --j) {
          Letter x = v[static_cast<std::size_t>(j - 1)];
          for (int t = 0; t < reps[static_cast<std::size_t>(j - 1)]; ++t) gate.push_back(x);
          gate.push_back(1 - x);
        }
        for (int tail = 0; tail < 10; ++tail) {
          EpWord w = agxtest::random_epword(rng, 2);
          EpWord lhs = act_epword(a, {rung}, ep_prepend(gate, w));
          EpWord rhs = ep_prepend(gate, act_epword(a, {carry}, w));
          c.expect(lhs.prefix(64) == rhs.prefix(64),
                   bits_name(v) + " rung " + std::to_string(i) + " gate identity");
        }
        int at = 0;
        while (at < i && reps[static_cast<std::size_t>(at)] == 2) reps[static_cast<std::size_t>(at++)] = 0;
        if (at == i) break;
        reps[static_cast<std::size_t>(at)]++;
      }
    }
  }
}

// ---- 10: core invariant suites, exhaustive at small bounds ----

void core_invariants(Check& c) {
  std::mt19937_64 rng(4242);
  for (const Automaton& a : agxtest::standard_families()) {
    SymmetricClosure sc = symmetric_closure(a);

    // inverses undo the action; images keep their length (all words <= 8)
    std::vector<Word> words{{}};
    for (std::size_t at = 0; at < words.size(); ++at) {
      if (words[at].size() == 8) continue;
      for (int x = 0; x < a.alphabet; ++x) {
        Word w = words[at];
        w.push_back(x);
        words.push_back(std::move(w));
      }
    }
    for (const Word& w : words)
      for (int s = 0; s < a.size(); ++s) {
        Word image = apply_state(a, s, w).first;
        c.expect(image.size() == w.size(), "image length changed");
        c.expect(apply_state(sc.aut, sc.minus[static_cast<std::size_t>(s)], image).first == w,
                 "inverse failed to undo a state");
      }

    // splitting at every prefix composes restrictions correctly
    std::vector<std::vector<int>> tuples{{}};
    for (int t1 = 0; t1 < sc.aut.size(); ++t1) {
      tuples.push_back({t1});
      for (int t2 = 0; t2 < sc.aut.size(); ++t2) tuples.push_back({t1, t2});
    }
    for (const auto& tuple : tuples)
      for (const Word& w : agxtest::all_words(a.alphabet, 4))
        for (std::size_t cut = 0; cut <= w.size(); ++cut) {
          Word u(w.begin(), w.begin() + static_cast<long>(cut));
          Word rest(w.begin() + static_cast<long>(cut), w.end());
          WordAction whole = apply_word(sc.aut, tuple, w);
          WordAction head = apply_word(sc.aut, tuple, u);
          WordAction tail = apply_word(sc.aut, head.induced, rest);
          Word glued = head.image;
          glued.insert(glued.end(), tail.image.begin(), tail.image.end());
          c.expect(glued == whole.image && tail.induced == whole.induced,
                   "prefix splitting broke the induced word");
        }

    // eventually periodic action agrees with finite prefixes out to 64 letters
    for (int trial = 0; trial < 20; ++trial) {
      GroupWord g = agxtest::random_group_word(rng, a, 1 + static_cast<int>(rng() % 3));
      EpWord w = agxtest::random_epword(rng, a.alphabet);
      c.expect(act_epword(sc, g, w).prefix(64) == apply_group_word(sc, g, w.prefix(64)).image,
               "periodic action drifted from finite prefixes");
    }

    // minimization is idempotent and invisible to the action (words <= 5)
    Minimized m = minimize_with_map(detail::doubled_with_inverses(a));
    Automaton again = minimize(m.automaton);
    c.expect(again.output_tab == m.automaton.output_tab && again.next_tab == m.automaton.next_tab,
             "minimize not idempotent");
    for (int n = 0; n <= 5; ++n)
      for (const Word& w : agxtest::all_words(a.alphabet, n))
        for (int s = 0; s < 2 * a.size(); ++s)
          c.expect(apply_state(detail::doubled_with_inverses(a), s, w).first ==
                       apply_state(m.automaton, m.state_map[static_cast<std::size_t>(s)], w).first,
                   "minimization changed the action");
  }

  // canonical forms: u v^inf and (uv)(vv)^inf are the same point
  for (int q : {2, 3}) {
    std::vector<Word> shorts{{}};
    for (std::size_t at = 0; at < shorts.size(); ++at) {
      if (shorts[at].size() == 2) continue;
      for (int x = 0; x < q; ++x) {
        Word w = shorts[at];
        w.push_back(x);
        shorts.push_back(std::move(w));
      }
    }
    for (const Word& u : shorts)
      for (const Word& v : shorts) {
        if (v.empty()) continue;
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        Word vv = v;
        vv.insert(vv.end(), v.begin(), v.end());
        EpWord lhs = EpWord::make(u, v);
        EpWord rhs = EpWord::make(uv, vv);
        c.expect(lhs == rhs, "canonical forms differ for u v^inf");
        for (int i = 0; i < 12; ++i)
          c.expect(lhs.at(i) == (i < static_cast<int>(u.size())
                                     ? u[static_cast<std::size_t>(i)]
                                     : v[(static_cast<std::size_t>(i) - u.size()) % v.size()]),
                   "canonical form changed a letter");
      }
  }
}

}  // namespace

int main() {
  run(1, "family activity degrees", families_classify);
  run(2, "three-peg level diameters 2^n - 1", hanoi3_levels);
  run(3, "four-peg subexponential diameters", hanoi4_levels);
  run(4, "odometer line and linear growth", adding_line);
  run(5, "one-rung tower growth trend", omega0_growth);
  run(6, "word problem differential", wordproblem_differential);
  run(7, "nucleus computations", nucleus_results);
  run(8, "layered-restriction probe", layered_probe);
  run(9, "rung gate action law", gate_action_law);
  run(10, "core invariant suites", core_invariants);
  if (failures) std::printf("%d of 10 checks failed\n", failures);
  return failures == 0 ? 0 : 1;
}
