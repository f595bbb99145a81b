#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "agx/minimize.hpp"

namespace agx {

inline constexpr int kDefaultAlphabetCap = 4096;

namespace detail {

// Disjoint union of an automaton and its formal inverses. State m+s is s^-1:
// it outputs pi(s,.)^-1 and on letter y moves to (lambda(s, pi(s,.)^-1(y)))^-1.
inline Automaton doubled_with_inverses(const Automaton& a) {
  require_valid(a);
  const int m = a.size();
  const int q = a.alphabet;
  std::vector<std::string> names = a.names;
  for (int s = 0; s < m; ++s) names.push_back(a.names[static_cast<std::size_t>(s)] + "^-1");
  Automaton u = Automaton::with_states(q, std::move(names));
  for (int s = 0; s < m; ++s)
    for (int x = 0; x < q; ++x) u.set(s, x, a.out(s, x), a.next(s, x));
  for (int s = 0; s < m; ++s) {
    std::vector<int> pre(static_cast<std::size_t>(q));
    for (int x = 0; x < q; ++x) pre[static_cast<std::size_t>(a.out(s, x))] = x;
    for (int y = 0; y < q; ++y) {
      int x = pre[static_cast<std::size_t>(y)];
      u.set(m + s, y, x, m + a.next(s, x));
    }
  }
  u.identity = a.identity;
  return u;
}

}  // namespace detail

inline Automaton inverse_automaton(const Automaton& a) {
  return minimize(detail::doubled_with_inverses(a));
}

// Same states over the alphabet X^n; block letters are encoded little-endian,
// x1 + x2*q + ... + xn*q^(n-1).
inline Automaton power_alphabet(const Automaton& a, int n, int cap = kDefaultAlphabetCap) {
  require_valid(a);
  if (n < 1) fail("UnsupportedParameter", "power_alphabet needs n >= 1");
  long long big = 1;
  for (int i = 0; i < n; ++i) {
    big *= a.alphabet;
    if (big > cap)
      fail("OverflowAlphabet", "q^n = " + std::to_string(big) + "+ exceeds cap " + std::to_string(cap));
  }
  const int Q = static_cast<int>(big);
  Automaton p = Automaton::with_states(Q, a.names);
  p.identity = a.identity;
  for (int s = 0; s < a.size(); ++s)
    for (int code = 0; code < Q; ++code) {
      auto [image, rest] = apply_state(a, s, decode_le(code, a.alphabet, n));
      p.set(s, code, encode_le(image, a.alphabet), rest);
    }
  return p;
}

// Minimized union of an automaton with its formal inverses, plus the maps
// needed to resolve signed group words over it.
struct SymmetricClosure {
  Automaton aut;
  std::vector<int> plus;   // original state  -> closure state
  std::vector<int> minus;  // original state's inverse -> closure state
  std::vector<int> inv;    // involution on closure states
  std::optional<int> trivial;
  std::vector<int> generators;  // closure states, trivial one excluded

  std::vector<int> resolve(const GroupWord& g) const {
    std::vector<int> w;
    w.reserve(g.size());
    for (const auto& l : g.letters)
      push_reduced(w, l.sign > 0 ? plus[static_cast<std::size_t>(l.state)]
                                 : minus[static_cast<std::size_t>(l.state)]);
    return w;
  }

  std::vector<int> invert(const std::vector<int>& w) const {
    std::vector<int> r;
    r.reserve(w.size());
    for (std::size_t i = w.size(); i-- > 0;) r.push_back(inv[static_cast<std::size_t>(w[i])]);
    return r;
  }

  // Free reduction: cancel adjacent mutually inverse letters, nothing more.
  void push_reduced(std::vector<int>& w, int t) const {
    if (!w.empty() && inv[static_cast<std::size_t>(w.back())] == t)
      w.pop_back();
    else
      w.push_back(t);
  }

  std::vector<int> reduce(const std::vector<int>& w) const {
    std::vector<int> r;
    r.reserve(w.size());
    for (int t : w) push_reduced(r, t);
    return r;
  }

  // Like reduce, but also drops explicit trivial-state letters; used where
  // words stand for group elements rather than aligned presentations.
  std::vector<int> element_word(const std::vector<int>& w) const {
    std::vector<int> r;
    r.reserve(w.size());
    for (int t : w) {
      if (trivial && t == *trivial) continue;
      push_reduced(r, t);
    }
    return r;
  }

  std::vector<int> concat(const std::vector<int>& g, const std::vector<int>& h) const {
    std::vector<int> r = g;
    for (int t : h) push_reduced(r, t);
    return r;
  }

  std::string format(const std::vector<int>& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ',';
      s += aut.names[static_cast<std::size_t>(w[i])];
    }
    return s;
  }
};

inline SymmetricClosure symmetric_closure(const Automaton& a) {
  const int m = a.size();
  Automaton u = detail::doubled_with_inverses(a);
  Minimized min = minimize_with_map(u);

  SymmetricClosure sc;
  sc.aut = std::move(min.automaton);
  sc.plus.resize(static_cast<std::size_t>(m));
  sc.minus.resize(static_cast<std::size_t>(m));
  sc.inv.assign(static_cast<std::size_t>(sc.aut.size()), -1);
  for (int s = 0; s < m; ++s) {
    sc.plus[static_cast<std::size_t>(s)] = min.state_map[static_cast<std::size_t>(s)];
    sc.minus[static_cast<std::size_t>(s)] = min.state_map[static_cast<std::size_t>(m + s)];
    sc.inv[static_cast<std::size_t>(sc.plus[static_cast<std::size_t>(s)])] =
        sc.minus[static_cast<std::size_t>(s)];
    sc.inv[static_cast<std::size_t>(sc.minus[static_cast<std::size_t>(s)])] =
        sc.plus[static_cast<std::size_t>(s)];
  }
  sc.trivial = sc.aut.identity;
  for (int t = 0; t < sc.aut.size(); ++t)
    if (!sc.trivial || t != *sc.trivial) sc.generators.push_back(t);
  return sc;
}

}  // namespace agx
