#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agx/words.hpp"

namespace agx {

struct Alphabet {
  int size = 2;
};

inline void check_alphabet(int size) {
  if (size < 2) fail("BadAlphabet", "alphabet needs at least two letters");
}

// Invertible Mealy automaton over {0,...,alphabet-1}. Row s of output_tab is
// the output permutation pi(s,.), row s of next_tab the transition targets
// lambda(s,.). States double as generators of the generated group.
struct Automaton {
  int alphabet = 2;
  std::vector<std::string> names;
  std::vector<int> output_tab;
  std::vector<int> next_tab;
  std::optional<int> identity;  // state known to act trivially

  int size() const { return static_cast<int>(names.size()); }

  int out(int s, int x) const {
    return output_tab[static_cast<std::size_t>(s) * alphabet + static_cast<std::size_t>(x)];
  }
  int next(int s, int x) const {
    return next_tab[static_cast<std::size_t>(s) * alphabet + static_cast<std::size_t>(x)];
  }

  // Define the arrow s --x|image--> target.
  void set(int s, int x, int image, int target) {
    output_tab[static_cast<std::size_t>(s) * alphabet + static_cast<std::size_t>(x)] = image;
    next_tab[static_cast<std::size_t>(s) * alphabet + static_cast<std::size_t>(x)] = target;
  }

  int state_index(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }

  static Automaton with_states(int q, std::vector<std::string> state_names) {
    Automaton a;
    a.alphabet = q;
    a.names = std::move(state_names);
    a.output_tab.assign(a.names.size() * static_cast<std::size_t>(q), -1);
    a.next_tab.assign(a.names.size() * static_cast<std::size_t>(q), -1);
    return a;
  }
};

struct ValidationIssue {
  std::string kind;  // InvalidOutputRow | InvalidTransition | BadAlphabet | BadShape
  std::string state;
  int letter = -1;
};

struct ValidationReport {
  bool valid = false;
  std::vector<ValidationIssue> issues;
  std::optional<std::string> trivial_state;      // behaviorally trivial state, if any
  bool identity_claim_ok = true;                 // declared identity really acts trivially
  std::vector<std::string> source_only_states;   // no arrows from any other state
};

inline std::vector<int> reachable_from(const Automaton& a, int state) {
  std::vector<char> seen(static_cast<std::size_t>(a.size()), 0);
  std::vector<int> stack{state}, out;
  seen[static_cast<std::size_t>(state)] = 1;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    out.push_back(s);
    for (int x = 0; x < a.alphabet; ++x) {
      int d = a.next(s, x);
      if (!seen[static_cast<std::size_t>(d)]) {
        seen[static_cast<std::size_t>(d)] = 1;
        stack.push_back(d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A state acts trivially iff every state reachable from it has the identity
// output row.
inline bool acts_trivially(const Automaton& a, int state) {
  for (int s : reachable_from(a, state))
    for (int x = 0; x < a.alphabet; ++x)
      if (a.out(s, x) != x) return false;
  return true;
}

inline ValidationReport validate_automaton(const Automaton& a) {
  ValidationReport r;
  const int m = a.size();
  const int q = a.alphabet;
  if (q < 2) {
    r.issues.push_back({"BadAlphabet", "", -1});
    return r;
  }
  const std::size_t want = static_cast<std::size_t>(m) * static_cast<std::size_t>(q);
  if (a.output_tab.size() != want || a.next_tab.size() != want || m == 0) {
    r.issues.push_back({"BadShape", "", -1});
    return r;
  }
  for (int s = 0; s < m; ++s) {
    std::vector<char> hit(static_cast<std::size_t>(q), 0);
    bool row_ok = true;
    for (int x = 0; x < q; ++x) {
      int y = a.out(s, x);
      if (y < 0 || y >= q || hit[static_cast<std::size_t>(y)]) {
        row_ok = false;
        break;
      }
      hit[static_cast<std::size_t>(y)] = 1;
    }
    if (!row_ok) r.issues.push_back({"InvalidOutputRow", a.names[static_cast<std::size_t>(s)], -1});
    for (int x = 0; x < q; ++x) {
      int d = a.next(s, x);
      if (d < 0 || d >= m)
        r.issues.push_back({"InvalidTransition", a.names[static_cast<std::size_t>(s)], x});
    }
  }
  if (a.identity && (*a.identity < 0 || *a.identity >= m))
    r.issues.push_back({"InvalidTransition", "identity", -1});
  if (!r.issues.empty()) return r;

  r.valid = true;
  for (int s = 0; s < m; ++s) {
    if (acts_trivially(a, s)) {
      r.trivial_state = a.names[static_cast<std::size_t>(s)];
      break;
    }
  }
  if (a.identity) r.identity_claim_ok = acts_trivially(a, *a.identity);
  if (!r.identity_claim_ok) {
    r.valid = false;
    r.issues.push_back({"BadIdentityClaim", a.names[static_cast<std::size_t>(*a.identity)], -1});
  }

  std::vector<char> has_incoming(static_cast<std::size_t>(m), 0);
  for (int s = 0; s < m; ++s)
    for (int x = 0; x < q; ++x) {
      int d = a.next(s, x);
      if (d != s) has_incoming[static_cast<std::size_t>(d)] = 1;
    }
  for (int s = 0; s < m; ++s)
    if (!has_incoming[static_cast<std::size_t>(s)])
      r.source_only_states.push_back(a.names[static_cast<std::size_t>(s)]);
  return r;
}

inline void require_valid(const Automaton& a) {
  auto r = validate_automaton(a);
  if (r.valid) return;
  const auto& i = r.issues.front();
  fail(i.kind, "invalid automaton at state '" + i.state + "'" +
                   (i.letter >= 0 ? ", letter " + std::to_string(i.letter) : ""));
}

// Runs the state on a finite word; returns the image and the final state
// (the restriction s|_w).
inline std::pair<Word, int> apply_state(const Automaton& a, int state, const Word& w) {
  check_letters(w, a.alphabet);
  Word image;
  image.reserve(w.size());
  int s = state;
  for (Letter x : w) {
    image.push_back(a.out(s, x));
    s = a.next(s, x);
  }
  return {image, s};
}

// Restriction of the automaton to a transition-closed subset of states.
inline Automaton subautomaton(const Automaton& a, const std::vector<std::string>& keep) {
  std::vector<int> pick;
  std::vector<int> remap(static_cast<std::size_t>(a.size()), -1);
  for (const auto& name : keep) {
    int s = a.state_index(name);
    if (s < 0) fail("UnknownGenerator", "no state named '" + name + "'");
    if (remap[static_cast<std::size_t>(s)] != -1) continue;
    remap[static_cast<std::size_t>(s)] = static_cast<int>(pick.size());
    pick.push_back(s);
  }
  Automaton b = Automaton::with_states(a.alphabet, {});
  for (int s : pick) b.names.push_back(a.names[static_cast<std::size_t>(s)]);
  b.output_tab.assign(b.names.size() * static_cast<std::size_t>(a.alphabet), -1);
  b.next_tab.assign(b.names.size() * static_cast<std::size_t>(a.alphabet), -1);
  for (std::size_t i = 0; i < pick.size(); ++i) {
    for (int x = 0; x < a.alphabet; ++x) {
      int d = a.next(pick[i], x);
      if (remap[static_cast<std::size_t>(d)] < 0)
        fail("NotClosed", "state set is not closed under transitions: '" +
                              a.names[static_cast<std::size_t>(pick[i])] + "' reaches '" +
                              a.names[static_cast<std::size_t>(d)] + "'");
      b.set(static_cast<int>(i), x, a.out(pick[i], x), remap[static_cast<std::size_t>(d)]);
    }
  }
  if (a.identity && remap[static_cast<std::size_t>(*a.identity)] >= 0)
    b.identity = remap[static_cast<std::size_t>(*a.identity)];
  return b;
}

}  // namespace agx
