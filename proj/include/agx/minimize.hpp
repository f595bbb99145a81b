#pragma once

#include <map>
#include <vector>

#include "agx/automaton.hpp"

namespace agx {

// Moore-style partition refinement to a fixed point: start from output rows,
// split classes by transition-target classes until stable. Class ids are
// numbered by smallest member state, so quotients have a stable order.
inline std::vector<int> behavior_partition(const Automaton& a) {
  const int m = a.size();
  const int q = a.alphabet;
  std::vector<int> cls(static_cast<std::size_t>(m), 0);
  int count = 0;
  {
    std::map<std::vector<int>, int> ids;
    for (int s = 0; s < m; ++s) {
      std::vector<int> row(static_cast<std::size_t>(q));
      for (int x = 0; x < q; ++x) row[static_cast<std::size_t>(x)] = a.out(s, x);
      auto [it, fresh] = ids.emplace(std::move(row), count);
      if (fresh) ++count;
      cls[static_cast<std::size_t>(s)] = it->second;
    }
  }
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next_cls(static_cast<std::size_t>(m));
    int next_count = 0;
    for (int s = 0; s < m; ++s) {
      std::vector<int> sig(static_cast<std::size_t>(q) + 1);
      sig[0] = cls[static_cast<std::size_t>(s)];
      for (int x = 0; x < q; ++x)
        sig[static_cast<std::size_t>(x) + 1] = cls[static_cast<std::size_t>(a.next(s, x))];
      auto [it, fresh] = ids.emplace(std::move(sig), next_count);
      if (fresh) ++next_count;
      next_cls[static_cast<std::size_t>(s)] = it->second;
    }
    if (next_count == count) return cls;
    cls = std::move(next_cls);
    count = next_count;
  }
}

struct Minimized {
  Automaton automaton;
  std::vector<int> state_map;  // old state -> new state
};

inline Minimized minimize_with_map(const Automaton& a) {
  require_valid(a);
  auto cls = behavior_partition(a);
  int count = 0;
  for (int c : cls) count = std::max(count, c + 1);

  std::vector<int> rep(static_cast<std::size_t>(count), -1);
  for (int s = 0; s < a.size(); ++s) {
    int c = cls[static_cast<std::size_t>(s)];
    if (rep[static_cast<std::size_t>(c)] < 0) rep[static_cast<std::size_t>(c)] = s;
  }

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) names.push_back(a.names[static_cast<std::size_t>(rep[static_cast<std::size_t>(c)])]);
  Automaton b = Automaton::with_states(a.alphabet, std::move(names));
  for (int c = 0; c < count; ++c) {
    int s = rep[static_cast<std::size_t>(c)];
    for (int x = 0; x < a.alphabet; ++x)
      b.set(c, x, a.out(s, x), cls[static_cast<std::size_t>(a.next(s, x))]);
  }
  for (int c = 0; c < count; ++c) {
    bool trivial = true;
    for (int x = 0; x < a.alphabet && trivial; ++x)
      trivial = b.out(c, x) == x && b.next(c, x) == c;
    if (trivial) {
      b.identity = c;
      break;
    }
  }
  return {std::move(b), std::move(cls)};
}

inline Automaton minimize(const Automaton& a) { return minimize_with_map(a).automaton; }

}  // namespace agx
