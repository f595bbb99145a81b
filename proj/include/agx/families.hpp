#pragma once

#include <string>
#include <vector>

#include "agx/minimize.hpp"

namespace agx {

inline constexpr int kHanoiMinPegs = 3;
inline constexpr int kHanoiMaxPegs = 8;

// Built-in generating automata: the binary adding machine, the tower
// extensions omega(v) over a binary word v, the peg-swapping machines
// hanoi(k), and the exponential-activity example nonpoly_b.
struct FamilySpec {
  std::string tag;  // "adding" | "omega" | "hanoi" | "nonpoly_b"
  Word bits;        // omega parameter
  int pegs = 0;     // hanoi parameter

  static FamilySpec parse(const std::string& text) {
    FamilySpec spec;
    std::string param;
    auto colon = text.find(':');
    if (colon == std::string::npos) {
      spec.tag = text;
    } else {
      spec.tag = text.substr(0, colon);
      param = text.substr(colon + 1);
    }
    if (spec.tag == "adding" || spec.tag == "nonpoly_b") {
      if (!param.empty())
        fail("UnsupportedParameter", "family '" + spec.tag + "' takes no parameter");
    } else if (spec.tag == "omega") {
      for (char ch : param) {
        if (ch != '0' && ch != '1')
          fail("UnsupportedParameter", "omega parameter must be a binary word");
        spec.bits.push_back(ch - '0');
      }
    } else if (spec.tag == "hanoi") {
      if (param.empty() || param.find_first_not_of("0123456789") != std::string::npos)
        fail("UnsupportedParameter", "hanoi parameter must be an integer");
      spec.pegs = std::stoi(param);
      if (spec.pegs < kHanoiMinPegs || spec.pegs > kHanoiMaxPegs)
        fail("UnsupportedParameter",
             "hanoi needs between " + std::to_string(kHanoiMinPegs) + " and " +
                 std::to_string(kHanoiMaxPegs) + " pegs");
    } else {
      fail("UnsupportedParameter", "unknown family '" + spec.tag + "'");
    }
    return spec;
  }

  std::string to_string() const {
    if (tag == "omega") {
      std::string out = tag + ":";
      for (Letter b : bits) out += static_cast<char>('0' + b);
      return out;
    }
    if (tag == "hanoi") return tag + ":" + std::to_string(pegs);
    return tag;
  }
};

namespace detail {

inline Automaton build_omega(const Word& bits) {
  const int k = static_cast<int>(bits.size());
  std::vector<std::string> names{"e", "a"};
  for (int i = 1; i <= k; ++i) names.push_back("a" + std::to_string(i));
  Automaton a = Automaton::with_states(2, std::move(names));
  a.identity = 0;
  a.set(0, 0, 0, 0);
  a.set(0, 1, 1, 0);
  a.set(1, 0, 1, 0);  // carry resolved: emit 1, done
  a.set(1, 1, 0, 1);  // carry continues
  for (int i = 1; i <= k; ++i) {
    Letter keep = bits[static_cast<std::size_t>(i - 1)];
    a.set(1 + i, keep, keep, 1 + i);
    a.set(1 + i, 1 - keep, 1 - keep, i);  // one rung down; a0 is a itself
  }
  return a;
}

inline Automaton build_hanoi(int k) {
  std::vector<std::string> names{"e"};
  std::vector<std::pair<int, int>> swaps;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      swaps.push_back({i, j});
      names.push_back("a_(" + std::to_string(i) + std::to_string(j) + ")");
    }
  Automaton a = Automaton::with_states(k, std::move(names));
  a.identity = 0;
  for (int x = 0; x < k; ++x) a.set(0, x, x, 0);
  for (std::size_t t = 0; t < swaps.size(); ++t) {
    int s = static_cast<int>(t) + 1;
    auto [i, j] = swaps[t];
    for (int x = 0; x < k; ++x) a.set(s, x, x, s);
    a.set(s, i, j, 0);
    a.set(s, j, i, 0);
  }
  return a;
}

inline Automaton build_nonpoly_b() {
  Automaton a =
      Automaton::with_states(2, {"e", "b", "b^-1", "b^2", "b^-2", "c"});
  a.identity = 0;
  enum { E, B, Bi, B2, B2i, C };
  a.set(E, 0, 0, E);
  a.set(E, 1, 1, E);
  a.set(B, 0, 1, Bi);
  a.set(B, 1, 0, B2);
  a.set(Bi, 0, 1, B2i);
  a.set(Bi, 1, 0, B);
  a.set(B2, 0, 0, B);
  a.set(B2, 1, 1, B);
  a.set(B2i, 0, 0, Bi);
  a.set(B2i, 1, 1, Bi);
  a.set(C, 0, 0, C);
  a.set(C, 1, 1, B);
  return a;
}

}  // namespace detail

inline Automaton build_family(const FamilySpec& spec) {
  Automaton a;
  if (spec.tag == "adding")
    a = detail::build_omega({});
  else if (spec.tag == "omega")
    a = detail::build_omega(spec.bits);
  else if (spec.tag == "hanoi")
    a = detail::build_hanoi(spec.pegs);
  else if (spec.tag == "nonpoly_b")
    a = detail::build_nonpoly_b();
  else
    fail("UnsupportedParameter", "unknown family '" + spec.tag + "'");
  require_valid(a);
  return minimize(a);
}

inline Automaton build_family(const std::string& text) {
  return build_family(FamilySpec::parse(text));
}

}  // namespace agx
