#pragma once

#include <random>
#include <string>
#include <vector>

#include "agx/action.hpp"
#include "agx/families.hpp"

namespace agxtest {

using namespace agx;

// Independent evaluation of a state word: apply each state as a standalone
// transducer, rightmost first. Deliberately avoids cascade_step so the two
// paths check each other.
inline WordAction oracle_word_action(const Automaton& a, const std::vector<int>& states,
                                     const Word& w) {
  WordAction r;
  r.image = w;
  r.induced.assign(states.size(), -1);
  for (std::size_t i = states.size(); i-- > 0;) {
    auto [image, rest] = apply_state(a, states[i], r.image);
    r.image = std::move(image);
    r.induced[i] = rest;
  }
  return r;
}

inline std::vector<Word> all_words(int q, int n) {
  std::vector<Word> out;
  long long count = 1;
  for (int i = 0; i < n; ++i) count *= q;
  out.reserve(static_cast<std::size_t>(count));
  for (long long rank = 0; rank < count; ++rank) out.push_back(word_from_rank(rank, q, n));
  return out;
}

inline Word random_word(std::mt19937_64& rng, int q, int len) {
  Word w(static_cast<std::size_t>(len));
  for (auto& x : w) x = static_cast<Letter>(rng() % static_cast<std::uint64_t>(q));
  return w;
}

inline EpWord random_epword(std::mt19937_64& rng, int q) {
  int pre_len = static_cast<int>(rng() % 4);
  int per_len = 1 + static_cast<int>(rng() % 3);
  return EpWord::make(random_word(rng, q, pre_len), random_word(rng, q, per_len));
}

inline GroupWord random_group_word(std::mt19937_64& rng, const Automaton& a, int len) {
  GroupWord g;
  std::vector<int> pool;
  for (int s = 0; s < a.size(); ++s)
    if (!a.identity || s != *a.identity) pool.push_back(s);
  for (int i = 0; i < len; ++i)
    g.letters.push_back({pool[rng() % pool.size()], rng() % 2 ? 1 : -1});
  return g;
}

inline std::vector<Automaton> standard_families() {
  return {build_family("adding"), build_family("omega:0"), build_family("omega:01"),
          build_family("hanoi:3"), build_family("nonpoly_b")};
}

inline GroupWord gw(const Automaton& a, const std::string& text) {
  return GroupWord::parse(text, a.names);
}

}  // namespace agxtest
