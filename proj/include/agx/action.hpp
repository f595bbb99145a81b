#pragma once

#include <map>
#include <utility>
#include <vector>

#include "agx/transforms.hpp"

namespace agx {

// One step of the cascade evaluation of a word s1...sn on a letter: feed x
// through the word right to left; every position is replaced by its
// restriction, so after a full input the vector holds the induced
// presentation of g|_w letter for letter.
inline Letter cascade_step(const Automaton& a, std::vector<int>& states, Letter x) {
  Letter t = x;
  for (std::size_t i = states.size(); i-- > 0;) {
    const int s = states[i];
    states[i] = a.next(s, t);
    t = a.out(s, t);
  }
  return t;
}

struct WordAction {
  Word image;
  std::vector<int> induced;  // same length as the applied word
};

inline WordAction apply_word(const Automaton& a, std::vector<int> states, const Word& input) {
  check_letters(input, a.alphabet);
  WordAction r;
  r.image.reserve(input.size());
  for (Letter x : input) r.image.push_back(cascade_step(a, states, x));
  r.induced = std::move(states);
  return r;
}

// g(u v^inf): consume the preperiod, then pump the period until the induced
// state tuple repeats. The repeating block cycle is the output period, so the
// result period length divides |v| times the detected cycle length.
inline EpWord act_epword(const Automaton& a, std::vector<int> states, const EpWord& w) {
  check_letters(w.pre, a.alphabet);
  check_letters(w.per, a.alphabet);
  Word out_pre;
  out_pre.reserve(w.pre.size());
  for (Letter x : w.pre) out_pre.push_back(cascade_step(a, states, x));

  std::map<std::vector<int>, int> seen;
  std::vector<Word> blocks;
  int first = 0;
  for (;;) {
    auto it = seen.find(states);
    if (it != seen.end()) {
      first = it->second;
      break;
    }
    seen.emplace(states, static_cast<int>(blocks.size()));
    Word block;
    block.reserve(w.per.size());
    for (Letter x : w.per) block.push_back(cascade_step(a, states, x));
    blocks.push_back(std::move(block));
  }
  for (int i = 0; i < first; ++i)
    out_pre.insert(out_pre.end(), blocks[static_cast<std::size_t>(i)].begin(),
                   blocks[static_cast<std::size_t>(i)].end());
  Word period;
  for (std::size_t i = static_cast<std::size_t>(first); i < blocks.size(); ++i)
    period.insert(period.end(), blocks[i].begin(), blocks[i].end());
  return EpWord::make(std::move(out_pre), std::move(period));
}

struct GroupAction {
  Word image;
  GroupWord induced;  // positive word over the closure automaton's states
};

inline GroupAction apply_group_word(const SymmetricClosure& sc, const GroupWord& g,
                                    const Word& w) {
  WordAction r = apply_word(sc.aut, sc.resolve(g), w);
  GroupAction out;
  out.image = std::move(r.image);
  out.induced.letters.reserve(r.induced.size());
  for (int s : r.induced) out.induced.letters.push_back({s, 1});
  return out;
}

inline EpWord act_epword(const SymmetricClosure& sc, const GroupWord& g, const EpWord& w) {
  return act_epword(sc.aut, sc.resolve(g), w);
}

}  // namespace agx
