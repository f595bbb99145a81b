#pragma once

#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "agx/action.hpp"

namespace agx {

inline constexpr long long kDefaultNaiveBudget = 1ll << 24;

// Exact word problem for group words over a symmetrized automaton.
//
// A word is trivial iff no presentation reachable from it by restrictions
// moves a letter at the root. Presentations keep their length under
// restriction, so the reachable closure of a length-n word is finite (at most
// |states|^n keys) and the search below terminates; a presentation that recurs
// along the way is just a revisit, which makes the circuit case come out
// trivial unless something down the line moves a letter. Verdicts are cached
// per presentation key and shared across queries.
class WordProblem {
public:
  explicit WordProblem(const SymmetricClosure& sc, std::vector<int> letter_order = {})
      : sc_(&sc), order_(std::move(letter_order)) {
    if (order_.empty()) {
      order_.resize(static_cast<std::size_t>(sc.aut.alphabet));
      std::iota(order_.begin(), order_.end(), 0);
    }
  }

  const SymmetricClosure& closure() const { return *sc_; }

  bool is_trivial(const std::vector<int>& word) {
    last_visited_ = 0;
    auto hit = cache_.find(word);
    if (hit != cache_.end()) return hit->second;

    const Automaton& a = sc_->aut;
    std::vector<std::vector<int>> nodes;
    std::vector<int> parent;
    std::unordered_map<std::vector<int>, int, WordKeyHash> index;
    auto fail_chain = [&](int id) {
      for (int v = id; v >= 0; v = parent[static_cast<std::size_t>(v)])
        cache_[nodes[static_cast<std::size_t>(v)]] = false;
    };

    nodes.push_back(word);
    parent.push_back(-1);
    index.emplace(word, 0);
    for (std::size_t at = 0; at < nodes.size(); ++at) {
      for (int x : order_) {
        std::vector<int> child = nodes[at];
        Letter y = cascade_step(a, child, x);
        if (y != x) {
          fail_chain(static_cast<int>(at));
          last_visited_ = nodes.size();
          return false;
        }
        auto c = cache_.find(child);
        if (c != cache_.end()) {
          if (!c->second) {
            fail_chain(static_cast<int>(at));
            last_visited_ = nodes.size();
            return false;
          }
          continue;  // known trivial, closure already mover-free
        }
        auto [it, fresh] = index.emplace(std::move(child), static_cast<int>(nodes.size()));
        if (fresh) {
          nodes.push_back(it->first);
          parent.push_back(static_cast<int>(at));
        }
      }
    }
    for (const auto& k : nodes) cache_[k] = true;
    last_visited_ = nodes.size();
    return true;
  }

  bool are_equal(const std::vector<int>& g, const std::vector<int>& h) {
    return is_trivial(sc_->concat(g, sc_->invert(h)));
  }

  enum class Naive { moved, unknown_at_depth };

  // Semi-decision oracle: evaluate the word on every input up to the given
  // depth. Independent of the cache and of the closure search above.
  Naive is_trivial_naive(const std::vector<int>& word, int depth,
                         long long budget = kDefaultNaiveBudget) const {
    const Automaton& a = sc_->aut;
    long long leaves = 1;
    for (int i = 0; i < depth; ++i) {
      leaves *= a.alphabet;
      if (leaves > budget)
        fail("BudgetExceeded", "naive word-problem scan needs q^depth = " +
                                   std::to_string(leaves) + "+ > budget " +
                                   std::to_string(budget));
    }
    struct Frame {
      std::vector<int> states;
      int depth;
    };
    std::vector<Frame> stack;
    stack.push_back({word, 0});
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (f.depth >= depth) continue;
      for (int x = 0; x < a.alphabet; ++x) {
        std::vector<int> child = f.states;
        if (cascade_step(a, child, x) != x) return Naive::moved;
        stack.push_back({std::move(child), f.depth + 1});
      }
    }
    return Naive::unknown_at_depth;
  }

  // Smallest k <= max_order with g^k trivial.
  std::optional<int> order_probe(const std::vector<int>& word, int max_order) {
    std::vector<int> power;
    for (int k = 1; k <= max_order; ++k) {
      power = sc_->concat(power, word);
      if (is_trivial(power)) return k;
    }
    return std::nullopt;
  }

  std::size_t cache_size() const { return cache_.size(); }
  std::size_t last_visited() const { return last_visited_; }

private:
  const SymmetricClosure* sc_;
  std::vector<int> order_;
  std::unordered_map<std::vector<int>, bool, WordKeyHash> cache_;
  std::size_t last_visited_ = 0;
};

inline bool is_trivial(const Automaton& a, const GroupWord& g) {
  auto sc = symmetric_closure(a);
  WordProblem wp(sc);
  return wp.is_trivial(sc.resolve(g));
}

inline bool are_equal(const Automaton& a, const GroupWord& g, const GroupWord& h) {
  auto sc = symmetric_closure(a);
  WordProblem wp(sc);
  return wp.are_equal(sc.resolve(g), sc.resolve(h));
}

inline std::optional<int> order_probe(const Automaton& a, const GroupWord& g, int max_order) {
  auto sc = symmetric_closure(a);
  WordProblem wp(sc);
  return wp.order_probe(sc.resolve(g), max_order);
}

}  // namespace agx
