#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "agx/classify.hpp"
#include "agx/wordproblem.hpp"

namespace agx {

inline constexpr int kDefaultNucleusDepthCap = 16;
inline constexpr int kDefaultNucleusSizeCap = 512;

namespace detail {

// Group elements indexed by a shallow action signature (images of all words of
// a fixed small depth); equal signatures are confirmed with the exact word
// problem before two words are identified.
class ElementIndex {
public:
  ElementIndex(const SymmetricClosure& sc, WordProblem& wp) : sc_(sc), wp_(wp) {
    const int q = sc.aut.alphabet;
    sig_depth_ = 1;
    long long leaves = q;
    while (sig_depth_ < 3 && leaves * q <= 4096) {
      leaves *= q;
      ++sig_depth_;
    }
  }

  std::vector<int> signature(const std::vector<int>& word) const {
    const int q = sc_.aut.alphabet;
    long long leaves = 1;
    for (int i = 0; i < sig_depth_; ++i) leaves *= q;
    std::vector<int> sig;
    sig.reserve(static_cast<std::size_t>(leaves) * static_cast<std::size_t>(sig_depth_));
    for (long long rank = 0; rank < leaves; ++rank) {
      Word w = word_from_rank(rank, q, sig_depth_);
      WordAction act = apply_word(sc_.aut, word, w);
      sig.insert(sig.end(), act.image.begin(), act.image.end());
    }
    return sig;
  }

  // Index of the element the word represents, if already present.
  std::optional<int> find(const std::vector<int>& word, const std::vector<int>& sig) {
    auto it = buckets_.find(sig);
    if (it == buckets_.end()) return std::nullopt;
    for (int id : it->second)
      if (wp_.are_equal(word, words_[static_cast<std::size_t>(id)])) return id;
    return std::nullopt;
  }

  std::optional<int> find(const std::vector<int>& word) { return find(word, signature(word)); }

  int add(std::vector<int> word, std::vector<int> sig) {
    int id = static_cast<int>(words_.size());
    buckets_[std::move(sig)].push_back(id);
    words_.push_back(std::move(word));
    return id;
  }

  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<int>& word(int id) const { return words_[static_cast<std::size_t>(id)]; }
  const std::vector<std::vector<int>>& words() const { return words_; }

private:
  const SymmetricClosure& sc_;
  WordProblem& wp_;
  int sig_depth_ = 1;
  std::vector<std::vector<int>> words_;
  std::unordered_map<std::vector<int>, std::vector<int>, WordKeyHash> buckets_;
};

inline std::vector<int> restrict_element(const SymmetricClosure& sc, const std::vector<int>& word,
                                         Letter x) {
  std::vector<int> states = word;
  cascade_step(sc.aut, states, x);
  return sc.element_word(states);
}

}  // namespace detail

struct NucleusResult {
  bool contracting = false;
  std::string reason;    // set when inconclusive
  int partial_size = 0;  // candidate elements seen when giving up
  int depth_cap = 0;
  int size_cap = 0;
  Automaton nucleus;                            // complete automaton on the nucleus
  std::vector<std::vector<int>> element_words;  // closure word per nucleus state
};

namespace detail {

class NucleusBuilder {
public:
  NucleusBuilder(const SymmetricClosure& sc, int depth_cap, int size_cap)
      : sc_(sc), wp_(sc), index_(sc, wp_), depth_cap_(depth_cap), size_cap_(size_cap) {}

  NucleusResult run() {
    NucleusResult res;
    res.depth_cap = depth_cap_;
    res.size_cap = size_cap_;

    adjoin({});  // the identity
    for (int g : sc_.generators) adjoin({g});
    std::deque<std::pair<int, int>> todo;
    int paired = 0;
    auto enqueue_new = [&] {
      for (; paired < index_.size(); ++paired)
        for (int other = 0; other <= paired; ++other) {
          todo.push_back({paired, other});
          if (other != paired) todo.push_back({other, paired});
        }
    };
    enqueue_new();
    while (!todo.empty()) {
      auto [i, j] = todo.front();
      todo.pop_front();
      if (!explore_pair(i, j, res)) return res;
      enqueue_new();
    }
    shrink();
    if (!verify(res)) return res;
    build(res);
    res.contracting = true;
    return res;
  }

private:
  int adjoin(std::vector<int> word) {
    auto sig = index_.signature(word);
    return index_.add(std::move(word), std::move(sig));
  }

  void give_up(NucleusResult& res, const std::string& why) {
    res.contracting = false;
    res.reason = why;
    res.partial_size = index_.size();
  }

  // Follow the restrictions of the product of two candidates until every
  // branch re-enters the candidate set. New elements lying on or reachable
  // from a cycle recur at arbitrary depth, so they (and their inverses) are
  // adjoined; purely transient ones are discarded.
  bool explore_pair(int i, int j, NucleusResult& res) {
    std::vector<int> root =
        sc_.element_word(sc_.concat(index_.word(i), index_.word(j)));
    auto rsig = index_.signature(root);
    if (index_.find(root, rsig)) return true;

    std::vector<std::vector<int>> words{root};
    std::vector<std::vector<int>> kids{{}};
    std::vector<int> depth{0};
    std::unordered_map<std::vector<int>, std::vector<int>, WordKeyHash> local;
    local[rsig].push_back(0);

    const int q = sc_.aut.alphabet;
    for (std::size_t head = 0; head < words.size(); ++head) {
      if (depth[head] >= depth_cap_) {
        give_up(res, "depth cap " + std::to_string(depth_cap_) +
                         " reached while contracting a pair product");
        return false;
      }
      for (int x = 0; x < q; ++x) {
        std::vector<int> child = restrict_element(sc_, words[head], x);
        auto csig = index_.signature(child);
        if (index_.find(child, csig)) continue;  // absorbed by the candidate set
        int found = -1;
        auto bucket = local.find(csig);
        if (bucket != local.end())
          for (int id : bucket->second)
            if (wp_.are_equal(child, words[static_cast<std::size_t>(id)])) {
              found = id;
              break;
            }
        if (found >= 0) {
          kids[head].push_back(found);
          continue;
        }
        if (index_.size() + static_cast<int>(words.size()) + 1 > size_cap_) {
          give_up(res, "size cap " + std::to_string(size_cap_) + " exceeded");
          return false;
        }
        int id = static_cast<int>(words.size());
        local[std::move(csig)].push_back(id);
        kids[head].push_back(id);
        kids.push_back({});
        words.push_back(std::move(child));
        depth.push_back(depth[head] + 1);
      }
    }

    // Persistent nodes: on or reachable from a cycle of the product's
    // restriction graph.
    const int n = static_cast<int>(words.size());
    SccResult scc = strongly_connected_components(n, kids);
    std::vector<int> comp_size(static_cast<std::size_t>(scc.count), 0);
    for (int v = 0; v < n; ++v) comp_size[static_cast<std::size_t>(scc.comp[static_cast<std::size_t>(v)])]++;
    std::vector<char> cyclic(static_cast<std::size_t>(scc.count), 0);
    for (int v = 0; v < n; ++v) {
      int c = scc.comp[static_cast<std::size_t>(v)];
      if (comp_size[static_cast<std::size_t>(c)] >= 2) cyclic[static_cast<std::size_t>(c)] = 1;
      for (int k : kids[static_cast<std::size_t>(v)])
        if (k == v) cyclic[static_cast<std::size_t>(c)] = 1;
    }
    std::vector<char> keep = cyclic;
    for (int c = scc.count - 1; c >= 0; --c) {  // topological: predecessors first
      if (!keep[static_cast<std::size_t>(c)]) continue;
      for (int v = 0; v < n; ++v)
        if (scc.comp[static_cast<std::size_t>(v)] == c)
          for (int k : kids[static_cast<std::size_t>(v)])
            keep[static_cast<std::size_t>(scc.comp[static_cast<std::size_t>(k)])] = 1;
    }
    for (int v = 0; v < n; ++v) {
      if (!keep[static_cast<std::size_t>(scc.comp[static_cast<std::size_t>(v)])]) continue;
      if (index_.size() + 2 > size_cap_) {
        give_up(res, "size cap " + std::to_string(size_cap_) + " exceeded");
        return false;
      }
      if (!index_.find(words[static_cast<std::size_t>(v)]))
        adjoin(words[static_cast<std::size_t>(v)]);
      std::vector<int> inv = sc_.invert(words[static_cast<std::size_t>(v)]);
      if (!index_.find(inv)) adjoin(std::move(inv));
    }
    return true;
  }

  // The candidate closure can contain transient elements (seen only at
  // bounded depth); the nucleus proper is the part lying on or reachable from
  // cycles of the closure's own restriction graph.
  void shrink() {
    const int n = index_.size();
    const int q = sc_.aut.alphabet;
    std::vector<std::vector<int>> kids(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      for (int x = 0; x < q; ++x) {
        auto child = restrict_element(sc_, index_.word(v), x);
        auto id = index_.find(child);
        if (!id) fail("Internal", "candidate set not closed under restriction");
        kids[static_cast<std::size_t>(v)].push_back(*id);
      }
    SccResult scc = strongly_connected_components(n, kids);
    std::vector<int> comp_size(static_cast<std::size_t>(scc.count), 0);
    for (int v = 0; v < n; ++v) comp_size[static_cast<std::size_t>(scc.comp[static_cast<std::size_t>(v)])]++;
    std::vector<char> keep(static_cast<std::size_t>(scc.count), 0);
    for (int v = 0; v < n; ++v) {
      int c = scc.comp[static_cast<std::size_t>(v)];
      if (comp_size[static_cast<std::size_t>(c)] >= 2) keep[static_cast<std::size_t>(c)] = 1;
      for (int k : kids[static_cast<std::size_t>(v)])
        if (k == v) keep[static_cast<std::size_t>(c)] = 1;
    }
    for (int c = scc.count - 1; c >= 0; --c) {
      if (!keep[static_cast<std::size_t>(c)]) continue;
      for (int v = 0; v < n; ++v)
        if (scc.comp[static_cast<std::size_t>(v)] == c)
          for (int k : kids[static_cast<std::size_t>(v)])
            keep[static_cast<std::size_t>(scc.comp[static_cast<std::size_t>(k)])] = 1;
    }
    kept_.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      kept_[static_cast<std::size_t>(v)] = keep[static_cast<std::size_t>(scc.comp[static_cast<std::size_t>(v)])];
  }

  std::optional<int> find_kept(const std::vector<int>& word) {
    auto id = index_.find(word);
    if (id && kept_[static_cast<std::size_t>(*id)]) return id;
    return std::nullopt;
  }

  // Independent check, not sharing state with the construction loop: every
  // pair product's restrictions must fall into the final set within the depth
  // cap and stay there.
  bool verify(NucleusResult& res) {
    const int q = sc_.aut.alphabet;
    std::vector<int> members;
    for (int v = 0; v < index_.size(); ++v)
      if (kept_[static_cast<std::size_t>(v)]) members.push_back(v);
    for (int i : members)
      for (int j : members) {
        std::vector<std::vector<int>> frontier{
            sc_.element_word(sc_.concat(index_.word(i), index_.word(j)))};
        long long seen = 0;
        for (int d = 0; d <= depth_cap_ && !frontier.empty(); ++d) {
          std::vector<std::vector<int>> next_frontier;
          for (auto& w : frontier) {
            if (find_kept(w)) continue;
            if (d == depth_cap_) {
              give_up(res, "verification found a pair product not contracted at the depth cap");
              return false;
            }
            for (int x = 0; x < q; ++x) next_frontier.push_back(restrict_element(sc_, w, x));
            if (++seen > 4 * static_cast<long long>(size_cap_)) {
              give_up(res, "verification exceeded the size cap");
              return false;
            }
          }
          frontier = std::move(next_frontier);
        }
      }
    return true;
  }

  void build(NucleusResult& res) {
    std::vector<std::vector<int>> elems;
    for (int v = 0; v < index_.size(); ++v)
      if (kept_[static_cast<std::size_t>(v)]) elems.push_back(index_.word(v));
    std::sort(elems.begin(), elems.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    std::vector<std::string> names;
    names.reserve(elems.size());
    for (const auto& w : elems) names.push_back(sc_.format(w));
    Automaton nuc = Automaton::with_states(sc_.aut.alphabet, std::move(names));
    auto locate = [&](const std::vector<int>& w) {
      for (std::size_t k = 0; k < elems.size(); ++k)
        if (wp_.are_equal(w, elems[k])) return static_cast<int>(k);
      fail("Internal", "nucleus not closed under restriction");
    };
    for (std::size_t v = 0; v < elems.size(); ++v)
      for (int x = 0; x < sc_.aut.alphabet; ++x) {
        std::vector<int> states = elems[v];
        Letter y = cascade_step(sc_.aut, states, x);
        nuc.set(static_cast<int>(v), x, y, locate(sc_.element_word(states)));
      }
    for (std::size_t v = 0; v < elems.size(); ++v)
      if (elems[v].empty()) nuc.identity = static_cast<int>(v);
    res.nucleus = std::move(nuc);
    res.element_words = std::move(elems);
    res.partial_size = static_cast<int>(res.element_words.size());
  }

  const SymmetricClosure& sc_;
  WordProblem wp_;
  ElementIndex index_;
  int depth_cap_;
  int size_cap_;
  std::vector<char> kept_;
};

}  // namespace detail

// Nucleus search by pair closure, starting from the symmetrized states plus
// the identity. Outcome is either the complete automaton on the nucleus or an
// explicit inconclusive verdict when a cap is hit; inconclusive is not an
// error.
inline NucleusResult nucleus(const SymmetricClosure& sc, int depth_cap = kDefaultNucleusDepthCap,
                             int size_cap = kDefaultNucleusSizeCap) {
  detail::NucleusBuilder builder(sc, depth_cap, size_cap);
  return builder.run();
}

inline NucleusResult nucleus(const Automaton& a, int depth_cap = kDefaultNucleusDepthCap,
                             int size_cap = kDefaultNucleusSizeCap) {
  auto sc = symmetric_closure(a);
  return nucleus(sc, depth_cap, size_cap);
}

// Distinct elements g|_prefix over all group words g of length <= n in the
// symmetrized generators. Representatives are first witnesses in shortest-lex
// enumeration order; the result is sorted by (length, letters).
inline std::vector<std::vector<int>> restriction_sphere(const SymmetricClosure& sc,
                                                        WordProblem& wp, const Word& prefix,
                                                        int n, int size_cap = 512) {
  detail::ElementIndex index(sc, wp);
  std::vector<int> word;
  auto visit = [&](auto&& self) -> void {
    WordAction act = apply_word(sc.aut, word, prefix);
    auto elem = sc.element_word(act.induced);
    auto sig = index.signature(elem);
    if (!index.find(elem, sig)) {
      if (index.size() >= size_cap)
        fail("SizeCapExceeded",
             "restriction sphere exceeded " + std::to_string(size_cap) + " elements");
      index.add(std::move(elem), std::move(sig));
    }
    if (static_cast<int>(word.size()) == n) return;
    for (int g : sc.generators) {
      if (!word.empty() && sc.inv[static_cast<std::size_t>(word.back())] == g) continue;
      word.push_back(g);
      self(self);
      word.pop_back();
    }
  };
  visit(visit);
  std::vector<std::vector<int>> out = index.words();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

inline std::vector<std::vector<int>> restriction_sphere(const Automaton& a, const Word& prefix,
                                                        int n, int size_cap = 512) {
  auto sc = symmetric_closure(a);
  WordProblem wp(sc);
  return restriction_sphere(sc, wp, prefix, n, size_cap);
}

}  // namespace agx
