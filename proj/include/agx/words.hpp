#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "agx/error.hpp"

namespace agx {

using Letter = int;
using Word = std::vector<Letter>;  // finite word over {0,...,q-1}

inline Word word_from_digits(const std::string& text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9')
      fail("BadWord", "word may only contain digits 0-9, got '" + text + "'");
    w.push_back(c - '0');
  }
  return w;
}

inline std::string word_to_string(const Word& w, int alphabet_size = 10) {
  std::string s;
  if (alphabet_size <= 10) {
    for (Letter x : w) s += static_cast<char>('0' + x);
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += '.';
      s += std::to_string(w[i]);
    }
  }
  return s;
}

inline void check_letters(const Word& w, int q) {
  for (Letter x : w)
    if (x < 0 || x >= q)
      fail("LetterOutOfRange",
           "letter " + std::to_string(x) + " outside alphabet of size " + std::to_string(q));
}

// Lexicographic rank of a fixed-length word (big-endian base q).
inline long long word_rank(const Word& w, int q) {
  long long r = 0;
  for (Letter x : w) r = r * q + x;
  return r;
}

inline Word word_from_rank(long long rank, int q, int n) {
  Word w(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(rank % q);
    rank /= q;
  }
  return w;
}

// Block code used by power-of-alphabet automata: x1 + x2*q + x3*q^2 + ...
inline int encode_le(const Word& w, int q) {
  int code = 0;
  for (std::size_t i = w.size(); i-- > 0;) code = code * q + w[i];
  return code;
}

inline Word decode_le(int code, int q, int n) {
  Word w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)] = code % q;
    code /= q;
  }
  return w;
}

struct WordKeyHash {
  std::size_t operator()(const std::vector<int>& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : w) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Signed generator letter of a group word; sign -1 means the formal inverse.
struct GroupLetter {
  int state = 0;
  int sign = 1;
  friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
};

struct GroupWord {
  std::vector<GroupLetter> letters;

  std::size_t size() const { return letters.size(); }

  GroupWord inverse() const {
    GroupWord r;
    r.letters.reserve(letters.size());
    for (std::size_t i = letters.size(); i-- > 0;)
      r.letters.push_back({letters[i].state, -letters[i].sign});
    return r;
  }

  // Comma-separated state names, "-" prefix for the inverse: "a,a,-a_1".
  // The empty string is the identity.
  static GroupWord parse(const std::string& text, const std::vector<std::string>& names) {
    GroupWord g;
    std::size_t pos = 0;
    if (text.empty()) return g;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
      while (!token.empty() && token.front() == ' ') token.erase(token.begin());
      while (!token.empty() && token.back() == ' ') token.pop_back();
      int sign = 1;
      if (!token.empty() && token.front() == '-') {
        sign = -1;
        token.erase(token.begin());
      }
      if (token.empty()) fail("BadWord", "empty generator token in '" + text + "'");
      auto it = std::find(names.begin(), names.end(), token);
      if (it == names.end()) fail("UnknownGenerator", "no state named '" + token + "'");
      g.letters.push_back({static_cast<int>(it - names.begin()), sign});
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return g;
  }

  std::string format(const std::vector<std::string>& names) const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) s += ',';
      if (letters[i].sign < 0) s += '-';
      s += names[static_cast<std::size_t>(letters[i].state)];
    }
    return s;
  }
};

// Eventually periodic word u v^inf in canonical form: the period is primitive
// and the preperiod is shortest (trailing letters equal to the period's last
// letter are absorbed by rotating the period).
struct EpWord {
  Word pre;
  Word per;

  static EpWord make(Word pre_part, Word per_part) {
    if (per_part.empty()) fail("BadWord", "eventually periodic word needs a nonempty period");
    const std::size_t n = per_part.size();
    for (std::size_t p = 1; p <= n; ++p) {
      if (n % p) continue;
      bool root = true;
      for (std::size_t i = p; i < n && root; ++i) root = per_part[i] == per_part[i - p];
      if (root) {
        per_part.resize(p);
        break;
      }
    }
    while (!pre_part.empty() && pre_part.back() == per_part.back()) {
      pre_part.pop_back();
      std::rotate(per_part.begin(), per_part.end() - 1, per_part.end());
    }
    EpWord w;
    w.pre = std::move(pre_part);
    w.per = std::move(per_part);
    return w;
  }

  Letter at(std::size_t i) const {
    return i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()];
  }

  Word prefix(std::size_t n) const {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = at(i);
    return w;
  }

  friend bool operator==(const EpWord&, const EpWord&) = default;
  friend auto operator<=>(const EpWord&, const EpWord&) = default;
};

inline EpWord ep_prepend(const Word& prefix, const EpWord& w) {
  Word pre = prefix;
  pre.insert(pre.end(), w.pre.begin(), w.pre.end());
  return EpWord::make(std::move(pre), w.per);
}

inline std::string ep_to_string(const EpWord& w, int alphabet_size = 10) {
  return word_to_string(w.pre, alphabet_size) + "(" + word_to_string(w.per, alphabet_size) +
         ")^inf";
}

}  // namespace agx
