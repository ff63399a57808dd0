#pragma once

// Freely reduced words over {x, x^-1, y, y^-1} and the elementary operations
// the rest of the library builds on: reduction, concatenation, inversion,
// letter reversal, exponent sums, cyclic reduction, conjugacy, and the text
// format used at the tool boundary.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primgen/errors.hpp"

namespace primgen {

// Letters are ordered x < x^-1 < y < y^-1. Everything that compares words
// lexicographically (least rotations, conjugator tie breaks) relies on this
// underlying order, so do not reorder the enumerators.
enum class Letter : std::uint8_t { x = 0, X = 1, y = 2, Y = 3 };

constexpr Letter inverse(Letter l) noexcept {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u);
}

constexpr bool positive(Letter l) noexcept {
  return (static_cast<std::uint8_t>(l) & 1u) == 0u;
}

constexpr bool x_generator(Letter l) noexcept {
  return static_cast<std::uint8_t>(l) < 2u;
}

constexpr char letter_char(Letter l) noexcept {
  return "xXyY"[static_cast<std::uint8_t>(l)];
}

namespace detail {

inline void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == inverse(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace detail

// Image of a word under abelianization: the exponent sum of x and of y.
struct ExponentPair {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

inline bool coprime(const ExponentPair& e) {
  return std::gcd(e.x, e.y) == 1;
}

// A freely reduced word. The only way to build one is through reduce(), so
// the reducedness invariant holds everywhere by construction.
class Word {
 public:
  Word() = default;

  static Word reduce(std::vector<Letter> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) detail::push_reduced(out, l);
    return Word(std::move(out));
  }

  const std::vector<Letter>& letters() const noexcept { return ls_; }
  std::size_t size() const noexcept { return ls_.size(); }
  bool empty() const noexcept { return ls_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return ls_[i]; }
  auto begin() const noexcept { return ls_.begin(); }
  auto end() const noexcept { return ls_.end(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Letter> reduced) : ls_(std::move(reduced)) {}

  std::vector<Letter> ls_;
};

inline Word letter_word(Letter l) { return Word::reduce({l}); }
inline Word x_word() { return letter_word(Letter::x); }
inline Word y_word() { return letter_word(Letter::y); }

// l^n as a word; negative n uses the inverse letter.
inline Word letter_power(Letter l, long long n) {
  if (n < 0) {
    l = inverse(l);
    n = -n;
  }
  return Word::reduce(std::vector<Letter>(static_cast<std::size_t>(n), l));
}

inline Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.assign(a.begin(), a.end());
  for (Letter l : b) detail::push_reduced(out, l);
  return Word::reduce(std::move(out));
}

inline Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(inverse(*it));
  }
  return Word::reduce(std::move(out));
}

inline Word pow(const Word& w, long long n) {
  Word base = n < 0 ? invert(w) : w;
  if (n < 0) n = -n;
  Word out;
  for (long long i = 0; i < n; ++i) out = concat(out, base);
  return out;
}

// Letter-by-letter reversal without inverting, so x y^-1 becomes y^-1 x.
// Fixed points of this map are exactly the palindromes.
inline Word psi(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return Word::reduce(std::move(out));
}

inline bool is_palindrome(const Word& w) {
  const auto& ls = w.letters();
  const std::size_t n = ls.size();
  for (std::size_t i = 0; 2 * i < n; ++i) {
    if (ls[i] != ls[n - 1 - i]) return false;
  }
  return true;
}

inline bool is_positive(const Word& w) {
  for (Letter l : w) {
    if (!positive(l)) return false;
  }
  return true;
}

inline ExponentPair exponent_pair(const Word& w) {
  ExponentPair e;
  for (Letter l : w) {
    long long s = positive(l) ? 1 : -1;
    (x_generator(l) ? e.x : e.y) += s;
  }
  return e;
}

inline Word subword(const Word& w, std::size_t from, std::size_t to) {
  detail::check(from <= to && to <= w.size(), "subword: bad range");
  return Word::reduce(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(from),
                                          w.begin() + static_cast<std::ptrdiff_t>(to)));
}

inline Word prefix(const Word& w, std::size_t n) { return subword(w, 0, n); }
inline Word suffix(const Word& w, std::size_t from) { return subword(w, from, w.size()); }

inline bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.letters().front() != inverse(w.letters().back());
}

// w written as conjugator^-1 * core * conjugator with the core cyclically
// reduced. The conjugator is the suffix that gets stripped, kept in its
// original order, so the identity above holds letter for letter.
struct CyclicReduction {
  Word core;
  Word conjugator;
};

inline CyclicReduction cyclically_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == inverse(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  CyclicReduction r;
  r.core = Word::reduce(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                            ls.begin() + static_cast<std::ptrdiff_t>(hi)));
  r.conjugator = Word::reduce(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(hi),
                                                  ls.end()));
  return r;
}

// Left rotation by k of a cyclically reduced word. Rotating a word that is
// not cyclically reduced could cancel, so that case is rejected.
inline Word rotate(const Word& w, std::size_t k) {
  if (!is_cyclically_reduced(w)) {
    throw PreconditionError("rotate: word is not cyclically reduced");
  }
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Letter> out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return Word::reduce(std::move(out));
}

// Booth's least rotation algorithm, linear time. Returns the k for which
// rotate(w, k) is lexicographically least among all rotations.
inline std::size_t least_rotation_index(const Word& w) {
  const auto& s = w.letters();
  const std::size_t n = s.size();
  if (n == 0) return 0;
  auto at = [&](std::size_t i) {
    return static_cast<std::uint8_t>(s[i % n]);
  };
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    std::uint8_t sj = at(j);
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != at(k)) {
      if (sj < at(k)) k = j;
      f[j - k] = -1;
    } else if (i == -1) {
      f[j - k] = 0;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

inline Word least_rotation(const Word& w) {
  if (w.empty()) return w;
  return rotate(w, least_rotation_index(w));
}

// Canonical representative of the conjugacy class: the least rotation of the
// cyclically reduced core.
inline Word canonical_cyclic(const Word& w) {
  return least_rotation(cyclically_reduce(w).core);
}

inline bool are_conjugate(const Word& a, const Word& b) {
  Word ca = cyclically_reduce(a).core;
  Word cb = cyclically_reduce(b).core;
  if (ca.size() != cb.size()) return false;
  if (exponent_pair(ca) != exponent_pair(cb)) return false;
  return least_rotation(ca) == least_rotation(cb);
}

// Length first, then the letter order. This is the order used whenever a
// canonical choice among words is needed.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters() < b.letters();
}

namespace detail {

// Recursive descent for the word grammar:
//   word  := item*            ("1" anywhere denotes the empty word)
//   item  := atom ('^' int)?
//   atom  := 'x' | 'X' | 'y' | 'Y' | '1' | '(' word ')'
// Whitespace is ignored between tokens. Powers may be negative.
struct WordParser {
  std::string_view s;
  std::size_t i = 0;

  static constexpr std::size_t kMaxLetters = 1u << 20;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool at_end() {
    skip_ws();
    return i >= s.size();
  }

  char peek() {
    skip_ws();
    return s[i];
  }

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at position " + std::to_string(i));
  }

  std::vector<Letter> parse_sequence(bool inside_group) {
    std::vector<Letter> out;
    while (!at_end() && peek() != ')') {
      auto item = parse_item();
      if (out.size() + item.size() > kMaxLetters) fail("word too long");
      out.insert(out.end(), item.begin(), item.end());
    }
    if (inside_group) {
      if (at_end()) fail("missing ')'");
      ++i;  // consume ')'
    }
    return out;
  }

  std::vector<Letter> parse_item() {
    auto atom = parse_atom();
    if (!at_end() && peek() == '^') {
      ++i;
      long long n = parse_int();
      std::vector<Letter> base = atom;
      if (n < 0) {
        base.clear();
        for (auto it = atom.rbegin(); it != atom.rend(); ++it) base.push_back(inverse(*it));
        n = -n;
      }
      if (static_cast<unsigned long long>(n) * (base.size() + 1) > kMaxLetters) {
        fail("power too large");
      }
      std::vector<Letter> out;
      out.reserve(base.size() * static_cast<std::size_t>(n));
      for (long long r = 0; r < n; ++r) out.insert(out.end(), base.begin(), base.end());
      return out;
    }
    return atom;
  }

  std::vector<Letter> parse_atom() {
    if (at_end()) fail("expected a letter, '1' or '('");
    char c = peek();
    ++i;
    switch (c) {
      case 'x': return {Letter::x};
      case 'X': return {Letter::X};
      case 'y': return {Letter::y};
      case 'Y': return {Letter::Y};
      case '1': return {};
      case '(': return parse_sequence(true);
      default:
        --i;
        fail(std::string("unexpected character '") + c + "'");
    }
  }

  long long parse_int() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && s[i] == '-') {
      neg = true;
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
      fail("expected an integer exponent");
    }
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > static_cast<long long>(kMaxLetters)) fail("exponent too large");
      ++i;
    }
    return neg ? -v : v;
  }
};

}  // namespace detail

inline Word parse_word(std::string_view text) {
  detail::WordParser p{text};
  auto letters = p.parse_sequence(false);
  if (!p.at_end()) p.fail("unmatched ')'");
  return Word::reduce(std::move(letters));
}

// Letters only; the empty word prints as "1".
inline std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(letter_char(l));
  return out;
}

}  // namespace primgen

template <>
struct std::hash<primgen::Word> {
  std::size_t operator()(const primgen::Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (primgen::Letter l : w) {
      h ^= static_cast<std::uint64_t>(l);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};
