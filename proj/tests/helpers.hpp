#pragma once

// Small shared conveniences for the test binaries: terse word literals and
// deterministic random word generators. Every generator takes the engine by
// reference so each test section controls its own seed.

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "primgen/oracle.hpp"
#include "primgen/word.hpp"

namespace primgen::testing {

inline Word W(std::string_view text) { return parse_word(text); }

inline std::string S(const Word& w) { return format_word(w); }

// Uniform random freely reduced word with exactly len letters.
inline Word random_reduced(std::mt19937& rng, std::size_t len) {
  std::vector<Letter> out;
  out.reserve(len);
  std::uniform_int_distribution<int> first(0, 3);
  std::uniform_int_distribution<int> rest(0, 2);
  for (std::size_t i = 0; i < len; ++i) {
    if (out.empty()) {
      out.push_back(static_cast<Letter>(first(rng)));
    } else {
      int banned = static_cast<int>(inverse(out.back()));
      int k = rest(rng);
      if (k >= banned) ++k;
      out.push_back(static_cast<Letter>(k));
    }
  }
  return Word::reduce(std::move(out));
}

// Conjugate of w by a random word of length at most max_conj.
inline Word random_conjugate(std::mt19937& rng, const Word& w,
                             std::size_t max_conj) {
  std::uniform_int_distribution<std::size_t> len(0, max_conj);
  Word u = random_reduced(rng, len(rng));
  return concat(concat(invert(u), w), u);
}

// All freely reduced words of length at most max_len, shortest level first;
// within a level the order is lexicographic in the letter order x < X < y < Y.
inline std::vector<Word> reduced_words_up_to(std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto level = all_reduced_words(len);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// All coprime pairs (x, y) with 1 <= x < y <= bound.
inline std::vector<std::pair<long long, long long>> coprime_pairs_below(
    long long bound) {
  std::vector<std::pair<long long, long long>> out;
  for (long long x = 1; x <= bound; ++x) {
    for (long long y = x + 1; y <= bound; ++y) {
      if (std::gcd(x, y) == 1) out.emplace_back(x, y);
    }
  }
  return out;
}

// All coprime pairs (x, y), signs and order free, with |x|, |y| <= bound,
// excluding (0, 0). Includes the axis pairs (0, ±1) and (±1, 0).
inline std::vector<std::pair<long long, long long>> coprime_pairs_signed(
    long long bound) {
  std::vector<std::pair<long long, long long>> out;
  for (long long x = -bound; x <= bound; ++x) {
    for (long long y = -bound; y <= bound; ++y) {
      if (x == 0 && y == 0) continue;
      if (std::gcd(std::llabs(x), std::llabs(y)) == 1) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace primgen::testing
