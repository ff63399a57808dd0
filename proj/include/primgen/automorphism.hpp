#pragma once

// The named automorphisms of the rank two free group used throughout:
// inversion of one generator (alpha_x, alpha_y), the swap (beta), inner
// automorphisms, and the two orientations of the Euclidean "basic" moves.
// Automorphisms act on the right, so a sequence [g0, g1] means apply g0
// first and g1 second, and matrices multiply in the same order.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primgen/errors.hpp"
#include "primgen/word.hpp"

namespace primgen {

// Row major, rows are the exponent pairs of the generator images, so
// applying an automorphism multiplies exponent pairs on the right.
struct IntMatrix2 {
  long long a = 1, b = 0;
  long long c = 0, d = 1;

  static constexpr IntMatrix2 identity() { return {}; }

  constexpr long long det() const { return a * d - b * c; }

  friend constexpr IntMatrix2 operator*(const IntMatrix2& l, const IntMatrix2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

inline ExponentPair operator*(const ExponentPair& e, const IntMatrix2& m) {
  return {e.x * m.a + e.y * m.c, e.x * m.b + e.y * m.d};
}

enum class GenKind : std::uint8_t { alpha_x, alpha_y, beta, inner, basic };

// Orientation a sends x to x y^(n+1) and y to x y^n; orientation b gives y
// the larger power instead.
enum class Orientation : std::uint8_t { a, b };

struct AutoGen {
  GenKind kind = GenKind::alpha_x;
  Orientation orient = Orientation::a;  // basic moves only
  long long n = 0;                      // basic moves only, n >= 0
  bool inverted = false;                // basic moves only; the others close up
  Word conj;                            // inner only: w maps to conj^-1 w conj

  static AutoGen alpha_x() { return AutoGen{GenKind::alpha_x}; }
  static AutoGen alpha_y() { return AutoGen{GenKind::alpha_y}; }
  static AutoGen beta() { return AutoGen{GenKind::beta}; }

  static AutoGen inner(Word v) {
    AutoGen g{GenKind::inner};
    g.conj = std::move(v);
    return g;
  }

  static AutoGen basic(long long n, Orientation orient, bool inverted = false) {
    if (n < 0) throw PreconditionError("basic move needs n >= 0");
    AutoGen g{GenKind::basic};
    g.orient = orient;
    g.n = n;
    g.inverted = inverted;
    return g;
  }

  AutoGen inverse() const {
    switch (kind) {
      case GenKind::alpha_x:
      case GenKind::alpha_y:
      case GenKind::beta:
        return *this;  // involutions
      case GenKind::inner:
        return inner(primgen::invert(conj));
      case GenKind::basic: {
        AutoGen g = *this;
        g.inverted = !g.inverted;
        return g;
      }
    }
    throw std::logic_error("unreachable");
  }

  friend bool operator==(const AutoGen&, const AutoGen&) = default;
};

using AutoSeq = std::vector<AutoGen>;

// Images of the generators x and y. The closed forms of the inverted basic
// moves follow by composing: applying basic(n, a) to y (x^-1 y)^n gives back
// x, and to y^-1 x gives back y; symmetrically for orientation b.
inline std::pair<Word, Word> images(const AutoGen& g) {
  switch (g.kind) {
    case GenKind::alpha_x:
      return {letter_word(Letter::X), y_word()};
    case GenKind::alpha_y:
      return {x_word(), letter_word(Letter::Y)};
    case GenKind::beta:
      return {y_word(), x_word()};
    case GenKind::inner: {
      Word vi = invert(g.conj);
      return {concat(concat(vi, x_word()), g.conj),
              concat(concat(vi, y_word()), g.conj)};
    }
    case GenKind::basic: {
      if (!g.inverted) {
        Word big = concat(x_word(), letter_power(Letter::y, g.n + 1));
        Word small = concat(x_word(), letter_power(Letter::y, g.n));
        if (g.orient == Orientation::a) return {big, small};
        return {small, big};
      }
      if (g.orient == Orientation::a) {
        // x -> y (x^-1 y)^n, y -> y^-1 x
        Word block = concat(letter_word(Letter::X), y_word());
        return {concat(y_word(), pow(block, g.n)),
                concat(letter_word(Letter::Y), x_word())};
      }
      // b inverted: x -> x (y^-1 x)^n, y -> x^-1 y
      Word block = concat(letter_word(Letter::Y), x_word());
      return {concat(x_word(), pow(block, g.n)),
              concat(letter_word(Letter::X), y_word())};
    }
  }
  throw std::logic_error("unreachable");
}

namespace detail {

// alpha_x, alpha_y and beta permute the letter alphabet, so they can be
// applied letter for letter without any cancellation appearing.
inline const Letter* letter_table(GenKind k) {
  static constexpr Letter ax[4] = {Letter::X, Letter::x, Letter::y, Letter::Y};
  static constexpr Letter ay[4] = {Letter::x, Letter::X, Letter::Y, Letter::y};
  static constexpr Letter sw[4] = {Letter::y, Letter::Y, Letter::x, Letter::X};
  switch (k) {
    case GenKind::alpha_x: return ax;
    case GenKind::alpha_y: return ay;
    case GenKind::beta: return sw;
    default: return nullptr;
  }
}

constexpr std::size_t kMaxImageLetters = 1u << 26;

}  // namespace detail

inline Word apply_gen(const AutoGen& g, const Word& w) {
  if (const Letter* tab = detail::letter_table(g.kind)) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(tab[static_cast<std::uint8_t>(l)]);
    return Word::reduce(std::move(out));
  }
  if (g.kind == GenKind::inner) {
    return concat(concat(invert(g.conj), w), g.conj);
  }
  auto [ix, iy] = images(g);
  std::size_t per = std::max(ix.size(), iy.size());
  if (w.size() * per > detail::kMaxImageLetters) {
    throw ResourceError("image word would be too large");
  }
  std::vector<Letter> out;
  out.reserve(w.size() * per);
  for (Letter l : w) {
    const Word& img = x_generator(l) ? ix : iy;
    if (positive(l)) {
      for (Letter m : img) detail::push_reduced(out, m);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        detail::push_reduced(out, inverse(*it));
      }
    }
  }
  return Word::reduce(std::move(out));
}

inline Word apply_seq(const AutoSeq& seq, Word w) {
  for (const AutoGen& g : seq) w = apply_gen(g, w);
  return w;
}

inline IntMatrix2 matrix(const AutoGen& g) {
  switch (g.kind) {
    case GenKind::alpha_x: return {-1, 0, 0, 1};
    case GenKind::alpha_y: return {1, 0, 0, -1};
    case GenKind::beta: return {0, 1, 1, 0};
    case GenKind::inner: return IntMatrix2::identity();
    case GenKind::basic:
      if (!g.inverted) {
        if (g.orient == Orientation::a) return {1, g.n + 1, 1, g.n};
        return {1, g.n, 1, g.n + 1};
      }
      if (g.orient == Orientation::a) return {-g.n, g.n + 1, 1, -1};
      return {g.n + 1, -g.n, -1, 1};
  }
  throw std::logic_error("unreachable");
}

inline IntMatrix2 matrix(const AutoSeq& seq) {
  IntMatrix2 m = IntMatrix2::identity();
  for (const AutoGen& g : seq) m = m * matrix(g);
  return m;
}

// Inverse of a composition: reverse the order and invert each factor.
inline AutoSeq invert_seq(const AutoSeq& seq) {
  AutoSeq out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(it->inverse());
  return out;
}

// Text form: "ax", "ay", "b", "inner:<word>", "basicA:<n>", "basicB:<n>".
// Inverted basic moves are an internal convenience and serialize with an
// "inv" marker; they never appear in tool output.
inline std::string format_gen(const AutoGen& g) {
  switch (g.kind) {
    case GenKind::alpha_x: return "ax";
    case GenKind::alpha_y: return "ay";
    case GenKind::beta: return "b";
    case GenKind::inner: return "inner:" + format_word(g.conj);
    case GenKind::basic: {
      std::string s = g.orient == Orientation::a ? "basicA" : "basicB";
      if (g.inverted) s += "inv";
      return s + ":" + std::to_string(g.n);
    }
  }
  throw std::logic_error("unreachable");
}

inline std::string format_autoseq(const AutoSeq& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += format_gen(seq[i]);
  }
  return out;
}

inline AutoGen parse_gen(std::string_view text) {
  if (text == "ax") return AutoGen::alpha_x();
  if (text == "ay") return AutoGen::alpha_y();
  if (text == "b") return AutoGen::beta();
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    std::string_view head = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);
    if (head == "inner") return AutoGen::inner(parse_word(rest));
    bool inverted = false;
    if (head.size() > 3 && head.substr(head.size() - 3) == "inv") {
      inverted = true;
      head = head.substr(0, head.size() - 3);
    }
    if (head == "basicA" || head == "basicB") {
      long long n = 0;
      if (rest.empty()) throw ParseError("basic move needs a parameter");
      for (char c : rest) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError("bad basic move parameter '" + std::string(rest) + "'");
        }
        n = n * 10 + (c - '0');
        if (n > (1ll << 40)) throw ParseError("basic move parameter too large");
      }
      return AutoGen::basic(n, head == "basicA" ? Orientation::a : Orientation::b, inverted);
    }
  }
  throw ParseError("unknown automorphism '" + std::string(text) + "'");
}

inline AutoSeq parse_autoseq(std::string_view text) {
  AutoSeq out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view piece = text.substr(start, comma - start);
    if (piece.empty()) throw ParseError("empty automorphism entry");
    out.push_back(parse_gen(piece));
    if (comma == text.size()) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace primgen
