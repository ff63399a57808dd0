#pragma once

// Euclidean construction of a primitive word for a coprime exponent pair.
// The descent shrinks (X, Y) with 1 <= X <= Y by replacing it with the
// ordered pair {Y mod X, X - (Y mod X)}, recording which basic move undoes
// the step, until X reaches 1. Replaying the recorded moves in reverse on
// the terminal word x y^Ys produces a primitive word whose exponent pair is
// exactly (X, Y).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "primgen/automorphism.hpp"
#include "primgen/errors.hpp"
#include "primgen/word.hpp"

namespace primgen {

// First branch: the remainder r = Y mod X is the smaller half (r <= X - r)
// and the undo move is basic(n, a). Second branch: the other way round.
enum class Branch : std::uint8_t { first, second };

struct DescentStep {
  ExponentPair pair_in;
  ExponentPair pair_out;
  long long n = 0;  // floor(Y / X), the parameter of the recorded move
  Branch branch = Branch::first;
  AutoGen phi;  // basic move with pair_out * matrix(phi) == pair_in
};

struct DescentTrace {
  std::vector<DescentStep> steps;
  ExponentPair terminal;  // (1, Ys), or (0, 1) for the pair of y itself
  Word seed_word;         // x y^Ys, or y for the terminal pair (0, 1)
};

namespace detail {

inline void require_coprime(long long x, long long y) {
  long long g = std::gcd(x, y);
  if (g != 1) {
    throw NonCoprimeError("gcd(" + std::to_string(x) + "," + std::to_string(y) +
                          ")=" + std::to_string(g) + ", no primitive element has this pair");
  }
}

}  // namespace detail

inline DescentTrace descend(long long x, long long y) {
  detail::require_coprime(x, y);
  if (x < 1 || y <= x) {
    throw PreconditionError("descend needs 1 <= X < Y");
  }
  DescentTrace t;
  long long cx = x;
  long long cy = y;
  while (cx >= 2) {
    long long r = cy % cx;  // in (0, cx) because the pair is coprime
    long long s = cx - r;
    long long n = cy / cx;
    DescentStep step;
    step.pair_in = {cx, cy};
    step.n = n;
    if (r <= s) {
      step.branch = Branch::first;
      step.phi = AutoGen::basic(n, Orientation::a);
      cx = r;
      cy = s;
    } else {
      step.branch = Branch::second;
      step.phi = AutoGen::basic(n, Orientation::b);
      cx = s;
      cy = r;
    }
    step.pair_out = {cx, cy};
    detail::check(std::gcd(cx, cy) == 1 && 1 <= cx && cx <= cy,
                  "descend: intermediate pair left the admissible region");
    detail::check(step.pair_out * matrix(step.phi) == step.pair_in,
                  "descend: recorded move does not undo the step");
    t.steps.push_back(step);
  }
  t.terminal = {cx, cy};
  t.seed_word = concat(x_word(), letter_power(Letter::y, cy));
  return t;
}

// How words are flipped into the other three quadrants and transposed. The
// flags describe the action alpha_x^gamma alpha_y^delta beta^epsilon in that
// evaluation order; when a swap is coming the sign flips target the
// coordinates the swap will move into place. The core pair is
// (min |X|, max |Y|).
struct SignNormalization {
  int gamma = 0;
  int delta = 0;
  int epsilon = 0;  // set exactly when |X| > |Y|
  ExponentPair core_pair;
};

namespace detail {

inline SignNormalization sign_normalization(long long x, long long y) {
  SignNormalization f;
  f.core_pair = {std::min(std::llabs(x), std::llabs(y)),
                 std::max(std::llabs(x), std::llabs(y))};
  f.epsilon = std::llabs(x) > std::llabs(y) ? 1 : 0;
  if (f.epsilon) {
    f.gamma = y < 0 ? 1 : 0;
    f.delta = x < 0 ? 1 : 0;
  } else {
    f.gamma = x < 0 ? 1 : 0;
    f.delta = y < 0 ? 1 : 0;
  }
  return f;
}

}  // namespace detail

struct Construction {
  Word p;
  SignNormalization norm;
  DescentTrace trace;
};

namespace detail {

constexpr long long kMaxConstructPair = 2'000'000;

inline DescentTrace degenerate_trace() {
  DescentTrace t;
  t.terminal = {0, 1};
  t.seed_word = y_word();
  return t;
}

}  // namespace detail

// The primitive word for a coprime pair with 1 <= X <= Y, before any sign or
// swap normalization. Produced by replaying the descent moves, last step
// first, on the terminal seed.
inline Word construct_core(long long x, long long y) {
  detail::require_coprime(x, y);
  if (x < 1 || y < x) throw PreconditionError("construct_core needs 1 <= X <= Y");
  if (x == 1 && y == 1) return concat(x_word(), y_word());
  DescentTrace t = descend(x, y);
  Word w = t.seed_word;
  for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) {
    w = apply_gen(it->phi, w);
  }
  detail::check(exponent_pair(w) == ExponentPair{x, y},
                "construct_core: exponent pair mismatch");
  return w;
}

inline Construction construct(long long x, long long y) {
  detail::require_coprime(x, y);
  if (std::llabs(x) + std::llabs(y) > detail::kMaxConstructPair) {
    throw ResourceError("construct: |X| + |Y| letters would exceed the size guard");
  }
  long long m = std::min(std::llabs(x), std::llabs(y));
  long long big = std::max(std::llabs(x), std::llabs(y));

  Construction c;
  c.norm = detail::sign_normalization(x, y);
  if (m == 0) {
    // Pair of a conjugate of y (or x after the swap below).
    c.trace = detail::degenerate_trace();
    c.p = y_word();
  } else if (m == 1 && big == 1) {
    c.trace = detail::degenerate_trace();
    c.trace.terminal = {1, 1};
    c.trace.seed_word = concat(x_word(), y_word());
    c.p = c.trace.seed_word;
  } else {
    c.trace = descend(m, big);
    c.p = c.trace.seed_word;
    for (auto it = c.trace.steps.rbegin(); it != c.trace.steps.rend(); ++it) {
      c.p = apply_gen(it->phi, c.p);
    }
  }

  if (c.norm.gamma) c.p = apply_gen(AutoGen::alpha_x(), c.p);
  if (c.norm.delta) c.p = apply_gen(AutoGen::alpha_y(), c.p);
  if (c.norm.epsilon) c.p = apply_gen(AutoGen::beta(), c.p);

  detail::check(exponent_pair(c.p) == ExponentPair{x, y},
                "construct: exponent pair mismatch");
  return c;
}

inline Word canonical_primitive(long long x, long long y) {
  return construct(x, y).p;
}

}  // namespace primgen
