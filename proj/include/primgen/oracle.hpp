#pragma once

// Independent cross checks used by the test suite and the self test: a
// breadth first enumeration of all short primitive conjugacy classes, a
// bounded brute force search for normal closure membership, and the
// exhaustive enumeration of basic move preimages of an exponent pair. These
// deliberately avoid the constructive machinery so that agreement between
// the two sides means something.

#include <cstdint>
#include <cstdlib>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "primgen/automorphism.hpp"
#include "primgen/construct.hpp"
#include "primgen/errors.hpp"
#include "primgen/word.hpp"

namespace primgen {

// All freely reduced words of exactly the given length.
inline std::vector<Word> all_reduced_words(std::size_t len) {
  if (len > 12) throw ResourceError("exhaustive word enumeration capped at length 12");
  std::vector<std::vector<Letter>> level = {{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::vector<Letter>> next;
    next.reserve(level.size() * 3);
    for (const auto& w : level) {
      for (std::uint8_t c = 0; c < 4; ++c) {
        Letter l = static_cast<Letter>(c);
        if (!w.empty() && l == inverse(w.back())) continue;
        auto ext = w;
        ext.push_back(l);
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(level.size());
  for (auto& w : level) out.push_back(Word::reduce(std::move(w)));
  return out;
}

// The conjugacy classes of primitive elements with cyclic length at most
// max_len, found as the orbit of x under the elementary automorphisms. The
// walk happens on canonical cyclic representatives, which makes the inner
// moves invisible, and keeps a few letters of slack beyond the target length
// so classes reachable only through slightly longer detours are not lost.
struct OrbitSet {
  std::size_t max_len = 0;
  std::unordered_set<Word> members;

  bool contains(const Word& w) const {
    Word c = canonical_cyclic(w);
    return c.size() <= max_len && members.count(c) > 0;
  }
};

inline OrbitSet primitive_orbit_up_to(std::size_t max_len) {
  if (max_len > 12) throw ResourceError("orbit enumeration capped at length 12");
  const std::size_t slack = max_len + 4;
  const AutoSeq gens = {
      AutoGen::alpha_x(), AutoGen::alpha_y(), AutoGen::beta(),
      AutoGen::basic(0, Orientation::a), AutoGen::basic(0, Orientation::b),
      AutoGen::basic(1, Orientation::a), AutoGen::basic(1, Orientation::b),
  };
  std::unordered_set<Word> visited;
  std::queue<Word> frontier;
  Word start = canonical_cyclic(x_word());
  visited.insert(start);
  frontier.push(start);
  while (!frontier.empty()) {
    Word w = frontier.front();
    frontier.pop();
    for (const AutoGen& g : gens) {
      Word im = canonical_cyclic(apply_gen(g, w));
      if (im.size() > slack) continue;
      if (visited.insert(im).second) frontier.push(im);
    }
  }
  OrbitSet out;
  out.max_len = max_len;
  for (const Word& w : visited) {
    if (w.size() <= max_len) out.members.insert(w);
  }
  return out;
}

struct BruteNclOptions {
  std::size_t max_conjugator = 8;      // cap on the conjugating word length
  std::size_t node_budget = 2'000'000; // total search steps before giving up
};

namespace detail {

struct BruteNclState {
  std::vector<Word> pool;  // conjugates of p^+-1, sorted short to long
  Word pos_class;
  Word neg_class;
  ExponentPair ep;
  std::size_t budget = 0;
  bool exhausted = false;
  std::unordered_map<Word, std::uint8_t> failed;  // word -> bitmask over m

  bool feasible(const Word& t, long long m) const {
    ExponentPair et = exponent_pair(t);
    if (ep.x == 0 && ep.y == 0) return et.x == 0 && et.y == 0;
    long long k;
    if (ep.x != 0) {
      if (et.x % ep.x != 0) return false;
      k = et.x / ep.x;
      if (et.y != k * ep.y) return false;
    } else {
      if (et.x != 0) return false;
      if (et.y % ep.y != 0) return false;
      k = et.y / ep.y;
    }
    return std::llabs(k) <= m;
  }

  bool single_conjugate(const Word& t) const {
    Word c = canonical_cyclic(t);
    return c == pos_class || c == neg_class;
  }

  bool search(const Word& t, long long m) {
    if (t.empty()) return true;  // a product of zero remaining conjugates
    if (m <= 0) return false;
    if (!feasible(t, m)) return false;
    if (m == 1) return single_conjugate(t);
    std::uint8_t bit = static_cast<std::uint8_t>(1u << m);
    std::uint8_t& mask = failed[t];
    if (mask & bit) return false;
    mask |= bit;
    const std::size_t max_piece = pool.empty() ? 0 : pool.back().size();
    for (const Word& c : pool) {
      if (c.size() > t.size() + (m - 1) * max_piece) break;
      if (budget == 0) {
        exhausted = true;
        return false;
      }
      --budget;
      Word rest = concat(invert(c), t);
      if (rest.size() > (m - 1) * max_piece) continue;
      if (search(rest, m - 1)) return true;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace detail

// Bounded search for r as a product of at most `depth` conjugates of p or
// p^-1. The answer is one sided: true comes with an implicit witness, false
// only means no witness exists within the caps (conjugator length, node
// budget). Exponent pair pruning is exact, so short non-members are still
// rejected quickly and reliably.
inline bool brute_ncl(const Word& r, const Word& p, long long depth,
                      BruteNclOptions opt = {}) {
  if (p.empty()) throw PreconditionError("brute_ncl needs a nonempty p");
  if (depth < 0 || depth > 4) throw ResourceError("brute_ncl depth capped at 4");
  if (r.size() > 8) throw ResourceError("brute_ncl r capped at 8 letters");
  if (r.empty()) return true;

  detail::BruteNclState st;
  st.ep = exponent_pair(p);
  st.pos_class = canonical_cyclic(p);
  st.neg_class = canonical_cyclic(invert(p));
  st.budget = opt.node_budget;
  if (!st.feasible(r, depth)) return false;

  Word core = cyclically_reduce(p).core;
  std::vector<Word> rotations;
  for (std::size_t k = 0; k < core.size(); ++k) {
    rotations.push_back(rotate(core, k));
    rotations.push_back(rotate(invert(core), k));
  }

  const std::size_t ucap_limit =
      std::min(opt.max_conjugator,
               r.size() + p.size() * static_cast<std::size_t>(depth));

  // Iterative deepening on the conjugator length: cheap witnesses with short
  // conjugators are found long before the big pools are ever built.
  std::unordered_set<Word> seen;
  std::vector<Word> us = {Word()};
  for (std::size_t ucap = 0; ucap <= ucap_limit; ++ucap) {
    if (ucap > 0) {
      std::vector<Word> next;
      for (const Word& u : us) {
        if (u.size() + 1 != ucap) continue;
        for (std::uint8_t c = 0; c < 4; ++c) {
          Letter l = static_cast<Letter>(c);
          if (!u.empty() && l == inverse(u.letters().back())) continue;
          auto ls = u.letters();
          ls.push_back(l);
          next.push_back(Word::reduce(std::move(ls)));
        }
      }
      us.insert(us.end(), next.begin(), next.end());
    }
    bool grew = false;
    for (const Word& u : us) {
      if (u.size() != ucap) continue;
      Word ui = invert(u);
      for (const Word& rho : rotations) {
        Word c = concat(concat(ui, rho), u);
        if (seen.insert(c).second) {
          st.pool.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew && ucap > 0) continue;
    std::sort(st.pool.begin(), st.pool.end(),
              [](const Word& a, const Word& b) { return a.size() < b.size(); });
    st.failed.clear();
    if (st.search(r, depth)) return true;
    if (st.exhausted) return false;
  }
  return false;
}

// All ways an admissible pair maps onto (X, Y) under a single basic move:
// solving (U, V) * matrix(basic(n, o)) == (X, Y) for each parameter and
// orientation, keeping solutions with 1 <= U <= V. The pair (1, 1) is hit by
// both orientations with the same parameter; orientation a is kept, matching
// the branch the descent itself takes on a tie.
struct BasicPreimage {
  ExponentPair pair;
  AutoGen phi;
};

inline std::vector<BasicPreimage> enumerate_basic_preimages(long long x, long long y) {
  detail::require_coprime(x, y);
  if (x < 2 || y <= x) throw PreconditionError("enumerate_basic_preimages needs 2 <= X < Y");
  std::vector<BasicPreimage> out;
  for (long long n = 0; n * x <= y; ++n) {
    long long u = y - n * x;
    long long v = x - u;
    if (u >= 1 && u <= v) {
      BasicPreimage b{{u, v}, AutoGen::basic(n, Orientation::a)};
      detail::check(b.pair * matrix(b.phi) == ExponentPair{x, y},
                    "enumerate_basic_preimages: bad a solution");
      out.push_back(b);
    }
    long long v2 = y - n * x;
    long long u2 = x - v2;
    if (u2 >= 1 && u2 <= v2 && u2 != v2) {
      BasicPreimage b{{u2, v2}, AutoGen::basic(n, Orientation::b)};
      detail::check(b.pair * matrix(b.phi) == ExponentPair{x, y},
                    "enumerate_basic_preimages: bad b solution");
      out.push_back(b);
    }
  }
  return out;
}

}  // namespace primgen
