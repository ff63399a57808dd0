#pragma once

// Membership in the normal closure of a primitive element, and explicit
// certificates. The key facts: the normal closure of a primitive p consists
// exactly of the words whose exponent pair is an integer multiple of p's,
// and extending p by a companion q to a basis lets any member be rewritten
// as a product of conjugates of p with conjugators that are powers of q.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "primgen/automorphism.hpp"
#include "primgen/construct.hpp"
#include "primgen/errors.hpp"
#include "primgen/normal_form.hpp"
#include "primgen/word.hpp"

namespace primgen {

namespace detail {

// Solves pair(r) == k * pair(p) over the integers. p is primitive here, so
// its pair is never (0, 0) and k is unique when it exists.
struct MultipleOf {
  bool is_multiple = false;
  long long k = 0;
};

inline MultipleOf pair_multiple(const ExponentPair& er, const ExponentPair& ep) {
  MultipleOf m;
  if (ep.x != 0) {
    if (er.x % ep.x != 0) return m;
    m.k = er.x / ep.x;
    m.is_multiple = er.y == m.k * ep.y;
  } else {
    if (er.x != 0) return m;
    // ep = (0, +-1) for a primitive element
    m.k = er.y / ep.y;
    m.is_multiple = er.y == m.k * ep.y;
  }
  return m;
}

}  // namespace detail

inline bool in_normal_closure(const Word& r, const Word& p) {
  PrimitivityVerdict v = is_primitive(p);
  if (!v.primitive) {
    throw NotPrimitiveError("normal closure membership is only decided for primitive elements");
  }
  return detail::pair_multiple(exponent_pair(r), exponent_pair(p)).is_multiple;
}

// The primitive element p and exponent k with pair(r) == k * pair(p). For
// r with pair (0, 0) every primitive works; the canonical answer is y with
// k = 0, flagged so callers know the choice was arbitrary.
struct PrimitiveForResult {
  Word p;
  long long k = 0;
  bool all_primitives = false;
};

inline PrimitiveForResult primitive_for(const Word& r) {
  ExponentPair e = exponent_pair(r);
  PrimitiveForResult out;
  if (e.x == 0 && e.y == 0) {
    out.p = y_word();
    out.all_primitives = true;
    return out;
  }
  long long g = std::gcd(e.x, e.y);
  out.k = g;  // divide out the gcd, keeping the signs on the pair
  out.p = canonical_primitive(e.x / g, e.y / g);
  return out;
}

// A basis extending p: q is the image of x under the same automorphism theta
// that carries y to p, so {q, p} generates and the pair determinant
// X V - Y U is +-1. The sign is recorded as computed, not normalized.
struct BasisPair {
  Word p;
  Word q;
  AutoSeq theta;
  long long det = 0;  // X V - Y U for pair(p) = (X, Y), pair(q) = (U, V)
};

inline BasisPair companion_basis(const Word& p) {
  NormalForm nf = second_normal_form(p);
  BasisPair b;
  b.theta = normal_form_seq(nf);
  b.p = p;
  b.q = apply_seq(b.theta, x_word());
  detail::check(apply_seq(b.theta, y_word()) == p, "companion_basis: theta does not hit p");
  ExponentPair ep = exponent_pair(p);
  ExponentPair eq = exponent_pair(b.q);
  b.det = ep.x * eq.y - ep.y * eq.x;
  detail::check(b.det == 1 || b.det == -1, "companion_basis: pairs do not form a basis");
  return b;
}

// r rewritten over the basis {q, p}: apply theta^-1 and read the result off
// letter by letter, x standing for q and y for p.
enum class BasisLetter : std::uint8_t { q, p };

struct BasisFactor {
  BasisLetter which = BasisLetter::q;
  int sign = 1;
};

inline std::vector<BasisFactor> rewrite_in_basis(const Word& r, const BasisPair& basis) {
  Word w = apply_seq(invert_seq(basis.theta), r);
  std::vector<BasisFactor> out;
  out.reserve(w.size());
  for (Letter l : w) {
    out.push_back({x_generator(l) ? BasisLetter::q : BasisLetter::p,
                   positive(l) ? 1 : -1});
  }
  return out;
}

inline Word expand(const std::vector<BasisFactor>& fs, const BasisPair& basis) {
  Word out;
  for (const BasisFactor& f : fs) {
    const Word& base = f.which == BasisLetter::q ? basis.q : basis.p;
    out = concat(out, f.sign > 0 ? base : invert(base));
  }
  return out;
}

// r as an ordered product of conjugates of p: each entry contributes
// conjugator^-1 p^sign conjugator.
struct NclEntry {
  Word conjugator;
  int sign = 1;
};

struct NclCertificate {
  std::vector<NclEntry> entries;
};

inline Word reassemble(const NclCertificate& cert, const Word& p) {
  Word out;
  for (const NclEntry& e : cert.entries) {
    Word piece = e.sign > 0 ? p : invert(p);
    out = concat(out, concat(concat(invert(e.conjugator), piece), e.conjugator));
  }
  return out;
}

// Conjugates every p letter of the basis word past the q letters to its
// right. The q exponents telescope, so the conjugators come out as powers
// of q with exponent the q sum of the suffix after the letter; membership
// forces the total q sum to zero, which is what makes the telescope close.
inline NclCertificate certificate(const Word& r, const Word& p) {
  if (!in_normal_closure(r, p)) {
    throw NotInClosureError("exponent pair of r is not an integer multiple of that of p");
  }
  BasisPair basis = companion_basis(p);
  std::vector<BasisFactor> fs = rewrite_in_basis(r, basis);

  long long qsum = 0;
  for (const BasisFactor& f : fs) {
    if (f.which == BasisLetter::q) qsum += f.sign;
  }
  detail::check(qsum == 0, "certificate: q letters do not cancel");

  std::vector<NclEntry> rev;
  long long tail = 0;
  for (std::size_t i = fs.size(); i-- > 0;) {
    if (fs[i].which == BasisLetter::p) {
      rev.push_back({pow(basis.q, tail), fs[i].sign});
    } else {
      tail += fs[i].sign;
    }
  }
  NclCertificate cert;
  cert.entries.assign(rev.rbegin(), rev.rend());
  detail::check(reassemble(cert, p) == r, "certificate: product does not equal r");
  return cert;
}

}  // namespace primgen
