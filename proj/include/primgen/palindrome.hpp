#pragma once

// Palindromic structure of primitive words. Every primitive word is a
// product of at most two palindromes, is conjugate to a palindrome in an
// essentially unique way, and has a two sided form with a palindromic middle
// (the Helling form). All three are computed by pushing the factorization
// through the normal form, one move at a time.

#include <cstdint>
#include <optional>
#include <vector>

#include "primgen/automorphism.hpp"
#include "primgen/errors.hpp"
#include "primgen/normal_form.hpp"
#include "primgen/word.hpp"

namespace primgen {

struct PushThrough {
  Word image;  // (w) phi, always x followed by the tail
  Word tail;   // positive palindrome again, possibly empty
};

// Applying a basic move to a nonempty positive palindrome always yields x
// followed by another positive palindrome. This is the engine behind the
// factorization: it lets an x factor be split off after every move.
inline PushThrough push_through(const AutoGen& phi, const Word& w) {
  if (phi.kind != GenKind::basic || phi.inverted) {
    throw PreconditionError("push_through needs a plain basic move");
  }
  if (w.empty() || !is_positive(w) || !is_palindrome(w)) {
    throw PreconditionError("push_through needs a nonempty positive palindrome");
  }
  PushThrough out;
  out.image = apply_gen(phi, w);
  detail::check(!out.image.empty() && out.image[0] == Letter::x,
                "push_through: image does not start with x");
  out.tail = suffix(out.image, 1);
  detail::check(is_positive(out.tail) && is_palindrome(out.tail),
                "push_through: tail is not a positive palindrome");
  return out;
}

// p written as the product of its factors, each a nonempty palindrome, with
// at most two factors. A palindrome is its own single factor.
struct PalindromeFactorization {
  std::vector<Word> factors;
};

namespace detail {

inline void primitive_or_throw(const Word& p) {
  // Reuse the normal form machinery's error messages.
  second_normal_form(p);
}

}  // namespace detail

inline PalindromeFactorization palindrome_factorization(const Word& p) {
  NormalForm nf = second_normal_form(p);
  if (is_palindrome(p)) return {{p}};

  // Start from y and track one or two positive palindrome factors through
  // the basic moves. With one factor [w], the image splits as [x, tail];
  // with two, the first image's tail is wrapped back into x tail x so each
  // factor stays a palindrome.
  std::vector<Word> fs = {y_word()};
  for (const AutoGen& phi : nf.phis) {
    if (fs.size() == 1) {
      PushThrough pt = push_through(phi, fs[0]);
      fs = {x_word(), pt.tail};
    } else {
      PushThrough pt1 = push_through(phi, fs[0]);
      PushThrough pt2 = push_through(phi, fs[1]);
      fs = {concat(concat(x_word(), pt1.tail), x_word()), pt2.tail};
    }
    if (fs.size() == 2 && fs[1].empty()) fs.pop_back();
  }

  // The sign and swap flags permute letters, so they preserve palindromes
  // factor by factor.
  for (const AutoGen& g : detail::flag_seq(nf.gamma, nf.delta, nf.epsilon)) {
    for (Word& f : fs) f = apply_gen(g, f);
  }

  // Conjugating splits v across the factors, using the reversal of v to
  // keep both pieces palindromic.
  if (!nf.v.empty()) {
    Word vs = psi(nf.v);
    if (fs.size() == 1) {
      fs = {concat(concat(invert(nf.v), fs[0]), invert(vs)), concat(vs, nf.v)};
    } else {
      fs = {concat(concat(invert(nf.v), fs[0]), invert(vs)),
            concat(concat(vs, fs[1]), nf.v)};
    }
  }

  std::vector<Word> out;
  Word product;
  for (const Word& f : fs) {
    if (f.empty()) continue;
    detail::check(is_palindrome(f), "palindrome_factorization: factor is not a palindrome");
    product = concat(product, f);
    out.push_back(f);
  }
  detail::check(product == p, "palindrome_factorization: factors do not multiply back");
  detail::check(out.size() == 2, "palindrome_factorization: expected two factors here");
  return {out};
}

// p = z^-1 w z or p = z^-1 a w z with w a palindrome and a a single letter.
// Splitting the first palindrome factor at its midpoint supplies z.
struct ConjugatePalindromeForm {
  Word z;
  std::optional<Letter> a;  // present when the first factor has odd length
  Word w;
};

inline Word reassemble(const ConjugatePalindromeForm& f) {
  Word mid = f.a ? concat(letter_word(*f.a), f.w) : f.w;
  return concat(concat(invert(f.z), mid), f.z);
}

inline ConjugatePalindromeForm conjugate_palindrome_form(const Word& p) {
  ConjugatePalindromeForm out;
  if (is_palindrome(p)) {
    detail::primitive_or_throw(p);
    out.w = p;
    detail::check(reassemble(out) == p, "conjugate_palindrome_form: round trip failed");
    return out;
  }
  PalindromeFactorization fac = palindrome_factorization(p);
  detail::check(fac.factors.size() == 2, "conjugate_palindrome_form: need two factors");
  const Word& w1 = fac.factors[0];
  const Word& w2 = fac.factors[1];
  const std::size_t m = w1.size() / 2;
  Word v = prefix(w1, m);
  if (w1.size() % 2 == 1) out.a = w1[m];
  out.z = invert(v);
  out.w = concat(concat(psi(v), w2), v);
  detail::check(is_palindrome(out.w), "conjugate_palindrome_form: middle is not a palindrome");
  detail::check(reassemble(out) == p, "conjugate_palindrome_form: round trip failed");
  return out;
}

// Two sided form p = z y^-1 v x z^-1 (side yx) or p = z x^-1 v y z^-1
// (side xy) with v a palindrome.
enum class HellingSide : std::uint8_t { yx, xy };

struct HellingForm {
  Word z;
  Word v;
  HellingSide side = HellingSide::xy;
};

inline Word reassemble(const HellingForm& h) {
  Letter left = h.side == HellingSide::yx ? Letter::Y : Letter::X;
  Letter right = h.side == HellingSide::yx ? Letter::x : Letter::y;
  Word mid = concat(concat(letter_word(left), h.v), letter_word(right));
  return concat(concat(h.z, mid), invert(h.z));
}

inline HellingForm helling_form(const Word& p) {
  NormalForm nf = second_normal_form(p);

  // y itself is y^-1 y y (side yx, empty z, middle y) shifted to start the
  // induction: take v = x on side xy, since x^-1 x y = y.
  HellingForm h;
  h.side = HellingSide::xy;
  h.v = x_word();

  // Pushing a basic move through: the middle palindrome maps to x tail, the
  // spare power of y moves into z, and the side flips exactly when the move
  // orientation disagrees with the side.
  for (const AutoGen& phi : nf.phis) {
    PushThrough pt = push_through(phi, h.v);
    Word u = pt.tail;
    h.z = concat(apply_gen(phi, h.z), letter_power(Letter::Y, phi.n));
    if (h.side == HellingSide::xy && phi.orient == Orientation::a) {
      h.side = HellingSide::yx;
      h.v = u;
    } else if (h.side == HellingSide::xy) {
      h.v = concat(concat(x_word(), u), x_word());
    } else if (phi.orient == Orientation::a) {
      h.side = HellingSide::xy;
      h.v = concat(concat(x_word(), u), x_word());
    } else {
      h.v = u;
    }
  }

  // The sign flips swap the side and wrap the middle in the letter whose
  // inverse appears on the boundary; the swap flips the side directly.
  if (nf.gamma) {
    Word wv = apply_gen(AutoGen::alpha_x(), h.v);
    if (h.side == HellingSide::yx) {
      h.v = concat(concat(letter_word(Letter::Y), wv), letter_word(Letter::Y));
      h.side = HellingSide::xy;
    } else {
      h.v = concat(concat(y_word(), wv), y_word());
      h.side = HellingSide::yx;
    }
    h.z = concat(apply_gen(AutoGen::alpha_x(), h.z), x_word());
  }
  if (nf.delta) {
    Word wv = apply_gen(AutoGen::alpha_y(), h.v);
    if (h.side == HellingSide::yx) {
      h.v = concat(concat(x_word(), wv), x_word());
      h.side = HellingSide::xy;
    } else {
      h.v = concat(concat(letter_word(Letter::X), wv), letter_word(Letter::X));
      h.side = HellingSide::yx;
    }
    h.z = concat(apply_gen(AutoGen::alpha_y(), h.z), y_word());
  }
  if (nf.epsilon) {
    h.v = apply_gen(AutoGen::beta(), h.v);
    h.z = apply_gen(AutoGen::beta(), h.z);
    h.side = h.side == HellingSide::yx ? HellingSide::xy : HellingSide::yx;
  }
  if (!nf.v.empty()) {
    h.z = concat(invert(nf.v), h.z);
  }

  detail::check(is_palindrome(h.v), "helling_form: middle is not a palindrome");
  detail::check(reassemble(h) == p, "helling_form: round trip failed");
  return h;
}

}  // namespace primgen
