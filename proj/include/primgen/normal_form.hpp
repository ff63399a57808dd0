#pragma once

// Second normal form of a primitive word: a sequence of basic moves, three
// sign flags, and a minimal conjugator. Every primitive word p factors
// uniquely as p = (y) phis alpha_x^gamma alpha_y^delta beta^epsilon iota_v
// once v is pinned down as the shortest conjugator (ties broken by the
// letter order).

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primgen/automorphism.hpp"
#include "primgen/construct.hpp"
#include "primgen/errors.hpp"
#include "primgen/word.hpp"

namespace primgen {

struct NormalForm {
  AutoSeq phis;  // basic moves in application order, first applied first
  int gamma = 0;
  int delta = 0;
  int epsilon = 0;
  Word v;
  bool v_tie_broken = false;  // both conjugator candidates had minimal length
};

enum class PrimitivityReason : std::uint8_t {
  primitive,
  not_coprime,
  not_conjugate_to_canonical,
};

struct PrimitivityVerdict {
  bool primitive = false;
  PrimitivityReason reason = PrimitivityReason::not_coprime;
  std::optional<NormalForm> normal_form;
};

// The basic move sequence that carries y to the constructed primitive of the
// coprime pair (m, M) with 0 <= m <= M. The terminal seed becomes the first
// move: x y^Ys is (y) basic(Ys - 1, b), except that x y itself needs
// basic(1, a) because the parameter of a move is at least zero.
inline AutoSeq canonical_basic_sequence(long long m, long long big) {
  detail::require_coprime(m, big);
  if (m < 0 || big < m) throw PreconditionError("canonical_basic_sequence needs 0 <= m <= M");
  if (m == 0) return {};  // the word y, no moves at all
  if (m == 1 && big == 1) return {AutoGen::basic(1, Orientation::a)};
  DescentTrace t = descend(m, big);
  AutoSeq seq;
  seq.reserve(t.steps.size() + 1);
  long long ys = t.terminal.y;
  seq.push_back(ys == 1 ? AutoGen::basic(1, Orientation::a)
                        : AutoGen::basic(ys - 1, Orientation::b));
  for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) seq.push_back(it->phi);
  return seq;
}

namespace detail {

inline AutoSeq flag_seq(int gamma, int delta, int epsilon) {
  AutoSeq out;
  if (gamma) out.push_back(AutoGen::alpha_x());
  if (delta) out.push_back(AutoGen::alpha_y());
  if (epsilon) out.push_back(AutoGen::beta());
  return out;
}

struct MinimalConjugator {
  Word v;
  bool tie = false;
};

// p is a conjugate of the cyclically reduced w1. Writing p as c^-1 core c
// and core as the k-th rotation of w1, the two candidate conjugators are
// (first k letters of w1) c and (rest of w1)^-1 c; neither junction cancels,
// so the shorter one wins outright and equal lengths are settled by the
// letter order. Primitive cores are aperiodic, which makes k, and with it
// the whole choice, unique.
inline MinimalConjugator minimal_conjugator(const Word& w1, const Word& p) {
  CyclicReduction cr = cyclically_reduce(p);
  check(cr.core.size() == w1.size(), "minimal_conjugator: core length mismatch");
  if (w1.empty()) return {};
  const std::size_t n = w1.size();
  std::size_t k = (least_rotation_index(w1) + n - least_rotation_index(cr.core)) % n;
  check(rotate(w1, k) == cr.core, "minimal_conjugator: rotation offset wrong");
  Word cand1 = concat(prefix(w1, k), cr.conjugator);
  Word cand2 = concat(invert(suffix(w1, k)), cr.conjugator);
  MinimalConjugator out;
  if (cand1.size() != cand2.size()) {
    out.v = cand1.size() < cand2.size() ? cand1 : cand2;
  } else {
    out.v = cand1.letters() < cand2.letters() ? cand1 : cand2;
    out.tie = true;
  }
  check(concat(concat(invert(out.v), w1), out.v) == p,
        "minimal_conjugator: candidate does not conjugate");
  return out;
}

}  // namespace detail

// The full right action described by a normal form, ending with the inner
// conjugation when v is nonempty.
inline AutoSeq normal_form_seq(const NormalForm& nf) {
  AutoSeq seq = nf.phis;
  AutoSeq flags = detail::flag_seq(nf.gamma, nf.delta, nf.epsilon);
  seq.insert(seq.end(), flags.begin(), flags.end());
  if (!nf.v.empty()) seq.push_back(AutoGen::inner(nf.v));
  return seq;
}

inline Word reconstruct(const NormalForm& nf) {
  return apply_seq(normal_form_seq(nf), y_word());
}

namespace detail {

// Shared by is_primitive and second_normal_form once p is known to be
// conjugate to the canonical primitive of its pair.
inline NormalForm build_normal_form(const Word& p, const ExponentPair& e,
                                    const Word& canonical) {
  NormalForm nf;
  SignNormalization fl = sign_normalization(e.x, e.y);
  nf.phis = canonical_basic_sequence(fl.core_pair.x, fl.core_pair.y);
  nf.gamma = fl.gamma;
  nf.delta = fl.delta;
  nf.epsilon = fl.epsilon;
  AutoSeq upto_flags = nf.phis;
  AutoSeq flags = flag_seq(nf.gamma, nf.delta, nf.epsilon);
  upto_flags.insert(upto_flags.end(), flags.begin(), flags.end());
  check(apply_seq(upto_flags, y_word()) == canonical,
        "build_normal_form: flag order disagrees with the constructed word");
  MinimalConjugator mc = minimal_conjugator(canonical, p);
  nf.v = mc.v;
  nf.v_tie_broken = mc.tie;
  check(reconstruct(nf) == p, "build_normal_form: round trip failed");
  return nf;
}

}  // namespace detail

inline PrimitivityVerdict is_primitive(const Word& w) {
  PrimitivityVerdict v;
  ExponentPair e = exponent_pair(w);
  if (!coprime(e)) {
    v.reason = PrimitivityReason::not_coprime;
    return v;
  }
  Construction cons = construct(e.x, e.y);
  if (!are_conjugate(w, cons.p)) {
    v.reason = PrimitivityReason::not_conjugate_to_canonical;
    return v;
  }
  v.primitive = true;
  v.reason = PrimitivityReason::primitive;
  v.normal_form = detail::build_normal_form(w, e, cons.p);
  return v;
}

inline NormalForm second_normal_form(const Word& p) {
  ExponentPair e = exponent_pair(p);
  if (!coprime(e)) {
    throw NotPrimitiveError("exponent pair (" + std::to_string(e.x) + "," +
                            std::to_string(e.y) + ") is not coprime");
  }
  Construction cons = construct(e.x, e.y);
  if (!are_conjugate(p, cons.p)) {
    throw NotPrimitiveError("word is not conjugate to the primitive element of its pair");
  }
  return detail::build_normal_form(p, e, cons.p);
}

// The two distinct basic move sequences of canonical length that carry y to
// the cyclically reduced core of p. They differ only in the seed move: the
// terminal word x y^s is both (y) basic(s - 1, b) and (y) basic(s, a), with
// x y itself doubling as (y) basic(1, a) and (y) basic(0, b). Conjugates of
// a single generator need no basic move at all, so they have one (empty)
// sequence and are rejected.
struct TwoSequences {
  AutoSeq canonical;
  AutoSeq alternate;
};

inline TwoSequences both_sequences(const Word& p) {
  NormalForm nf = second_normal_form(p);
  if (nf.phis.empty()) {
    throw NotApplicableError("a conjugate of a single generator has only the empty sequence");
  }
  TwoSequences out;
  out.canonical = nf.phis;
  out.alternate = nf.phis;
  const AutoGen& seed = nf.phis.front();
  detail::check(seed.kind == GenKind::basic && !seed.inverted,
                "both_sequences: seed is not a basic move");
  if (seed.orient == Orientation::a) {
    detail::check(seed.n == 1, "both_sequences: an a-oriented seed always has parameter 1");
    out.alternate.front() = AutoGen::basic(0, Orientation::b);
  } else {
    out.alternate.front() = AutoGen::basic(seed.n + 1, Orientation::a);
  }
  detail::check(apply_seq(out.canonical, y_word()) == apply_seq(out.alternate, y_word()),
                "both_sequences: the two sequences disagree");
  return out;
}

}  // namespace primgen
