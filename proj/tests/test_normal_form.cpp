// Second normal form both ways: pinned decompositions, exact round trips on
// every short primitive, a brute-force check that the recorded conjugator
// really is the shortest one, the primitivity verdict against the enumerated
// orbit, and the two-sequence ambiguity of the seed move.

#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "primgen/normal_form.hpp"
#include "primgen/oracle.hpp"

using namespace primgen;
using primgen::testing::W;
using primgen::testing::coprime_pairs_signed;
using primgen::testing::random_conjugate;
using primgen::testing::reduced_words_up_to;

namespace {

AutoSeq seq_of(const char* text) { return parse_autoseq(text); }

// All primitive words of length <= max_len, decided by orbit membership.
std::vector<Word> primitive_words_up_to(std::size_t max_len) {
  OrbitSet orbit = primitive_orbit_up_to(max_len);
  std::vector<Word> out;
  for (const Word& w : reduced_words_up_to(max_len)) {
    if (orbit.contains(w)) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("canonical basic sequences") {
  REQUIRE(canonical_basic_sequence(0, 1).empty());
  REQUIRE(canonical_basic_sequence(1, 1) == seq_of("basicA:1"));
  REQUIRE(canonical_basic_sequence(1, 2) == seq_of("basicB:1"));
  REQUIRE(canonical_basic_sequence(1, 6) == seq_of("basicB:5"));
  REQUIRE(canonical_basic_sequence(2, 3) == seq_of("basicA:1,basicA:1"));
  REQUIRE(canonical_basic_sequence(27, 34) ==
          seq_of("basicB:5,basicB:2,basicA:1"));

  REQUIRE_THROWS_AS(canonical_basic_sequence(2, 4), NonCoprimeError);
  REQUIRE_THROWS_AS(canonical_basic_sequence(3, 2), PreconditionError);
  REQUIRE_THROWS_AS(canonical_basic_sequence(-1, 2), PreconditionError);

  // The sequence reproduces the constructed core exactly.
  for (auto [x, y] : coprime_pairs_signed(25)) {
    if (x < 0 || y < x) continue;
    Word expect = x == 0 ? y_word() : construct_core(x, y);
    REQUIRE(apply_seq(canonical_basic_sequence(x, y), y_word()) == expect);
  }
}

TEST_CASE("normal form pins") {
  NormalForm nf = second_normal_form(W("xy"));
  REQUIRE(nf.phis == seq_of("basicA:1"));
  REQUIRE(nf.gamma == 0);
  REQUIRE(nf.delta == 0);
  REQUIRE(nf.epsilon == 0);
  REQUIRE(nf.v.empty());
  REQUIRE(!nf.v_tie_broken);

  nf = second_normal_form(W("xyyxy"));
  REQUIRE(nf.phis == seq_of("basicA:1,basicA:1"));
  REQUIRE(nf.v.empty());

  // A rotation needs a conjugator; the inverted-suffix candidate is shorter.
  nf = second_normal_form(W("xyxyy"));
  REQUIRE(nf.phis == seq_of("basicA:1,basicA:1"));
  REQUIRE(nf.v == W("YX"));
  REQUIRE(!nf.v_tie_broken);

  // Both candidates have length one here: x wins over Y by letter order.
  nf = second_normal_form(W("yx"));
  REQUIRE(nf.phis == seq_of("basicA:1"));
  REQUIRE(nf.v == W("x"));
  REQUIRE(nf.v_tie_broken);

  // Not cyclically reduced: the stripped suffix joins the conjugator.
  nf = second_normal_form(W("Yxyy"));
  REQUIRE(nf.phis == seq_of("basicA:1"));
  REQUIRE(nf.v == W("y"));

  // Sign flags for a quadrant: (-1, -1) negates both letters.
  nf = second_normal_form(W("XY"));
  REQUIRE(nf.phis == seq_of("basicA:1"));
  REQUIRE(nf.gamma == 1);
  REQUIRE(nf.delta == 1);
  REQUIRE(nf.epsilon == 0);
  REQUIRE(nf.v.empty());

  // The worked pair with the swap: epsilon set, gamma from the y sign.
  nf = second_normal_form(construct(34, -27).p);
  REQUIRE(nf.phis == seq_of("basicB:5,basicB:2,basicA:1"));
  REQUIRE(nf.gamma == 1);
  REQUIRE(nf.delta == 0);
  REQUIRE(nf.epsilon == 1);
  REQUIRE(nf.v.empty());
}

TEST_CASE("normal form sequence layout and reconstruction") {
  NormalForm nf;
  nf.phis = seq_of("basicA:1");
  nf.gamma = 1;
  nf.epsilon = 1;
  nf.v = W("x");
  AutoSeq seq = normal_form_seq(nf);
  REQUIRE(seq == seq_of("basicA:1,ax,b,inner:x"));
  REQUIRE(reconstruct(nf) == apply_seq(seq, y_word()));

  nf = NormalForm{};
  REQUIRE(reconstruct(nf) == W("y"));
  REQUIRE(normal_form_seq(nf).empty());
}

TEST_CASE("round trip on every short primitive word") {
  for (const Word& w : primitive_words_up_to(8)) {
    NormalForm nf = second_normal_form(w);
    REQUIRE(reconstruct(nf) == w);
  }
}

TEST_CASE("round trip on random conjugates of canonical primitives") {
  std::mt19937 rng(1300);
  for (auto [x, y] : coprime_pairs_signed(12)) {
    Word p = canonical_primitive(x, y);
    for (int trial = 0; trial < 6; ++trial) {
      Word w = random_conjugate(rng, p, 10);
      NormalForm nf = second_normal_form(w);
      REQUIRE(reconstruct(nf) == w);
    }
  }
}

TEST_CASE("the recorded conjugator is the shortest, ties broken by order") {
  for (const Word& w : primitive_words_up_to(6)) {
    NormalForm nf = second_normal_form(w);
    Word canon = canonical_primitive(exponent_pair(w).x, exponent_pair(w).y);

    // Enumerate conjugators in shortlex order up to the recorded length.
    std::vector<Word> minimal;
    for (std::size_t len = 0; len <= nf.v.size(); ++len) {
      if (!minimal.empty()) break;
      for (const Word& v : all_reduced_words(len)) {
        if (concat(concat(invert(v), canon), v) == w) minimal.push_back(v);
      }
    }
    REQUIRE(!minimal.empty());
    REQUIRE(minimal.front().size() == nf.v.size());
    REQUIRE(minimal.front() == nf.v);
    REQUIRE(nf.v_tie_broken == (minimal.size() > 1));
  }
}

TEST_CASE("primitivity verdicts") {
  PrimitivityVerdict v = is_primitive(W("xyyxy"));
  REQUIRE(v.primitive);
  REQUIRE(v.reason == PrimitivityReason::primitive);
  REQUIRE(v.normal_form.has_value());
  REQUIRE(reconstruct(*v.normal_form) == W("xyyxy"));

  v = is_primitive(W("xx"));
  REQUIRE(!v.primitive);
  REQUIRE(v.reason == PrimitivityReason::not_coprime);
  REQUIRE(!v.normal_form.has_value());

  v = is_primitive(W("xyXY"));
  REQUIRE(!v.primitive);
  REQUIRE(v.reason == PrimitivityReason::not_coprime);

  v = is_primitive(Word());
  REQUIRE(!v.primitive);
  REQUIRE(v.reason == PrimitivityReason::not_coprime);

  // Coprime pair but the wrong conjugacy class.
  v = is_primitive(W("xxyyy"));
  REQUIRE(!v.primitive);
  REQUIRE(v.reason == PrimitivityReason::not_conjugate_to_canonical);

  v = is_primitive(W("y"));
  REQUIRE(v.primitive);
}

TEST_CASE("primitivity agrees with the orbit on all short words") {
  OrbitSet orbit = primitive_orbit_up_to(7);
  for (const Word& w : reduced_words_up_to(7)) {
    PrimitivityVerdict v = is_primitive(w);
    REQUIRE(v.primitive == orbit.contains(w));
    if (v.primitive) {
      REQUIRE(reconstruct(*v.normal_form) == w);
    }
  }
}

TEST_CASE("second normal form refuses non-primitives") {
  REQUIRE_THROWS_AS(second_normal_form(W("xx")), NotPrimitiveError);
  REQUIRE_THROWS_AS(second_normal_form(W("xxyyy")), NotPrimitiveError);
  REQUIRE_THROWS_AS(second_normal_form(Word()), NotPrimitiveError);
  try {
    second_normal_form(W("xxyyy"));
    FAIL("expected a primitivity error");
  } catch (const NotPrimitiveError& e) {
    REQUIRE(std::string(e.code()) == "not-primitive");
  }
}

TEST_CASE("both sequences pins") {
  TwoSequences two = both_sequences(W("xy"));
  REQUIRE(two.canonical == seq_of("basicA:1"));
  REQUIRE(two.alternate == seq_of("basicB:0"));

  two = both_sequences(W("xyy"));
  REQUIRE(two.canonical == seq_of("basicB:1"));
  REQUIRE(two.alternate == seq_of("basicA:2"));

  two = both_sequences(W("xy^6"));
  REQUIRE(two.canonical == seq_of("basicB:5"));
  REQUIRE(two.alternate == seq_of("basicA:6"));

  two = both_sequences(W("xyyxy"));
  REQUIRE(two.canonical == seq_of("basicA:1,basicA:1"));
  REQUIRE(two.alternate == seq_of("basicB:0,basicA:1"));

  REQUIRE_THROWS_AS(both_sequences(W("y")), NotApplicableError);
  REQUIRE_THROWS_AS(both_sequences(W("x")), NotApplicableError);
  REQUIRE_THROWS_AS(both_sequences(W("Y")), NotApplicableError);
  REQUIRE_THROWS_AS(both_sequences(W("Xyx")), NotApplicableError);
  REQUIRE_THROWS_AS(both_sequences(W("xyXY")), NotPrimitiveError);
  REQUIRE_THROWS_AS(both_sequences(W("xx")), NotPrimitiveError);
}

TEST_CASE("both sequences carry y to the same core everywhere") {
  for (const Word& w : primitive_words_up_to(8)) {
    ExponentPair e = exponent_pair(w);
    if (std::llabs(e.x) + std::llabs(e.y) <= 1) continue;
    TwoSequences two = both_sequences(w);
    REQUIRE(two.canonical != two.alternate);
    REQUIRE(two.canonical.size() == two.alternate.size());
    REQUIRE(apply_seq(two.canonical, y_word()) ==
            apply_seq(two.alternate, y_word()));
  }
}

TEST_CASE("no third sequence of the same length exists for small cores") {
  // Enumerate every basic-move sequence of the canonical length with small
  // parameters and count which ones hit the core word: the seed ambiguity
  // gives exactly two.
  for (auto [x, y] : coprime_pairs_signed(7)) {
    if (x < 1 || y < x || x + y <= 2) continue;
    Word core = construct_core(x, y);
    AutoSeq canon = canonical_basic_sequence(x, y);
    const long long max_n = 8;

    std::vector<AutoSeq> hits;
    std::vector<AutoSeq> frontier = {{}};
    for (std::size_t depth = 0; depth < canon.size(); ++depth) {
      std::vector<AutoSeq> next;
      for (const AutoSeq& seq : frontier) {
        for (long long n = 0; n <= max_n; ++n) {
          for (Orientation o : {Orientation::a, Orientation::b}) {
            AutoSeq ext = seq;
            ext.push_back(AutoGen::basic(n, o));
            // Prune on the abelianization: the pair must stay on course.
            Word image = apply_seq(ext, y_word());
            if (image.size() > core.size()) continue;
            next.push_back(std::move(ext));
          }
        }
      }
      frontier = std::move(next);
    }
    for (const AutoSeq& seq : frontier) {
      if (apply_seq(seq, y_word()) == core) hits.push_back(seq);
    }
    REQUIRE(hits.size() == 2);
  }
}
