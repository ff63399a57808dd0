// A short tour of the library: builds a primitive word from an exponent
// pair, takes it apart again, and walks through the palindromic and normal
// closure structure. Run it after building:
//
//   ./build/tour

#include <iostream>

#include "primgen/construct.hpp"
#include "primgen/normal_closure.hpp"
#include "primgen/normal_form.hpp"
#include "primgen/oracle.hpp"
#include "primgen/palindrome.hpp"
#include "primgen/word.hpp"

using namespace primgen;

int main() {
  // Every coprime pair (X, Y) is the exponent pair of a primitive word,
  // found by a Euclidean descent on the pair.
  Construction c = construct(27, 34);
  std::cout << "construct(27, 34) = " << format_word(c.p) << "\n";
  std::cout << "descent:";
  for (const DescentStep& s : c.trace.steps) {
    std::cout << " (" << s.pair_in.x << "," << s.pair_in.y << ")->("
              << s.pair_out.x << "," << s.pair_out.y << ") via "
              << format_gen(s.phi);
  }
  std::cout << ", terminal seed " << format_word(c.trace.seed_word) << "\n\n";

  // Primitivity is decidable from the exponent pair alone plus one
  // conjugacy check, and comes with a full normal form.
  Word p = parse_word("Yxyyxyy");
  NormalForm nf = second_normal_form(p);
  std::cout << format_word(p) << " is primitive: phis=" << format_autoseq(nf.phis)
            << " gamma=" << nf.gamma << " delta=" << nf.delta
            << " epsilon=" << nf.epsilon << " v=" << format_word(nf.v) << "\n";
  std::cout << "reconstructed: " << format_word(reconstruct(nf)) << "\n\n";

  // Primitive words split into at most two palindromes, and have a two
  // sided form around a palindromic middle.
  PalindromeFactorization f = palindrome_factorization(p);
  std::cout << "palindrome factors:";
  for (const Word& w : f.factors) std::cout << " " << format_word(w);
  std::cout << "\n";
  HellingForm h = helling_form(p);
  std::cout << "two sided form: side=" << (h.side == HellingSide::yx ? "yx" : "xy")
            << " z=" << format_word(h.z) << " v=" << format_word(h.v) << "\n\n";

  // Normal closure membership is an exponent pair condition; membership is
  // certified by an explicit product of conjugates.
  Word q = parse_word("xy");
  Word r = concat(concat(invert(parse_word("xyy")), q), parse_word("xyy"));
  r = concat(r, q);
  std::cout << format_word(r) << " in ncl(" << format_word(q)
            << "): " << (in_normal_closure(r, q) ? "yes" : "no") << "\n";
  NclCertificate cert = certificate(r, q);
  std::cout << "certificate:";
  for (const NclEntry& e : cert.entries) {
    std::cout << " (" << (e.sign > 0 ? "+" : "-") << ", "
              << format_word(e.conjugator) << ")";
  }
  std::cout << "\n\n";

  // The orbit of x under the elementary automorphisms is an independent
  // route to the same notion of primitivity.
  OrbitSet orbit = primitive_orbit_up_to(5);
  std::cout << "primitive conjugacy classes up to length 5: "
            << orbit.members.size() << "\n";
  return 0;
}
