// primgen: command line front end for the primitive element library.
//
// Exit codes: 0 on success, 1 for usage problems (including malformed words
// and integers), 2 for domain errors, which are reported on stdout as a
// single line "ERR <code>: <message>".

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "primgen/automorphism.hpp"
#include "primgen/construct.hpp"
#include "primgen/errors.hpp"
#include "primgen/normal_closure.hpp"
#include "primgen/normal_form.hpp"
#include "primgen/oracle.hpp"
#include "primgen/palindrome.hpp"
#include "primgen/word.hpp"

namespace {

using nlohmann::ordered_json;
using namespace primgen;

constexpr const char* kUsage = R"(usage: primgen <command> [args] [--json]

commands:
  construct X Y            primitive word with exponent pair (X, Y)
  is-primitive WORD        decide primitivity, with a reason
  normal-form WORD         basic moves, sign flags and minimal conjugator
  palindromes WORD         factor a primitive word into at most two palindromes
  helling WORD             two sided form z s^-1 v t z^-1 with palindromic v
  ncl R P [--certificate]  is R in the normal closure of the primitive P
  find-primitive R         primitive p and k with pair(R) = k * pair(p)
  self-test                run the built in consistency checks
  help                     show this message

Words use the letters x, X, y, Y (uppercase marks an inverse), "1" for the
empty word, and powers such as y^3, X^-2 or (xy)^4. Output words are printed
letters only. --json switches every command to a JSON report on stdout.
)";

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n\n" << kUsage;
  return 1;
}

long long int_arg(const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("'" + s + "' is not an integer");
  }
  if (pos != s.size()) throw ParseError("'" + s + "' is not an integer");
  return v;
}

ordered_json pair_json(const ExponentPair& e) {
  return ordered_json::array({e.x, e.y});
}

ordered_json phis_json(const AutoSeq& seq) {
  ordered_json out = ordered_json::array();
  for (const AutoGen& g : seq) out.push_back(format_gen(g));
  return out;
}

ordered_json normal_form_json(const NormalForm& nf) {
  ordered_json j;
  j["phis"] = phis_json(nf.phis);
  j["gamma"] = nf.gamma;
  j["delta"] = nf.delta;
  j["epsilon"] = nf.epsilon;
  j["v"] = format_word(nf.v);
  j["v_tie_broken"] = nf.v_tie_broken;
  return j;
}

std::string normal_form_plain(const NormalForm& nf) {
  std::string out = "phis=";
  out += nf.phis.empty() ? "-" : format_autoseq(nf.phis);
  out += " gamma=" + std::to_string(nf.gamma);
  out += " delta=" + std::to_string(nf.delta);
  out += " epsilon=" + std::to_string(nf.epsilon);
  out += " v=" + format_word(nf.v);
  return out;
}

int cmd_construct(const std::vector<std::string>& args, bool json) {
  if (args.size() != 2) return usage_error("construct needs two integers");
  long long x = int_arg(args[0]);
  long long y = int_arg(args[1]);
  Construction c = construct(x, y);
  if (!json) {
    std::cout << format_word(c.p) << "\n";
    return 0;
  }
  ordered_json j;
  j["schema"] = 1;
  j["exponent_pair"] = pair_json({x, y});
  j["word"] = format_word(c.p);
  j["length"] = c.p.size();
  j["flags"] = {{"gamma", c.norm.gamma}, {"delta", c.norm.delta}, {"epsilon", c.norm.epsilon}};
  j["core_pair"] = pair_json(c.norm.core_pair);
  ordered_json steps = ordered_json::array();
  AutoSeq replay;
  for (auto it = c.trace.steps.rbegin(); it != c.trace.steps.rend(); ++it) {
    replay.push_back(it->phi);
  }
  for (const DescentStep& s : c.trace.steps) {
    ordered_json js;
    js["pair_in"] = pair_json(s.pair_in);
    js["pair_out"] = pair_json(s.pair_out);
    js["n"] = s.n;
    js["branch"] = s.branch == Branch::first ? "first" : "second";
    js["phi"] = format_gen(s.phi);
    steps.push_back(js);
  }
  j["trace"] = {{"terminal", pair_json(c.trace.terminal)},
                {"seed", format_word(c.trace.seed_word)},
                {"steps", steps}};
  j["replay"] = {{"seed", format_word(c.trace.seed_word)},
                 {"moves", format_autoseq(replay)}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

const char* reason_name(PrimitivityReason r) {
  switch (r) {
    case PrimitivityReason::primitive: return "primitive";
    case PrimitivityReason::not_coprime: return "not-coprime";
    case PrimitivityReason::not_conjugate_to_canonical: return "not-conjugate-to-canonical";
  }
  return "?";
}

int cmd_is_primitive(const std::vector<std::string>& args, bool json) {
  if (args.size() != 1) return usage_error("is-primitive needs one word");
  Word w = parse_word(args[0]);
  PrimitivityVerdict v = is_primitive(w);
  if (!json) {
    std::cout << (v.primitive ? "primitive" : "not-primitive") << "\n";
    return 0;
  }
  ordered_json j;
  j["schema"] = 1;
  j["word"] = format_word(w);
  j["primitive"] = v.primitive;
  j["reason"] = reason_name(v.reason);
  j["exponent_pair"] = pair_json(exponent_pair(w));
  if (v.normal_form) j["normal_form"] = normal_form_json(*v.normal_form);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_normal_form(const std::vector<std::string>& args, bool json) {
  if (args.size() != 1) return usage_error("normal-form needs one word");
  Word w = parse_word(args[0]);
  NormalForm nf = second_normal_form(w);
  if (!json) {
    std::cout << normal_form_plain(nf) << "\n";
    return 0;
  }
  ordered_json j;
  j["schema"] = 1;
  j["word"] = format_word(w);
  j["exponent_pair"] = pair_json(exponent_pair(w));
  ordered_json njson = normal_form_json(nf);
  for (auto& [k, val] : njson.items()) j[k] = val;
  j["reconstructed"] = format_word(reconstruct(nf));
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_palindromes(const std::vector<std::string>& args, bool json) {
  if (args.size() != 1) return usage_error("palindromes needs one word");
  Word w = parse_word(args[0]);
  PalindromeFactorization f = palindrome_factorization(w);
  Word product;
  for (const Word& piece : f.factors) product = concat(product, piece);
  bool verified = product == w;
  for (const Word& piece : f.factors) verified = verified && is_palindrome(piece);
  if (!json) {
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      if (i) std::cout << " ";
      std::cout << format_word(f.factors[i]);
    }
    std::cout << "\n";
    return 0;
  }
  ordered_json j;
  j["schema"] = 1;
  j["word"] = format_word(w);
  ordered_json fs = ordered_json::array();
  for (const Word& piece : f.factors) fs.push_back(format_word(piece));
  j["factors"] = fs;
  j["count"] = f.factors.size();
  j["verified"] = verified;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_helling(const std::vector<std::string>& args, bool json) {
  if (args.size() != 1) return usage_error("helling needs one word");
  Word w = parse_word(args[0]);
  HellingForm h = helling_form(w);
  const char* side = h.side == HellingSide::yx ? "yx" : "xy";
  if (!json) {
    std::cout << "side=" << side << " z=" << format_word(h.z)
              << " v=" << format_word(h.v) << "\n";
    return 0;
  }
  ordered_json j;
  j["schema"] = 1;
  j["word"] = format_word(w);
  j["side"] = side;
  j["z"] = format_word(h.z);
  j["v"] = format_word(h.v);
  j["verified"] = reassemble(h) == w;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_ncl(const std::vector<std::string>& args, bool json, bool want_cert) {
  if (args.size() != 2) return usage_error("ncl needs two words: R P");
  Word r = parse_word(args[0]);
  Word p = parse_word(args[1]);
  bool member = in_normal_closure(r, p);
  if (!json) {
    if (!want_cert) {
      std::cout << (member ? "member" : "not-member") << "\n";
      return 0;
    }
    NclCertificate cert = certificate(r, p);  // throws when not a member
    std::cout << "member\n";
    for (const NclEntry& e : cert.entries) {
      std::cout << (e.sign > 0 ? "+1 " : "-1 ") << format_word(e.conjugator) << "\n";
    }
    return 0;
  }
  ordered_json j;
  j["schema"] = 1;
  j["r"] = format_word(r);
  j["p"] = format_word(p);
  j["member"] = member;
  if (member) {
    auto mult = detail::pair_multiple(exponent_pair(r), exponent_pair(p));
    j["k"] = mult.k;
  }
  if (want_cert) {
    NclCertificate cert = certificate(r, p);
    ordered_json entries = ordered_json::array();
    for (const NclEntry& e : cert.entries) {
      entries.push_back({{"conjugator", format_word(e.conjugator)}, {"sign", e.sign}});
    }
    j["certificate"] = entries;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_find_primitive(const std::vector<std::string>& args, bool json) {
  if (args.size() != 1) return usage_error("find-primitive needs one word");
  Word r = parse_word(args[0]);
  PrimitiveForResult res = primitive_for(r);
  if (!json) {
    std::cout << format_word(res.p) << "\n";
    return 0;
  }
  ordered_json j;
  j["schema"] = 1;
  j["r"] = format_word(r);
  j["p"] = format_word(res.p);
  j["k"] = res.k;
  j["all_primitives"] = res.all_primitives;
  std::cout << j.dump(2) << "\n";
  return 0;
}

// Built in consistency sweep. Every library operation already validates its
// own output, so most checks just have to exercise the calls broadly; the
// interesting assertions are the cross checks between independent paths.
int cmd_self_test(bool json) {
  std::vector<std::pair<std::string, std::size_t>> done;
  std::mt19937 rng(20240817);

  auto random_reduced = [&rng](std::size_t len) {
    std::vector<Letter> ls;
    std::uniform_int_distribution<int> first(0, 3), rest(0, 2);
    for (std::size_t i = 0; i < len; ++i) {
      if (ls.empty()) {
        ls.push_back(static_cast<Letter>(first(rng)));
      } else {
        int c = rest(rng);
        Letter bad = inverse(ls.back());
        Letter l = static_cast<Letter>(c >= static_cast<int>(bad) ? c + 1 : c);
        ls.push_back(l);
      }
    }
    return Word::reduce(std::move(ls));
  };

  {
    std::size_t cases = 0;
    for (int i = 0; i < 500; ++i) {
      Word w = random_reduced(1 + i % 40);
      detail::check(parse_word(format_word(w)) == w, "self-test: text round trip");
      detail::check(concat(invert(w), w).empty(), "self-test: inverse cancels");
      ++cases;
    }
    done.emplace_back("text round trip and inverses", cases);
  }

  {
    OrbitSet orbit = primitive_orbit_up_to(6);
    std::size_t cases = 0;
    for (std::size_t len = 0; len <= 6; ++len) {
      for (const Word& w : all_reduced_words(len)) {
        bool via_orbit = orbit.contains(w);
        bool via_pair = is_primitive(w).primitive;
        detail::check(via_orbit == via_pair, "self-test: orbit and pair tests disagree");
        ++cases;
      }
    }
    done.emplace_back("primitivity against the automorphism orbit", cases);
  }

  {
    std::size_t cases = 0;
    for (long long x = -10; x <= 10; ++x) {
      for (long long y = -10; y <= 10; ++y) {
        if (std::gcd(x, y) != 1) continue;
        Word p = canonical_primitive(x, y);
        for (int t = 0; t < 3; ++t) {
          Word c = random_reduced(1 + static_cast<std::size_t>(t) * 2);
          Word pc = concat(concat(invert(c), p), c);
          NormalForm nf = second_normal_form(pc);
          detail::check(reconstruct(nf) == pc, "self-test: normal form round trip");
          palindrome_factorization(pc);
          helling_form(pc);
          conjugate_palindrome_form(pc);
          ++cases;
        }
      }
    }
    done.emplace_back("normal forms and palindromic forms on conjugates", cases);
  }

  {
    std::size_t cases = 0;
    for (long long x = 2; x <= 25; ++x) {
      for (long long y = x + 1; y <= 25; ++y) {
        if (std::gcd(x, y) != 1) continue;
        auto pre = enumerate_basic_preimages(x, y);
        for (std::size_t i = 0; i < pre.size(); ++i) {
          for (std::size_t k = i + 1; k < pre.size(); ++k) {
            detail::check(!(pre[i].pair == pre[k].pair),
                          "self-test: preimage pairs repeat");
          }
        }
        DescentStep step = descend(x, y).steps.front();
        bool found = false;
        for (const auto& b : pre) {
          found = found || (b.pair == step.pair_out && b.phi == step.phi);
        }
        detail::check(found, "self-test: descent step missing from preimages");
        cases += pre.size();
      }
    }
    done.emplace_back("basic move preimages", cases);
  }

  {
    std::size_t cases = 0;
    for (int t = 0; t < 200; ++t) {
      long long px = 1 + t % 5;
      long long py = 2 + (t * 7) % 9;
      if (std::gcd(px, py) != 1) continue;
      Word p = canonical_primitive(px, py);
      Word r;
      int pieces = 1 + t % 3;
      for (int i = 0; i < pieces; ++i) {
        Word f = random_reduced(static_cast<std::size_t>(t) % 4);
        Word piece = t % 2 ? p : invert(p);
        r = concat(r, concat(concat(invert(f), piece), f));
      }
      detail::check(in_normal_closure(r, p), "self-test: product of conjugates not a member");
      certificate(r, p);
      ++cases;
    }
    done.emplace_back("normal closure certificates", cases);
  }

  if (json) {
    ordered_json j;
    j["schema"] = 1;
    ordered_json checks = ordered_json::array();
    for (const auto& [name, cases] : done) {
      checks.push_back({{"name", name}, {"cases", cases}});
    }
    j["checks"] = checks;
    j["passed"] = true;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [name, cases] : done) {
      std::cout << "ok " << name << " (" << cases << " cases)\n";
    }
    std::cout << "self-test: " << done.size() << " checks passed\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> raw(argv + 1, argv + argc);
  bool json = false;
  bool want_cert = false;
  std::string cmd;
  std::vector<std::string> args;
  for (const std::string& a : raw) {
    if (a == "--json") {
      json = true;
    } else if (a == "--certificate") {
      want_cert = true;
    } else if (a.rfind("--", 0) == 0) {
      return usage_error("unknown flag '" + a + "'");
    } else if (cmd.empty()) {
      cmd = a;
    } else {
      args.push_back(a);
    }
  }
  if (cmd.empty() || cmd == "help") {
    std::cout << kUsage;
    return cmd.empty() ? 1 : 0;
  }
  if (want_cert && cmd != "ncl") {
    return usage_error("--certificate only applies to ncl");
  }

  try {
    if (cmd == "construct") return cmd_construct(args, json);
    if (cmd == "is-primitive") return cmd_is_primitive(args, json);
    if (cmd == "normal-form") return cmd_normal_form(args, json);
    if (cmd == "palindromes") return cmd_palindromes(args, json);
    if (cmd == "helling") return cmd_helling(args, json);
    if (cmd == "ncl") return cmd_ncl(args, json, want_cert);
    if (cmd == "find-primitive") return cmd_find_primitive(args, json);
    if (cmd == "self-test") {
      if (!args.empty()) return usage_error("self-test takes no arguments");
      return cmd_self_test(json);
    }
    return usage_error("unknown command '" + cmd + "'");
  } catch (const ParseError& e) {
    return usage_error(e.what());
  } catch (const Error& e) {
    std::cout << "ERR " << e.code() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
