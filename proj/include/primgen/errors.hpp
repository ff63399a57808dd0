#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace primgen {

// Domain failures carry a short machine-readable code (stable independently of
// the message text) so that callers such as the command line tool can map them
// onto exit diagnostics without string matching.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Requested exponent pair has gcd != 1, so no primitive element carries it.
struct NonCoprimeError : Error {
  explicit NonCoprimeError(const std::string& m) : Error("non-coprime", m) {}
};

// An operation that only makes sense for primitive elements was handed a
// word that is not primitive.
struct NotPrimitiveError : Error {
  explicit NotPrimitiveError(const std::string& m) : Error("not-primitive", m) {}
};

// Certificate requested for an element outside the normal closure.
struct NotInClosureError : Error {
  explicit NotInClosureError(const std::string& m) : Error("not-in-closure", m) {}
};

// The question is well posed only for part of the domain (for example, the
// two-sequence enumeration needs |X| + |Y| > 2).
struct NotApplicableError : Error {
  explicit NotApplicableError(const std::string& m) : Error("not-applicable", m) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& m) : Error("precondition", m) {}
};

// Guard rails on the exhaustive helpers (search depth, word sizes).
struct ResourceError : Error {
  explicit ResourceError(const std::string& m) : Error("resource", m) {}
};

// Malformed textual input. The command line tool treats this as a usage
// error rather than a domain error.
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("parse", m) {}
};

namespace detail {

// Internal consistency check. A failure here is a bug in the library, not a
// problem with caller input, hence logic_error instead of Error.
inline void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace detail

}  // namespace primgen
