#ifndef KNOTCERT_ERRORS_HPP
#define KNOTCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotcert {

enum class Errc {
  ZeroPolynomial,
  ConstantPolynomial,
  NotSquare,
  Singular,
  InvalidSeifertMatrix,
  SingularSeifertMatrix,
  ZeroTwist,
  ArfNonzero,
  ArfUnknown,
  InvalidOperator,
  NotCertifiedAmphichiral,
  NotAFamilyExpression,
  IndexOutOfRange,
  LengthMismatch,
  MissingBound,
  IntervalTooWide,
  AsymmetricP1,
  ParseError,
  BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace knotcert

#endif
