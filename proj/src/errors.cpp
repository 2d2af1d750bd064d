#include "knotcert/errors.hpp"

namespace knotcert {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::NotSquare: return "NotSquare";
    case Errc::Singular: return "Singular";
    case Errc::InvalidSeifertMatrix: return "InvalidSeifertMatrix";
    case Errc::SingularSeifertMatrix: return "SingularSeifertMatrix";
    case Errc::ZeroTwist: return "ZeroTwist";
    case Errc::ArfNonzero: return "ArfNonzero";
    case Errc::ArfUnknown: return "ArfUnknown";
    case Errc::InvalidOperator: return "InvalidOperator";
    case Errc::NotCertifiedAmphichiral: return "NotCertifiedAmphichiral";
    case Errc::NotAFamilyExpression: return "NotAFamilyExpression";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::MissingBound: return "MissingBound";
    case Errc::IntervalTooWide: return "IntervalTooWide";
    case Errc::AsymmetricP1: return "AsymmetricP1";
    case Errc::ParseError: return "ParseError";
    case Errc::BadInput: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace knotcert
