#ifndef KNOTCERT_ROOTS_HPP
#define KNOTCERT_ROOTS_HPP

#include <string>
#include <vector>

#include "knotcert/dense_poly.hpp"
#include "knotcert/laurent.hpp"
#include "knotcert/rational.hpp"

namespace knotcert {

/// Supported algebraic classes for nonzero roots: rationals, roots of
/// unity, and real quadratic irrationals a + b*sqrt(d) (d squarefree > 1).
/// Anything else (irreducible degree >= 3, non-cyclotomic complex
/// quadratics) is Unsupported and blocks downstream decisions honestly.
struct RootDescriptor {
  enum class Kind { Rational, RootOfUnity, Quadratic, Unsupported };
  Kind kind = Kind::Unsupported;
  int multiplicity = 1;
  // Rational
  Rational value;
  // RootOfUnity
  unsigned order = 0;
  // Quadratic: value = qa + qb*sqrt(qd)
  Rational qa, qb;
  Integer qd;
  // Unsupported: degree of the unclassified irreducible-or-unknown factor
  long degree = 0;

  static RootDescriptor rational(const Rational& v, int mult = 1);
  static RootDescriptor root_of_unity(unsigned order, int mult = 1);
  static RootDescriptor quadratic(const Rational& a, const Rational& b, const Integer& d,
                                  int mult = 1);
  static RootDescriptor unsupported(long deg, int mult = 1);

  bool same_value(const RootDescriptor& o) const;  // ignores multiplicity
  bool operator==(const RootDescriptor& o) const;
  std::string to_string() const;
  /// Minimal polynomial over Q (monic) for supported kinds.
  DensePoly minimal_polynomial() const;
  /// True for Rational and real Quadratic kinds.
  bool is_real_supported() const { return kind == Kind::Rational || kind == Kind::Quadratic; }
};

/// Complete multiset of nonzero complex roots of normalize(p), classified.
/// Pre: p nonzero and nonconstant after normalization.
std::vector<RootDescriptor> classify_roots(const LaurentPolynomial& p);

/// All rational roots of f, divided out of f in place.
std::vector<Rational> extract_rational_roots(DensePoly& f);

/// Degree-2 irreducible factors of a squarefree f with no rational roots,
/// found by pairing real roots with rational sum and product (exact
/// divisibility is the gatekeeper); divided out of f in place.  A leftover
/// degree-2 f is returned as-is even when its roots are complex.
std::vector<DensePoly> extract_real_quadratic_factors(DensePoly& f);

/// Roots a +- b*sqrt(d) (b > 0, d squarefree) of an irreducible rational
/// quadratic; nullopt when the roots are complex.
struct QuadraticRootPair {
  Rational a, b;
  Integer d;
};
std::optional<QuadraticRootPair> split_real_quadratic(const DensePoly& q);

/// Real algebraic number given by a squarefree defining polynomial and an
/// isolating enclosure; equality and order are decidable.
struct AlgebraicReal {
  DensePoly defining;  // squarefree, sign changes across the enclosure unless exact
  RootEnclosure enc;
  RootDescriptor descriptor;  // classification when supported

  bool is_exact_rational() const { return enc.exact(); }
  Rational rational_value() const { return enc.lo; }
};

/// Exact comparison of two algebraic reals (-1, 0, +1).
int compare(const AlgebraicReal& x, const AlgebraicReal& y);

/// Refines enc in place below the given width.
void refine_enclosure(AlgebraicReal& x, const Rational& width);

}  // namespace knotcert

#endif
