#ifndef KNOTCERT_LAURENT_HPP
#define KNOTCERT_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "knotcert/rational.hpp"

namespace knotcert {

/// Exact rational-coefficient polynomial in t with integer exponents of
/// either sign.  The zero polynomial is the empty term map; stored
/// coefficients are never zero.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const Rational& c);

  static LaurentPolynomial monomial(const Rational& c, long exp);
  static LaurentPolynomial variable() { return monomial(1, 1); }
  static LaurentPolynomial one() { return LaurentPolynomial(Rational(1)); }

  /// Builds c0 + c1 t + ... + cd t^d from dense coefficients.
  static LaurentPolynomial from_dense(const std::vector<Rational>& coeffs, long shift = 0);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  long min_exp() const;  // requires nonzero
  long max_exp() const;  // requires nonzero
  long span_degree() const { return is_zero() ? 0 : max_exp() - min_exp(); }
  const std::map<long, Rational>& terms() const { return terms_; }
  Rational coeff(long exp) const;
  Rational leading_coeff() const;  // coefficient of max_exp; requires nonzero

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  LaurentPolynomial scaled(const Rational& c) const;
  LaurentPolynomial shifted(long dexp) const;  // multiply by t^dexp

  /// p(t^n) for nonzero n (n may be negative).
  LaurentPolynomial compose_power(long n) const;
  /// p(t^-1).
  LaurentPolynomial invert_variable() const { return compose_power(-1); }

  /// Exact evaluation; negative exponents require at != 0.
  Rational evaluate(const Rational& at) const;

  /// Canonical representative of the equivalence class p ~ u*t^k*p:
  /// minimum exponent 0, nonzero constant term, positive leading
  /// coefficient.  Throws ZeroPolynomial on 0.
  LaurentPolynomial normalized() const;

  /// normalized() followed by division by the leading coefficient.
  LaurentPolynomial monic_normalized() const;

  bool is_symmetric() const;  // normalize(p) == normalize(p(t^-1)); p != 0

  /// Dense coefficients of the min-exp-0 shift (requires nonzero).
  std::vector<Rational> dense_coeffs() const;

  uint64_t hash() const;
  std::string to_string() const;

  void set_coeff(long exp, const Rational& c);

 private:
  std::map<long, Rational> terms_;
};

LaurentPolynomial normalize(const LaurentPolynomial& p);
LaurentPolynomial lp_gcd(const LaurentPolynomial& p, const LaurentPolynomial& q);
bool is_symmetric(const LaurentPolynomial& p);

/// Parses the shared polynomial grammar: signed integer or a/b rational
/// coefficients, variable t, ^ with possibly negative integer exponents,
/// + - * and parentheses.  Whitespace insignificant.  Errors report the
/// offending position.
LaurentPolynomial parse_polynomial(const std::string& text);

}  // namespace knotcert

#endif
