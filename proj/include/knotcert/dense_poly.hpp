#ifndef KNOTCERT_DENSE_POLY_HPP
#define KNOTCERT_DENSE_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "knotcert/rational.hpp"

namespace knotcert {

/// Ordinary (nonnegative-exponent) polynomial over the rationals, stored
/// densely with no trailing zero coefficient.  Internal engine for gcd,
/// Sturm chains and root isolation; module boundaries speak
/// LaurentPolynomial.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static DensePoly constant(const Rational& v);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(long i) const;

  DensePoly operator+(const DensePoly& o) const;
  DensePoly operator-(const DensePoly& o) const;
  DensePoly operator*(const DensePoly& o) const;
  DensePoly operator-() const;
  bool operator==(const DensePoly& o) const { return c_ == o.c_; }

  DensePoly scaled(const Rational& k) const;
  DensePoly monic() const;
  DensePoly derivative() const;
  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(evaluate(x)); }
  int sign_at_pos_infinity() const;
  int sign_at_neg_infinity() const;

  /// Quotient and remainder over the rational field.
  std::pair<DensePoly, DensePoly> divmod(const DensePoly& d) const;
  /// Exact division: throws if the remainder is nonzero.
  DensePoly divide_exact(const DensePoly& d) const;
  bool divides(const DensePoly& d) const;  // *this | d

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Primitive integer image (content removed) of a rational polynomial,
/// with positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const DensePoly& p);

/// Monic gcd over Q[t].  Zero arguments behave as gcd identities.
DensePoly poly_gcd(const DensePoly& a, const DensePoly& b);

/// True iff gcd(a, b) is constant.  Uses a single-prime modular
/// certificate when it applies and falls back to the exact gcd.
bool poly_coprime(const DensePoly& a, const DensePoly& b);

/// Yun squarefree decomposition: p = prod f_i^i over the returned list of
/// (f_i, i) with f_i squarefree, pairwise coprime, nonconstant.
std::vector<std::pair<DensePoly, int>> squarefree_decomposition(const DensePoly& p);

/// n-th cyclotomic polynomial.
DensePoly cyclotomic(unsigned n);
unsigned long euler_phi(unsigned long n);

/// Closed interval with rational endpoints enclosing one real algebraic
/// number; lo == hi means the number is known exactly.
struct RootEnclosure {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
};

/// Sturm chain of a squarefree polynomial.
class SturmChain {
 public:
  explicit SturmChain(const DensePoly& squarefree);
  /// Number of roots in (a, b]; requires a <= b.
  int count_roots(const Rational& a, const Rational& b) const;
  int count_all_real_roots() const;
  /// Isolating enclosures for all real roots in (a, b), ascending.
  /// Endpoints of returned enclosures are never roots unless exact().
  std::vector<RootEnclosure> isolate(const Rational& a, const Rational& b) const;
  std::vector<RootEnclosure> isolate_all() const;
  /// Shrinks the enclosure below the given width by bisection.
  void refine(RootEnclosure& e, const Rational& width) const;
  const DensePoly& poly() const { return f_; }

 private:
  int variations_at(const Rational& x) const;
  int variations_at_infinity(int dir) const;
  DensePoly f_;
  std::vector<DensePoly> chain_;
};

/// Cauchy-style bound B with all real roots of p inside (-B, B).
Rational root_bound(const DensePoly& p);

}  // namespace knotcert

#endif
