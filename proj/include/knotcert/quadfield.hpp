#ifndef KNOTCERT_QUADFIELD_HPP
#define KNOTCERT_QUADFIELD_HPP

#include <vector>

#include "knotcert/rational.hpp"

namespace knotcert {

/// Element a + b*sqrt(r) of the real quadratic extension Q(sqrt(r)),
/// r a positive rational (not necessarily squarefree; r may even be a
/// rational square, in which case the field degenerates to Q and the sign
/// logic still answers exactly).
struct QuadExt {
  Rational a, b, r;

  QuadExt() : a(0), b(0), r(0) {}
  QuadExt(Rational a_, Rational b_, Rational r_) : a(std::move(a_)), b(std::move(b_)), r(std::move(r_)) {}
  static QuadExt from_rational(const Rational& v, const Rational& r) { return {v, Rational(0), r}; }

  bool is_rational() const { return sgn(b) == 0; }
  QuadExt conj() const { return {a, -b, r}; }
  Rational norm() const { return a * a - b * b * r; }

  QuadExt operator+(const QuadExt& o) const { return {a + o.a, b + o.b, r}; }
  QuadExt operator-(const QuadExt& o) const { return {a - o.a, b - o.b, r}; }
  QuadExt operator-() const { return {-a, -b, r}; }
  QuadExt operator*(const QuadExt& o) const {
    return {a * o.a + b * o.b * r, a * o.b + b * o.a, r};
  }
  QuadExt inverse() const;  // throws Singular on zero
  QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }
  bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }

  /// Exact sign of a + b*sqrt(r) as a real number.
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  /// x^k by repeated squaring; negative k inverts.
  QuadExt pow(long k) const;
};

/// Symmetric matrix inertia over Q(sqrt(r)): returns (positive, negative,
/// zero) eigenvalue counts by symmetric Gaussian elimination with
/// hyperbolic 2x2 pivots when the diagonal vanishes.
struct Inertia {
  long positive = 0, negative = 0, zero = 0;
  long signature() const { return positive - negative; }
};

class QuadSymMatrix {
 public:
  QuadSymMatrix(long n, const Rational& radicand);
  long size() const { return n_; }
  QuadExt& at(long i, long j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const QuadExt& at(long i, long j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

 private:
  long n_;
  std::vector<QuadExt> e_;
};

Inertia inertia(QuadSymMatrix m);

}  // namespace knotcert

#endif
