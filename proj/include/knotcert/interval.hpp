#ifndef KNOTCERT_INTERVAL_HPP
#define KNOTCERT_INTERVAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "knotcert/rational.hpp"

namespace knotcert {

/// Closed floating interval [lo, hi] with outward-rounded arithmetic
/// (MPFR, explicit precision).  Every operation encloses the exact image;
/// the trusted exact paths never depend on it, but certified enclosures
/// (rho_0 numerics, dependence-candidate extraction) do.
class RealInterval {
 public:
  RealInterval();
  RealInterval(const RealInterval& o);
  RealInterval(RealInterval&& o) noexcept;
  RealInterval& operator=(const RealInterval& o);
  RealInterval& operator=(RealInterval&& o) noexcept;
  ~RealInterval();

  static RealInterval from_rational(const Rational& q, mpfr_prec_t prec);
  static RealInterval from_endpoints(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  static RealInterval zero(mpfr_prec_t prec);
  static RealInterval pi(mpfr_prec_t prec);

  mpfr_prec_t precision() const;

  RealInterval operator+(const RealInterval& o) const;
  RealInterval operator-(const RealInterval& o) const;
  RealInterval operator*(const RealInterval& o) const;
  RealInterval operator/(const RealInterval& o) const;  // requires 0 not in o
  RealInterval operator-() const;

  RealInterval scaled(const Rational& k) const;
  RealInterval acos() const;  // clamps arguments to [-1, 1]
  RealInterval log_abs() const;  // log |x|; requires 0 not in interval
  RealInterval sqrt() const;  // requires lo >= 0

  bool contains_zero() const;
  bool contains(const Rational& q) const;
  int sign() const;  // +1/-1 when certified, 0 when the interval straddles 0
  /// Certified strict comparisons against an exact rational.
  bool definitely_greater(const Rational& q) const;
  bool definitely_less(const Rational& q) const;

  Rational lo_rational() const;
  Rational hi_rational() const;
  /// Upper bound on the interval width as a rational.
  Rational width() const;

  double lo_double() const;
  double hi_double() const;

  /// Fixed-format decimal endpoint strings (outward rounded), for
  /// deterministic serialization.
  std::pair<std::string, std::string> decimal_endpoints(int digits) const;

 private:
  mpfr_t lo_, hi_;
};

}  // namespace knotcert

#endif
