#include "knotcert/interval.hpp"

#include <algorithm>
#include <cstring>

#include "knotcert/errors.hpp"

namespace knotcert {

RealInterval::RealInterval() {
  mpfr_init2(lo_, 64);
  mpfr_init2(hi_, 64);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept {
  mpfr_init2(lo_, 64);
  mpfr_init2(hi_, 64);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

mpfr_prec_t RealInterval::precision() const { return mpfr_get_prec(lo_); }

RealInterval RealInterval::from_rational(const Rational& q, mpfr_prec_t prec) {
  RealInterval r;
  mpfr_set_prec(r.lo_, prec);
  mpfr_set_prec(r.hi_, prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_endpoints(const Rational& lo, const Rational& hi,
                                          mpfr_prec_t prec) {
  if (lo > hi) fail(Errc::BadInput, "interval endpoints out of order");
  RealInterval r;
  mpfr_set_prec(r.lo_, prec);
  mpfr_set_prec(r.hi_, prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::zero(mpfr_prec_t prec) {
  return from_rational(Rational(0), prec);
}

RealInterval RealInterval::pi(mpfr_prec_t prec) {
  RealInterval r;
  mpfr_set_prec(r.lo_, prec);
  mpfr_set_prec(r.hi_, prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::operator+(const RealInterval& o) const {
  RealInterval r;
  mpfr_prec_t p = std::max(precision(), o.precision());
  mpfr_set_prec(r.lo_, p);
  mpfr_set_prec(r.hi_, p);
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::operator-(const RealInterval& o) const { return *this + (-o); }

RealInterval RealInterval::operator-() const {
  RealInterval r;
  mpfr_prec_t p = precision();
  mpfr_set_prec(r.lo_, p);
  mpfr_set_prec(r.hi_, p);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
  RealInterval r;
  mpfr_prec_t p = std::max(precision(), o.precision());
  mpfr_set_prec(r.lo_, p);
  mpfr_set_prec(r.hi_, p);
  mpfr_t c, best_lo, best_hi;
  mpfr_init2(c, p);
  mpfr_init2(best_lo, p);
  mpfr_init2(best_hi, p);
  bool first = true;
  const mpfr_srcptr xs[2] = {lo_, hi_};
  const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(c, xs[i], ys[j], MPFR_RNDD);
      if (first || mpfr_cmp(c, best_lo) < 0) mpfr_set(best_lo, c, MPFR_RNDD);
      mpfr_mul(c, xs[i], ys[j], MPFR_RNDU);
      if (first || mpfr_cmp(c, best_hi) > 0) mpfr_set(best_hi, c, MPFR_RNDU);
      first = false;
    }
  mpfr_set(r.lo_, best_lo, MPFR_RNDD);
  mpfr_set(r.hi_, best_hi, MPFR_RNDU);
  mpfr_clear(c);
  mpfr_clear(best_lo);
  mpfr_clear(best_hi);
  return r;
}

RealInterval RealInterval::operator/(const RealInterval& o) const {
  if (o.contains_zero()) fail(Errc::BadInput, "interval division by interval containing zero");
  RealInterval inv;
  mpfr_prec_t p = std::max(precision(), o.precision());
  mpfr_set_prec(inv.lo_, p);
  mpfr_set_prec(inv.hi_, p);
  mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
  return *this * inv;
}

RealInterval RealInterval::scaled(const Rational& k) const {
  return *this * from_rational(k, precision());
}

RealInterval RealInterval::acos() const {
  RealInterval r;
  mpfr_prec_t p = precision();
  mpfr_set_prec(r.lo_, p);
  mpfr_set_prec(r.hi_, p);
  mpfr_t x;
  mpfr_init2(x, p);
  // acos is decreasing: image of [lo, hi] is [acos(hi), acos(lo)]
  mpfr_set(x, hi_, MPFR_RNDU);
  if (mpfr_cmp_si(x, 1) > 0) mpfr_set_si(x, 1, MPFR_RNDN);
  if (mpfr_cmp_si(x, -1) < 0) mpfr_set_si(x, -1, MPFR_RNDN);
  mpfr_acos(r.lo_, x, MPFR_RNDD);
  mpfr_set(x, lo_, MPFR_RNDD);
  if (mpfr_cmp_si(x, 1) > 0) mpfr_set_si(x, 1, MPFR_RNDN);
  if (mpfr_cmp_si(x, -1) < 0) mpfr_set_si(x, -1, MPFR_RNDN);
  mpfr_acos(r.hi_, x, MPFR_RNDU);
  mpfr_clear(x);
  return r;
}

RealInterval RealInterval::log_abs() const {
  if (contains_zero()) fail(Errc::BadInput, "log of interval containing zero");
  RealInterval r;
  mpfr_prec_t p = precision();
  mpfr_set_prec(r.lo_, p);
  mpfr_set_prec(r.hi_, p);
  mpfr_t a, b;
  mpfr_init2(a, p);
  mpfr_init2(b, p);
  // |.| maps a sign-definite interval to [min|.|, max|.|]
  if (mpfr_sgn(lo_) > 0) {
    mpfr_abs(a, lo_, MPFR_RNDD);
    mpfr_abs(b, hi_, MPFR_RNDU);
  } else {
    mpfr_abs(a, hi_, MPFR_RNDD);
    mpfr_abs(b, lo_, MPFR_RNDU);
  }
  mpfr_log(r.lo_, a, MPFR_RNDD);
  mpfr_log(r.hi_, b, MPFR_RNDU);
  mpfr_clear(a);
  mpfr_clear(b);
  return r;
}

RealInterval RealInterval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) fail(Errc::BadInput, "sqrt of negative interval");
  RealInterval r;
  mpfr_prec_t p = precision();
  mpfr_set_prec(r.lo_, p);
  mpfr_set_prec(r.hi_, p);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

bool RealInterval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RealInterval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

int RealInterval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

bool RealInterval::definitely_greater(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}

bool RealInterval::definitely_less(const Rational& q) const {
  return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0;
}

Rational RealInterval::lo_rational() const {
  if (!mpfr_number_p(lo_)) fail(Errc::BadInput, "non-finite interval endpoint");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

Rational RealInterval::hi_rational() const {
  if (!mpfr_number_p(hi_)) fail(Errc::BadInput, "non-finite interval endpoint");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

Rational RealInterval::width() const { return hi_rational() - lo_rational(); }

double RealInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

namespace {

std::string format_fixed(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
  char buf[128];
  std::string fmt = "%." + std::to_string(digits) + "R*e";
  mpfr_snprintf(buf, sizeof buf, fmt.c_str(), rnd, v);
  return buf;
}

}  // namespace

std::pair<std::string, std::string> RealInterval::decimal_endpoints(int digits) const {
  return {format_fixed(lo_, digits, MPFR_RNDD), format_fixed(hi_, digits, MPFR_RNDU)};
}

}  // namespace knotcert
