#include "knotcert/laurent.hpp"

#include <cctype>

#include "knotcert/dense_poly.hpp"
#include "knotcert/errors.hpp"

namespace knotcert {

LaurentPolynomial::LaurentPolynomial(const Rational& c) {
  if (sgn(c) != 0) terms_[0] = c;
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, long exp) {
  LaurentPolynomial p;
  if (sgn(c) != 0) p.terms_[exp] = c;
  return p;
}

LaurentPolynomial LaurentPolynomial::from_dense(const std::vector<Rational>& coeffs, long shift) {
  LaurentPolynomial p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) p.terms_[static_cast<long>(i) + shift] = coeffs[i];
  return p;
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long LaurentPolynomial::min_exp() const {
  if (is_zero()) fail(Errc::ZeroPolynomial, "min_exp of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPolynomial::max_exp() const {
  if (is_zero()) fail(Errc::ZeroPolynomial, "max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPolynomial::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPolynomial::leading_coeff() const { return terms_.rbegin()->second; }

void LaurentPolynomial::set_coeff(long exp, const Rational& c) {
  if (sgn(c) == 0)
    terms_.erase(exp);
  else
    terms_[exp] = c;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r += o;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Rational& slot = r.terms_[e1 + e2];
      slot += c1 * c2;
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = sgn(it->second) == 0 ? r.terms_.erase(it) : std::next(it);
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& c) const {
  LaurentPolynomial r;
  if (sgn(c) == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(long dexp) const {
  LaurentPolynomial r;
  for (const auto& [e, v] : terms_) r.terms_[e + dexp] = v;
  return r;
}

LaurentPolynomial LaurentPolynomial::compose_power(long n) const {
  if (n == 0) fail(Errc::BadInput, "compose_power needs nonzero exponent");
  LaurentPolynomial r;
  for (const auto& [e, v] : terms_) r.terms_[e * n] = v;
  return r;
}

Rational LaurentPolynomial::evaluate(const Rational& at) const {
  if (is_zero()) return Rational(0);
  long lo = min_exp();
  if (lo < 0 && sgn(at) == 0) fail(Errc::BadInput, "evaluating negative exponents at 0");
  // Horner on the shifted dense form, then multiply by at^lo.
  auto coeffs = dense_coeffs();
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * at + *it;
  if (lo != 0) {
    Rational p(1);
    Rational base = lo > 0 ? at : Rational(rat_den(at), rat_num(at));
    long k = lo > 0 ? lo : -lo;
    for (long i = 0; i < k; ++i) p *= base;
    acc *= p;
  }
  return acc;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) fail(Errc::ZeroPolynomial, "normalize of zero polynomial");
  LaurentPolynomial r = shifted(-min_exp());
  if (sgn(r.leading_coeff()) < 0) r = -r;
  return r;
}

LaurentPolynomial LaurentPolynomial::monic_normalized() const {
  LaurentPolynomial r = normalized();
  return r.scaled(Rational(1) / r.leading_coeff());
}

bool LaurentPolynomial::is_symmetric() const {
  return normalized() == invert_variable().normalized();
}

std::vector<Rational> LaurentPolynomial::dense_coeffs() const {
  if (is_zero()) fail(Errc::ZeroPolynomial, "dense_coeffs of zero polynomial");
  long lo = min_exp(), hi = max_exp();
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (const auto& [e, v] : terms_) out[static_cast<std::size_t>(e - lo)] = v;
  return out;
}

uint64_t LaurentPolynomial::hash() const {
  uint64_t h = 0x243f6a8885a308d3ULL;
  for (const auto& [e, v] : terms_) {
    h = hash_combine(h, static_cast<uint64_t>(e));
    h = hash_combine(h, hash_rational(v));
  }
  return h;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long e = it->first;
    Rational c = it->second;
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) c = -c;
    const bool unit_coeff = c == 1;
    if (e == 0) {
      out += rational_to_string(c);
    } else {
      if (!unit_coeff) {
        out += rational_to_string(c);
        out += "*";
      }
      out += "t";
      if (e != 1) {
        out += "^";
        out += std::to_string(e);
      }
    }
    first = false;
  }
  return out;
}

LaurentPolynomial normalize(const LaurentPolynomial& p) { return p.normalized(); }

bool is_symmetric(const LaurentPolynomial& p) { return p.is_symmetric(); }

LaurentPolynomial lp_gcd(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.is_zero() && q.is_zero()) fail(Errc::ZeroPolynomial, "gcd of two zero polynomials");
  if (p.is_zero()) return q.monic_normalized();
  if (q.is_zero()) return p.monic_normalized();
  DensePoly a(p.normalized().dense_coeffs());
  DensePoly b(q.normalized().dense_coeffs());
  DensePoly g = poly_gcd(a, b);
  return LaurentPolynomial::from_dense(g.coeffs()).monic_normalized();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::ParseError, msg + " at position " + std::to_string(i));
  }

  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }

  bool consume(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }

  Integer parse_integer_digits() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) error("expected digits");
    return Integer(s.substr(start, i - start));
  }

  long parse_signed_small_int() {
    skip_ws();
    bool neg = false;
    if (consume('-'))
      neg = true;
    else
      consume('+');
    Integer v = parse_integer_digits();
    if (!v.fits_slong_p()) error("exponent out of range");
    long x = v.get_si();
    return neg ? -x : x;
  }

  LaurentPolynomial parse_expr() {
    LaurentPolynomial acc = parse_term();
    for (;;) {
      skip_ws();
      if (consume('+')) {
        acc += parse_term();
      } else if (consume('-')) {
        acc += -parse_term();
      } else {
        return acc;
      }
    }
  }

  LaurentPolynomial parse_term() {
    LaurentPolynomial acc = parse_factor();
    for (;;) {
      skip_ws();
      if (consume('*'))
        acc *= parse_factor();
      else
        return acc;
    }
  }

  LaurentPolynomial parse_factor() {
    skip_ws();
    int neg = 0;
    while (true) {
      if (consume('-'))
        ++neg;
      else if (consume('+'))
        ;
      else
        break;
    }
    LaurentPolynomial base = parse_atom();
    skip_ws();
    if (consume('^')) {
      long e = parse_signed_small_int();
      base = power(base, e);
    }
    return (neg % 2) ? -base : base;
  }

  LaurentPolynomial power(const LaurentPolynomial& base, long e) {
    if (e == 0) return LaurentPolynomial::one();
    if (e < 0) {
      // Only units +-c*t^k are invertible in the Laurent ring.
      if (base.is_zero() || base.terms().size() != 1)
        error("negative exponent of a non-invertible polynomial");
      const auto& [exp, c] = *base.terms().begin();
      LaurentPolynomial inv = LaurentPolynomial::monomial(Rational(1) / c, -exp);
      return power(inv, -e);
    }
    LaurentPolynomial acc = LaurentPolynomial::one();
    LaurentPolynomial sq = base;
    long k = e;
    while (k > 0) {
      if (k & 1) acc *= sq;
      k >>= 1;
      if (k) sq *= sq;
    }
    return acc;
  }

  LaurentPolynomial parse_atom() {
    skip_ws();
    if (i >= s.size()) error("unexpected end of input");
    if (consume('(')) {
      LaurentPolynomial inner = parse_expr();
      if (!consume(')')) error("expected ')'");
      return inner;
    }
    char c = s[i];
    if (c == 't') {
      ++i;
      return LaurentPolynomial::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_integer_digits();
      if (peek('/')) {
        std::size_t save = i;
        ++i;  // '/'
        skip_ws();
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          Integer den = parse_integer_digits();
          if (sgn(den) == 0) error("zero denominator");
          return LaurentPolynomial(make_rational(num, den));
        }
        i = save;
      }
      return LaurentPolynomial(Rational(num));
    }
    error(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

LaurentPolynomial parse_polynomial(const std::string& text) {
  Parser p(text);
  LaurentPolynomial r = p.parse_expr();
  p.skip_ws();
  if (p.i != text.size()) p.error("trailing input");
  return r;
}

}  // namespace knotcert
