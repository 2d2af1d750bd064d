#include "knotcert/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "knotcert/errors.hpp"

namespace knotcert {

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) fail(Errc::ParseError, "empty rational literal");
  // Decimal or scientific literal: convert exactly.
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
      if (s[i] == '.') {
        if (seen_dot) fail(Errc::ParseError, "malformed decimal: " + s);
        seen_dot = true;
      } else {
        digits += s[i];
        seen_digit = true;
        if (seen_dot) ++frac_digits;
      }
    }
    if (!seen_digit) fail(Errc::ParseError, "malformed decimal: " + s);
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
      ++i;
      try {
        std::size_t used = 0;
        exp10 = std::stol(s.substr(i), &used);
        i += used;
      } catch (const std::exception&) {
        fail(Errc::ParseError, "malformed exponent: " + s);
      }
    }
    if (i != s.size()) fail(Errc::ParseError, "trailing characters in rational: " + s);
    Integer mant(digits.empty() ? "0" : digits);
    if (neg) mant = -mant;
    long e = exp10 - frac_digits;
    Integer pow10 = 1;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    Rational q = e >= 0 ? Rational(mant * pow10) : make_rational(mant, pow10);
    q.canonicalize();
    return q;
  }
  try {
    Rational q(s);
    q.canonicalize();
    if (q.get_den() == 0) fail(Errc::ParseError, "zero denominator: " + s);
    return q;
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "malformed rational: " + s);
  }
}

bool is_perfect_square(const Integer& n) {
  if (sgn(n) < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

void squarefree_kernel(const Integer& n, Integer& kernel, Integer& square_part) {
  if (sgn(n) <= 0) fail(Errc::BadInput, "squarefree_kernel needs a positive integer");
  Integer rest = n;
  kernel = 1;
  square_part = 1;
  for (Integer p = 2; p * p <= rest && p < 2000000; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) square_part *= p;
    if (e % 2 == 1) kernel *= p;
  }
  if (rest > 1) {
    if (is_perfect_square(rest)) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      square_part *= r;
    } else {
      kernel *= rest;
    }
  }
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

uint64_t hash_integer(const Integer& z) {
  uint64_t h = sgn(z) < 0 ? 0x5bd1e995u : 0u;
  const mpz_srcptr p = z.get_mpz_t();
  int limbs = std::abs(p->_mp_size);
  for (int i = 0; i < limbs; ++i) h = hash_combine(h, static_cast<uint64_t>(p->_mp_d[i]));
  return h;
}

uint64_t hash_rational(const Rational& q) {
  return hash_combine(hash_integer(q.get_num()), hash_integer(q.get_den()));
}

}  // namespace knotcert
