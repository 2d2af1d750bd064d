#ifndef KNOTCERT_RATIONAL_HPP
#define KNOTCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace knotcert {

// Arbitrary-precision integers and canonical rationals (gcd-reduced,
// positive denominator) back every exact computation in the library.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Integer rat_num(const Rational& q) { return q.get_num(); }
inline Integer rat_den(const Rational& q) { return q.get_den(); }

// "7", "-3/4"
std::string rational_to_string(const Rational& q);

// Accepts integers, a/b fractions and decimal literals such as "1.25" or
// "-3e-2"; decimals are converted exactly.
Rational rational_from_string(const std::string& s);

bool is_perfect_square(const Integer& n);

// Largest s with s^2 | n, so n = s^2 * kernel and kernel is squarefree.
// n must be positive.  Trial division with a perfect-square check on the
// cofactor; inputs in this library stay far below the bound where that
// could miss a square factor.
void squarefree_kernel(const Integer& n, Integer& kernel, Integer& square_part);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

uint64_t hash_integer(const Integer& z);
uint64_t hash_rational(const Rational& q);
inline uint64_t hash_combine(uint64_t h, uint64_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace knotcert

#endif
