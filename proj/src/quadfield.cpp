#include "knotcert/quadfield.hpp"

#include "knotcert/errors.hpp"

namespace knotcert {

int QuadExt::sign() const {
  if (sgn(r) == 0) return sgn(a);
  int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare |a| with |b|*sqrt(r) via squares
  int cmp2 = sgn(a * a - b * b * r);
  if (cmp2 == 0) return 0;  // possible when r is a rational square
  return cmp2 > 0 ? sa : sb;
}

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (sgn(n) != 0) return {a / n, -b / n, r};
  if (is_zero()) fail(Errc::Singular, "inverse of zero");
  // Zero norm with a nonzero value: r is a rational square s^2 and the
  // element equals the rational a + b*s.  Collapse to that rational.
  Integer nk, ns, dk, ds;
  squarefree_kernel(rat_num(r), nk, ns);
  squarefree_kernel(rat_den(r), dk, ds);
  if (nk != 1 || dk != 1) fail(Errc::Singular, "zero norm with irrational radicand");
  Rational s = make_rational(ns, ds);
  Rational v = a + b * s;
  return {Rational(1) / v, Rational(0), r};
}

QuadExt QuadExt::pow(long k) const {
  QuadExt base = *this;
  if (k < 0) {
    base = inverse();
    k = -k;
  }
  QuadExt acc = from_rational(1, r);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

QuadSymMatrix::QuadSymMatrix(long n, const Rational& radicand)
    : n_(n), e_(static_cast<std::size_t>(n * n), QuadExt(Rational(0), Rational(0), radicand)) {}

Inertia inertia(QuadSymMatrix m) {
  Inertia result;
  const long n = m.size();
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  long remaining = n;
  while (remaining > 0) {
    // diagonal pivot first
    long p = -1;
    for (long i = 0; i < n; ++i)
      if (!done[static_cast<std::size_t>(i)] && !m.at(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p >= 0) {
      const QuadExt piv = m.at(p, p);
      if (piv.sign() > 0)
        ++result.positive;
      else
        ++result.negative;
      done[static_cast<std::size_t>(p)] = true;
      --remaining;
      QuadExt inv = piv.inverse();
      for (long i = 0; i < n; ++i) {
        if (done[static_cast<std::size_t>(i)]) continue;
        QuadExt f = m.at(i, p) * inv;
        if (f.is_zero()) continue;
        for (long j = 0; j < n; ++j) {
          if (done[static_cast<std::size_t>(j)]) continue;
          m.at(i, j) = m.at(i, j) - f * m.at(p, j);
        }
      }
      continue;
    }
    // zero diagonal: look for a hyperbolic pair
    long pi = -1, pj = -1;
    for (long i = 0; i < n && pi < 0; ++i) {
      if (done[static_cast<std::size_t>(i)]) continue;
      for (long j = i + 1; j < n; ++j) {
        if (done[static_cast<std::size_t>(j)]) continue;
        if (!m.at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) {
      result.zero += remaining;
      return result;
    }
    // block [[0, d], [d, 0]] contributes one positive and one negative
    const QuadExt d = m.at(pi, pj);
    ++result.positive;
    ++result.negative;
    done[static_cast<std::size_t>(pi)] = true;
    done[static_cast<std::size_t>(pj)] = true;
    remaining -= 2;
    QuadExt dinv = d.inverse();
    for (long i = 0; i < n; ++i) {
      if (done[static_cast<std::size_t>(i)]) continue;
      QuadExt u = m.at(i, pi);  // coefficient against row pi
      QuadExt v = m.at(i, pj);  // coefficient against row pj
      if (u.is_zero() && v.is_zero()) continue;
      for (long j = 0; j < n; ++j) {
        if (done[static_cast<std::size_t>(j)]) continue;
        // subtract [u v] * Binv * [m(pi,j); m(pj,j)], Binv = [[0,1/d],[1/d,0]]
        QuadExt corr = (u * m.at(pj, j) + v * m.at(pi, j)) * dinv;
        m.at(i, j) = m.at(i, j) - corr;
      }
    }
  }
  return result;
}

}  // namespace knotcert
