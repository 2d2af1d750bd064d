#include "knotcert/roots.hpp"

#include <algorithm>

#include "knotcert/errors.hpp"

namespace knotcert {

RootDescriptor RootDescriptor::rational(const Rational& v, int mult) {
  RootDescriptor d;
  d.kind = Kind::Rational;
  d.value = v;
  d.multiplicity = mult;
  return d;
}

RootDescriptor RootDescriptor::root_of_unity(unsigned order, int mult) {
  RootDescriptor d;
  d.kind = Kind::RootOfUnity;
  d.order = order;
  d.multiplicity = mult;
  return d;
}

RootDescriptor RootDescriptor::quadratic(const Rational& a, const Rational& b, const Integer& dd,
                                         int mult) {
  RootDescriptor d;
  d.kind = Kind::Quadratic;
  d.qa = a;
  d.qb = b;
  d.qd = dd;
  d.multiplicity = mult;
  return d;
}

RootDescriptor RootDescriptor::unsupported(long deg, int mult) {
  RootDescriptor d;
  d.kind = Kind::Unsupported;
  d.degree = deg;
  d.multiplicity = mult;
  return d;
}

bool RootDescriptor::same_value(const RootDescriptor& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Rational: return value == o.value;
    case Kind::RootOfUnity: return order == o.order;
    case Kind::Quadratic: return qa == o.qa && qb == o.qb && qd == o.qd;
    case Kind::Unsupported: return false;
  }
  return false;
}

bool RootDescriptor::operator==(const RootDescriptor& o) const {
  return same_value(o) && multiplicity == o.multiplicity;
}

std::string RootDescriptor::to_string() const {
  switch (kind) {
    case Kind::Rational: return rational_to_string(value);
    case Kind::RootOfUnity: return "zeta(" + std::to_string(order) + ")";
    case Kind::Quadratic:
      return rational_to_string(qa) + (sgn(qb) < 0 ? " - " : " + ") +
             rational_to_string(abs(qb)) + "*sqrt(" + qd.get_str() + ")";
    case Kind::Unsupported: return "unsupported(deg " + std::to_string(degree) + ")";
  }
  return "?";
}

DensePoly RootDescriptor::minimal_polynomial() const {
  switch (kind) {
    case Kind::Rational:
      return DensePoly({-value, Rational(1)});
    case Kind::RootOfUnity:
      return cyclotomic(order);
    case Kind::Quadratic:
      // (t - a)^2 - b^2 d  =  t^2 - 2a t + (a^2 - b^2 d)
      return DensePoly({qa * qa - qb * qb * Rational(qd), Rational(-2) * qa, Rational(1)});
    case Kind::Unsupported:
      fail(Errc::BadInput, "no minimal polynomial for unsupported root");
  }
  fail(Errc::BadInput, "corrupt root descriptor");
}

// All rational roots of a polynomial, removed from f in place.
std::vector<Rational> extract_rational_roots(DensePoly& f) {
  std::vector<Rational> out;
  if (f.degree() < 1) return out;
  while (f.degree() >= 1 && sgn(f.coeff(0)) == 0) {
    f = f.divide_exact(DensePoly({Rational(0), Rational(1)}));
    out.push_back(Rational(0));
  }
  if (f.degree() < 1) return out;
  auto z = primitive_integer_coeffs(f);
  // candidate p/q: p | constant term, q | leading coefficient
  Integer a0 = z.front();
  Integer an = z.back();
  auto divisors = [](const Integer& n) {
    std::vector<Integer> out;
    Integer m = abs(n);
    for (Integer d = 1; d * d <= m; ++d) {
      if (m % d != 0) continue;
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
    return out;
  };
  std::vector<Rational> candidates;
  for (const auto& p : divisors(a0))
    for (const auto& q : divisors(an)) {
      Rational r = make_rational(p, q);
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    while (f.degree() >= 1 && sgn(f.evaluate(r)) == 0) {
      out.push_back(r);
      f = f.divide_exact(DensePoly({-r, Rational(1)}));
    }
    if (f.degree() < 1) break;
  }
  return out;
}

namespace {

// Removes every cyclotomic factor Phi_n with n >= 3 (1 and 2 are the
// rational roots +-1, handled earlier) and reports the orders found.
std::vector<unsigned> extract_cyclotomic_factors(DensePoly& f) {
  std::vector<unsigned> out;
  if (f.degree() < 2) return out;
  const unsigned long dmax = static_cast<unsigned long>(f.degree());
  // phi(n) >= sqrt(n/2)  =>  n <= 2*phi(n)^2 + 1
  const unsigned long nmax = 2 * dmax * dmax + 2;
  for (unsigned long n = 3; n <= nmax && f.degree() >= 2; ++n) {
    unsigned long phi = euler_phi(n);
    if (phi > static_cast<unsigned long>(f.degree())) continue;
    DensePoly cn = cyclotomic(static_cast<unsigned>(n));
    if (cn.divides(f)) {
      f = f.divide_exact(cn);
      out.push_back(static_cast<unsigned>(n));
    }
  }
  return out;
}

struct QuadraticSplit {
  Rational a, b;  // roots a +- b*sqrt(d), b > 0
  Integer d;
  bool real = false;
};

// Splits an irreducible (over Q) quadratic u2 t^2 + u1 t + u0.
QuadraticSplit split_quadratic(const DensePoly& q) {
  QuadraticSplit s;
  Rational u2 = q.coeff(2), u1 = q.coeff(1), u0 = q.coeff(0);
  Rational disc = u1 * u1 - 4 * u2 * u0;
  if (sgn(disc) <= 0) return s;  // complex pair
  // disc = (p/q)^2 * kernel with kernel squarefree
  Integer num_k, num_s, den_k, den_s;
  squarefree_kernel(rat_num(disc), num_k, num_s);
  squarefree_kernel(rat_den(disc), den_k, den_s);
  // sqrt(disc) = (num_s / (den_s * den_k)) * sqrt(num_k * den_k)
  s.d = num_k * den_k;
  Rational scale = make_rational(num_s, den_s * den_k);
  s.a = -u1 / (2 * u2);
  s.b = scale / (2 * u2);
  if (sgn(s.b) < 0) s.b = -s.b;
  s.real = true;
  return s;
}

// Attempts to extract degree-2 irreducible factors with two real roots
// from a squarefree polynomial with no rational roots, by pairing real
// roots whose sum and product are rational.  Exact divisibility is the
// gatekeeper, so wrong candidates are harmless.
std::vector<DensePoly> extract_real_quadratic_factors(DensePoly& f) {
  std::vector<DensePoly> out;
  if (f.degree() < 2) return out;
  if (f.degree() == 2) {
    DensePoly q = f;
    f = DensePoly::constant(Rational(1));
    out.push_back(q);
    return out;
  }
  bool progress = true;
  while (progress && f.degree() >= 2) {
    progress = false;
    SturmChain chain(f);
    auto roots = chain.isolate_all();
    if (roots.size() < 2) break;
    const Rational width = make_rational(1, 1) / Rational(Integer(1) << 40);
    for (auto& r : roots) chain.refine(r, width);
    auto z = primitive_integer_coeffs(f);
    Integer lead = z.back();
    std::vector<Integer> lead_divs;
    for (Integer d = 1; d * d <= lead; ++d) {
      if (lead % d != 0) continue;
      lead_divs.push_back(d);
      if (d * d != lead) lead_divs.push_back(lead / d);
    }
    std::sort(lead_divs.begin(), lead_divs.end());
    auto nearest_with_denominator = [](const Rational& lo, const Rational& hi,
                                       const Integer& den) -> std::optional<Rational> {
      // unique p with lo <= p/den <= hi if the interval is tight enough
      Integer p_lo, p_hi;
      Rational slo = lo * Rational(den), shi = hi * Rational(den);
      mpz_cdiv_q(p_lo.get_mpz_t(), rat_num(slo).get_mpz_t(), rat_den(slo).get_mpz_t());
      mpz_fdiv_q(p_hi.get_mpz_t(), rat_num(shi).get_mpz_t(), rat_den(shi).get_mpz_t());
      if (p_lo > p_hi) return std::nullopt;
      if (p_hi - p_lo > 0) return std::nullopt;  // ambiguous; interval too wide
      return make_rational(p_lo, den);
    };
    for (std::size_t i = 0; i < roots.size() && !progress; ++i) {
      for (std::size_t j = i + 1; j < roots.size() && !progress; ++j) {
        Rational s_lo = roots[i].lo + roots[j].lo, s_hi = roots[i].hi + roots[j].hi;
        // product interval: all four corner products
        Rational c1 = roots[i].lo * roots[j].lo, c2 = roots[i].lo * roots[j].hi;
        Rational c3 = roots[i].hi * roots[j].lo, c4 = roots[i].hi * roots[j].hi;
        Rational p_lo = std::min(std::min(c1, c2), std::min(c3, c4));
        Rational p_hi = std::max(std::max(c1, c2), std::max(c3, c4));
        for (const auto& den : lead_divs) {
          auto s = nearest_with_denominator(s_lo, s_hi, den);
          auto p = nearest_with_denominator(p_lo, p_hi, den);
          if (!s || !p) continue;
          DensePoly cand({*p, -*s, Rational(1)});
          if (!cand.divides(f)) continue;
          out.push_back(cand);
          f = f.divide_exact(cand);
          progress = true;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<RootDescriptor> classify_roots(const LaurentPolynomial& p) {
  if (p.is_zero()) fail(Errc::ZeroPolynomial, "classify_roots of zero polynomial");
  LaurentPolynomial n = p.normalized();
  if (n.is_constant()) fail(Errc::ConstantPolynomial, "classify_roots of constant polynomial");
  DensePoly dense{n.dense_coeffs()};
  std::vector<RootDescriptor> out;
  for (auto& [sf, mult] : squarefree_decomposition(dense)) {
    DensePoly f = sf;
    for (const auto& r : extract_rational_roots(f)) {
      if (r == 1)
        out.push_back(RootDescriptor::root_of_unity(1, mult));
      else if (r == -1)
        out.push_back(RootDescriptor::root_of_unity(2, mult));
      else
        out.push_back(RootDescriptor::rational(r, mult));
    }
    for (unsigned order : extract_cyclotomic_factors(f))
      for (unsigned long i = 0; i < euler_phi(order); ++i)
        out.push_back(RootDescriptor::root_of_unity(order, mult));
    for (const auto& q : extract_real_quadratic_factors(f)) {
      QuadraticSplit s = split_quadratic(q);
      if (s.real) {
        out.push_back(RootDescriptor::quadratic(s.a, s.b, s.d, mult));
        out.push_back(RootDescriptor::quadratic(s.a, -s.b, s.d, mult));
      } else {
        out.push_back(RootDescriptor::unsupported(2, mult));
        out.push_back(RootDescriptor::unsupported(2, mult));
      }
    }
    if (f.degree() >= 1) out.push_back(RootDescriptor::unsupported(f.degree(), mult));
  }
  return out;
}

int compare(const AlgebraicReal& x, const AlgebraicReal& y) {
  if (x.is_exact_rational() && y.is_exact_rational())
    return cmp(x.rational_value(), y.rational_value());
  AlgebraicReal a = x, b = y;
  // Equality is decided through a shared factor with a root in the overlap:
  // each enclosure isolates exactly one root of its defining polynomial and
  // enclosure endpoints are never roots (unless exact), so a common root in
  // the overlap forces both numbers to equal it.
  DensePoly g = poly_gcd(a.defining, b.defining);
  for (;;) {
    if (a.enc.hi < b.enc.lo) return -1;
    if (b.enc.hi < a.enc.lo) return 1;
    if (g.degree() >= 1) {
      Rational lo = std::max(a.enc.lo, b.enc.lo), hi = std::min(a.enc.hi, b.enc.hi);
      bool common = sgn(g.evaluate(lo)) == 0;
      if (!common && lo < hi) common = SturmChain(g).count_roots(lo, hi) > 0;
      if (common) return 0;
    }
    Rational wa = (a.enc.hi - a.enc.lo) / 2;
    Rational wb = (b.enc.hi - b.enc.lo) / 2;
    refine_enclosure(a, wa);
    refine_enclosure(b, wb);
  }
}

void refine_enclosure(AlgebraicReal& x, const Rational& width) {
  if (x.enc.exact()) return;
  SturmChain chain(x.defining);
  chain.refine(x.enc, width);
}

}  // namespace knotcert
