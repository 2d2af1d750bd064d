#include "knotcert/dense_poly.hpp"

#include <algorithm>
#include <array>

#include "knotcert/errors.hpp"

namespace knotcert {

void DensePoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

DensePoly DensePoly::constant(const Rational& v) {
  DensePoly p;
  if (sgn(v) != 0) p.c_.push_back(v);
  return p;
}

Rational DensePoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

DensePoly DensePoly::operator+(const DensePoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return DensePoly(std::move(r));
}

DensePoly DensePoly::operator-(const DensePoly& o) const { return *this + (-o); }

DensePoly DensePoly::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x = -x;
  return DensePoly(std::move(r));
}

DensePoly DensePoly::operator*(const DensePoly& o) const {
  if (is_zero() || o.is_zero()) return DensePoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return DensePoly(std::move(r));
}

DensePoly DensePoly::scaled(const Rational& k) const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x *= k;
  return DensePoly(std::move(r));
}

DensePoly DensePoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

DensePoly DensePoly::derivative() const {
  if (c_.size() <= 1) return DensePoly();
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return DensePoly(std::move(r));
}

Rational DensePoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int DensePoly::sign_at_pos_infinity() const {
  if (is_zero()) return 0;
  return sgn(c_.back());
}

int DensePoly::sign_at_neg_infinity() const {
  if (is_zero()) return 0;
  int s = sgn(c_.back());
  return (degree() % 2 == 0) ? s : -s;
}

std::pair<DensePoly, DensePoly> DensePoly::divmod(const DensePoly& d) const {
  if (d.is_zero()) fail(Errc::BadInput, "polynomial division by zero");
  std::vector<Rational> rem = c_;
  long dd = d.degree();
  long dr = static_cast<long>(rem.size()) - 1;
  if (dr < dd) return {DensePoly(), *this};
  std::vector<Rational> quo(static_cast<std::size_t>(dr - dd + 1), Rational(0));
  const Rational& lead = d.leading();
  for (long k = dr; k >= dd; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] / lead;
    if (sgn(q) == 0) continue;
    quo[static_cast<std::size_t>(k - dd)] = q;
    for (long i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k - dd + i)] -= q * d.c_[static_cast<std::size_t>(i)];
  }
  return {DensePoly(std::move(quo)), DensePoly(std::move(rem))};
}

DensePoly DensePoly::divide_exact(const DensePoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) fail(Errc::BadInput, "inexact polynomial division");
  return q;
}

bool DensePoly::divides(const DensePoly& d) const {
  if (is_zero()) return d.is_zero();
  return d.divmod(*this).second.is_zero();
}

std::vector<Integer> primitive_integer_coeffs(const DensePoly& p) {
  if (p.is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, rat_den(c));
  std::vector<Integer> z;
  z.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = rat_num(c) * (den_lcm / rat_den(c));
    content = gcd(content, v);
    z.push_back(std::move(v));
  }
  if (sgn(z.back()) < 0) content = -content;
  for (auto& v : z) v /= content;
  return z;
}

namespace {

DensePoly from_integer_coeffs(const std::vector<Integer>& z) {
  std::vector<Rational> c;
  c.reserve(z.size());
  for (const auto& v : z) c.emplace_back(v);
  return DensePoly(std::move(c));
}

// ---- modular coprimality certificate ------------------------------------

constexpr uint64_t kModPrime = 0x1fffffffffffffffULL - 24;  // 2^61 - 25, prime

uint64_t mulmod(uint64_t a, uint64_t b) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % kModPrime);
}

uint64_t powmod(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a) { return powmod(a, kModPrime - 2); }

std::vector<uint64_t> reduce_mod(const std::vector<Integer>& z) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, 61);
  p -= 25;
  std::vector<uint64_t> r(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Integer v = z[i] % p;
    if (sgn(v) < 0) v += p;
    r[i] = v.get_ui();
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Degree of gcd over F_p; a valid lower bound for the rational gcd degree
// since neither leading coefficient vanishes mod p (inputs are exact-size
// reductions checked by the caller).
long modular_gcd_degree(std::vector<uint64_t> f, std::vector<uint64_t> g) {
  while (!g.empty()) {
    uint64_t inv_lead = invmod(g.back());
    while (f.size() >= g.size() && !f.empty()) {
      uint64_t q = mulmod(f.back(), inv_lead);
      std::size_t off = f.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i) {
        uint64_t sub = mulmod(q, g[i]);
        f[off + i] = (f[off + i] >= sub) ? f[off + i] - sub : f[off + i] + kModPrime - sub;
      }
      while (!f.empty() && f.back() == 0) f.pop_back();
    }
    std::swap(f, g);
  }
  return static_cast<long>(f.size()) - 1;
}

long zdeg(const std::vector<Integer>& p) { return static_cast<long>(p.size()) - 1; }

void ztrim(std::vector<Integer>& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::vector<Integer> zprimitive(std::vector<Integer> p) {
  Integer content = 0;
  for (const auto& c : p) content = gcd(content, c);
  if (sgn(content) == 0) return p;
  if (sgn(p.back()) < 0) content = -content;
  for (auto& c : p) c /= content;
  return p;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
std::vector<Integer> zprem(std::vector<Integer> r, const std::vector<Integer>& b) {
  const Integer lb = b.back();
  long e = zdeg(r) - zdeg(b) + 1;
  while (!r.empty() && zdeg(r) >= zdeg(b)) {
    Integer lead = r.back();
    for (auto& c : r) c *= lb;
    std::size_t off = static_cast<std::size_t>(zdeg(r) - zdeg(b));
    for (std::size_t i = 0; i < b.size(); ++i) r[off + i] -= lead * b[i];
    ztrim(r);
    --e;
  }
  // pad the scaling so the exponent matches prem exactly
  while (e-- > 0)
    for (auto& c : r) c *= lb;
  return r;
}

// Subresultant polynomial remainder sequence gcd over Z (primitive inputs),
// returned primitive with positive leading coefficient.
std::vector<Integer> integer_gcd_subresultant(std::vector<Integer> a, std::vector<Integer> b) {
  if (zdeg(a) < zdeg(b)) std::swap(a, b);
  if (b.empty()) return zprimitive(std::move(a));
  Integer g = 1, h = 1;
  while (true) {
    long d = zdeg(a) - zdeg(b);
    std::vector<Integer> r = zprem(a, b);
    if (r.empty()) return zprimitive(std::move(b));
    if (zdeg(r) == 0) return {Integer(1)};
    a = std::move(b);
    Integer divisor = g;
    for (long i = 0; i < d; ++i) divisor *= h;
    for (auto& c : r) c /= divisor;  // exact by the subresultant theory
    b = std::move(r);
    g = a.back();
    if (d > 0) {
      Integer gd = g;
      for (long i = 1; i < d; ++i) gd *= g;
      if (d == 1) {
        h = gd;
      } else {
        Integer hd = h;
        for (long i = 1; i < d - 1; ++i) hd *= h;
        h = gd / hd;
      }
    }
  }
}

}  // namespace

DensePoly poly_gcd(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto za = primitive_integer_coeffs(a);
  auto zb = primitive_integer_coeffs(b);
  auto g = integer_gcd_subresultant(za, zb);
  return from_integer_coeffs(g).monic();
}

bool poly_coprime(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  if (a.degree() == 0 || b.degree() == 0) return true;
  auto za = primitive_integer_coeffs(a);
  auto zb = primitive_integer_coeffs(b);
  auto ra = reduce_mod(za), rb = reduce_mod(zb);
  if (ra.size() == za.size() && rb.size() == zb.size() &&
      modular_gcd_degree(ra, rb) == 0)
    return true;
  return integer_gcd_subresultant(za, zb).size() == 1;
}

std::vector<std::pair<DensePoly, int>> squarefree_decomposition(const DensePoly& p) {
  std::vector<std::pair<DensePoly, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  DensePoly f = p.monic();
  DensePoly fp = f.derivative();
  DensePoly a = poly_gcd(f, fp);
  DensePoly b = f.divide_exact(a);
  DensePoly c = fp.divide_exact(a);
  DensePoly d = c - b.derivative();
  int i = 1;
  while (!(b.degree() == 0)) {
    DensePoly g = poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    b = b.divide_exact(g);
    c = d.divide_exact(g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

DensePoly cyclotomic(unsigned n) {
  // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<Rational> tn(n + 1, Rational(0));
  tn[0] = -1;
  tn[n] = 1;
  DensePoly num((std::vector<Rational>(tn)));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    num = num.divide_exact(cyclotomic(d));
  }
  return num;
}

Rational root_bound(const DensePoly& p) {
  if (p.is_zero() || p.degree() == 0) return Rational(1);
  Rational m(0);
  const Rational lead = abs(p.leading());
  for (long i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i)) / lead;
    if (r > m) m = r;
  }
  return m + 1;
}

SturmChain::SturmChain(const DensePoly& squarefree) : f_(squarefree) {
  if (f_.is_zero()) fail(Errc::ZeroPolynomial, "Sturm chain of zero polynomial");
  chain_.push_back(f_);
  DensePoly d = f_.derivative();
  if (!d.is_zero()) chain_.push_back(d);
  while (chain_.size() >= 2 && chain_.back().degree() > 0) {
    DensePoly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;
    // rescale to a primitive integer image to keep coefficients small
    auto z = primitive_integer_coeffs(r);
    std::vector<Rational> c(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i]);
    if (sgn(r.leading()) < 0)
      for (auto& x : c) x = -x;
    chain_.push_back(-DensePoly(std::move(c)));
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int var = 0, prev = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::variations_at_infinity(int dir) const {
  int var = 0, prev = 0;
  for (const auto& p : chain_) {
    int s = dir > 0 ? p.sign_at_pos_infinity() : p.sign_at_neg_infinity();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
  if (a > b) fail(Errc::BadInput, "count_roots needs a <= b");
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_all_real_roots() const {
  return variations_at_infinity(-1) - variations_at_infinity(+1);
}

std::vector<RootEnclosure> SturmChain::isolate(const Rational& a, const Rational& b) const {
  std::vector<RootEnclosure> out;
  struct Seg {
    Rational lo, hi;
    int count;
  };
  if (f_.sign_at(a) == 0 || f_.sign_at(b) == 0)
    fail(Errc::BadInput, "isolation window endpoint is a root");
  std::vector<Seg> stack{{a, b, count_roots(a, b)}};
  std::vector<RootEnclosure> found;
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      found.push_back({s.lo, s.hi});
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    if (f_.sign_at(mid) == 0) {
      found.push_back({mid, mid});
      // perturb the split so neither half has a root endpoint
      Rational eps = (s.hi - s.lo) / 1024;
      Rational ml = mid - eps, mr = mid + eps;
      while (f_.sign_at(ml) == 0) ml = (s.lo + ml) / 2;
      while (f_.sign_at(mr) == 0) mr = (mr + s.hi) / 2;
      stack.push_back({s.lo, ml, count_roots(s.lo, ml)});
      stack.push_back({mr, s.hi, count_roots(mr, s.hi)});
    } else {
      stack.push_back({s.lo, mid, count_roots(s.lo, mid)});
      stack.push_back({mid, s.hi, count_roots(mid, s.hi)});
    }
  }
  std::sort(found.begin(), found.end(),
            [](const RootEnclosure& x, const RootEnclosure& y) { return x.lo < y.lo; });
  return found;
}

std::vector<RootEnclosure> SturmChain::isolate_all() const {
  Rational b = root_bound(f_);
  while (f_.sign_at(-b) == 0 || f_.sign_at(b) == 0) b += 1;
  return isolate(-b, b);
}

void SturmChain::refine(RootEnclosure& e, const Rational& width) const {
  if (e.exact()) return;
  while (e.hi - e.lo > width) {
    Rational mid = (e.lo + e.hi) / 2;
    int s = f_.sign_at(mid);
    if (s == 0) {
      e.lo = e.hi = mid;
      return;
    }
    // keep the half containing the root: the sign at lo differs from mid
    if (f_.sign_at(e.lo) != s)
      e.hi = mid;
    else
      e.lo = mid;
  }
}

}  // namespace knotcert
