#include "knotcert/matrix.hpp"

#include "knotcert/errors.hpp"

namespace knotcert {

IntMatrix::IntMatrix(long rows, long cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols), Integer(0)) {
  if (rows < 0 || cols < 0) fail(Errc::BadInput, "negative matrix dimensions");
}

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& x : m.e_) x = -x;
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::BadInput, "matrix shape mismatch");
  IntMatrix m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
  return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) fail(Errc::BadInput, "matrix shape mismatch");
  IntMatrix m(rows_, o.cols_);
  for (long r = 0; r < rows_; ++r)
    for (long k = 0; k < cols_; ++k) {
      const Integer& a = at(r, k);
      if (sgn(a) == 0) continue;
      for (long c = 0; c < o.cols_; ++c) m.at(r, c) += a * o.at(k, c);
    }
  return m;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& o) const {
  IntMatrix m(rows_ + o.rows_, cols_ + o.cols_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (long r = 0; r < o.rows_; ++r)
    for (long c = 0; c < o.cols_; ++c) m.at(rows_ + r, cols_ + c) = o.at(r, c);
  return m;
}

Integer IntMatrix::det() const {
  if (!square()) fail(Errc::NotSquare, "determinant of non-square matrix");
  const long n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination with row pivoting.
  IntMatrix a = *this;
  Integer prev = 1;
  int swaps = 0;
  for (long k = 0; k + 1 < n; ++k) {
    if (sgn(a.at(k, k)) == 0) {
      long p = -1;
      for (long r = k + 1; r < n; ++r)
        if (sgn(a.at(r, k)) != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      for (long c = 0; c < n; ++c) swap(a.at(k, c), a.at(p, c));
      ++swaps;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        Integer v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = v / prev;
      }
    prev = a.at(k, k);
  }
  Integer d = a.at(n - 1, n - 1);
  return (swaps % 2) ? Integer(-d) : d;
}

uint64_t IntMatrix::hash() const {
  uint64_t h = hash_combine(static_cast<uint64_t>(rows_), static_cast<uint64_t>(cols_));
  for (const auto& x : e_) h = hash_combine(h, hash_integer(x));
  return h;
}

RatMatrix::RatMatrix(long rows, long cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols), Rational(0)) {
  if (rows < 0 || cols < 0) fail(Errc::BadInput, "negative matrix dimensions");
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) at(r, c) = Rational(m.at(r, c));
}

RatMatrix RatMatrix::identity(long n) {
  RatMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) fail(Errc::BadInput, "matrix shape mismatch");
  RatMatrix m(rows_, o.cols_);
  for (long r = 0; r < rows_; ++r)
    for (long k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (sgn(a) == 0) continue;
      for (long c = 0; c < o.cols_; ++c) m.at(r, c) += a * o.at(k, c);
    }
  return m;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Rational RatMatrix::det() const {
  if (!square()) fail(Errc::NotSquare, "determinant of non-square matrix");
  const long n = rows_;
  if (n == 0) return 1;
  RatMatrix a = *this;
  Rational d(1);
  for (long k = 0; k < n; ++k) {
    long p = -1;
    for (long r = k; r < n; ++r)
      if (sgn(a.at(r, k)) != 0) {
        p = r;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != k) {
      for (long c = k; c < n; ++c) swap(a.at(k, c), a.at(p, c));
      d = -d;
    }
    d *= a.at(k, k);
    Rational inv = Rational(1) / a.at(k, k);
    for (long r = k + 1; r < n; ++r) {
      Rational f = a.at(r, k) * inv;
      if (sgn(f) == 0) continue;
      for (long c = k; c < n; ++c) a.at(r, c) -= f * a.at(k, c);
    }
  }
  return d;
}

RatMatrix RatMatrix::inverse() const {
  if (!square()) fail(Errc::NotSquare, "inverse of non-square matrix");
  const long n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (long k = 0; k < n; ++k) {
    long p = -1;
    for (long r = k; r < n; ++r)
      if (sgn(a.at(r, k)) != 0) {
        p = r;
        break;
      }
    if (p < 0) fail(Errc::Singular, "matrix is singular");
    if (p != k)
      for (long c = 0; c < n; ++c) {
        swap(a.at(k, c), a.at(p, c));
        swap(inv.at(k, c), inv.at(p, c));
      }
    Rational piv = a.at(k, k);
    for (long c = 0; c < n; ++c) {
      a.at(k, c) /= piv;
      inv.at(k, c) /= piv;
    }
    for (long r = 0; r < n; ++r) {
      if (r == k) continue;
      Rational f = a.at(r, k);
      if (sgn(f) == 0) continue;
      for (long c = 0; c < n; ++c) {
        a.at(r, c) -= f * a.at(k, c);
        inv.at(r, c) -= f * inv.at(k, c);
      }
    }
  }
  return inv;
}

RatMatrix matrix_power(const RatMatrix& m, long k) {
  if (!m.square()) fail(Errc::NotSquare, "power of non-square matrix");
  RatMatrix base = m;
  if (k < 0) {
    base = m.inverse();  // throws Singular when det = 0
    k = -k;
  }
  RatMatrix acc = RatMatrix::identity(m.rows());
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

}  // namespace knotcert
