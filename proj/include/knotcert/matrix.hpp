#ifndef KNOTCERT_MATRIX_HPP
#define KNOTCERT_MATRIX_HPP

#include <vector>

#include "knotcert/rational.hpp"

namespace knotcert {

/// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(long rows, long cols);
  static IntMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  Integer& at(long r, long c) { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Integer& at(long r, long c) const { return e_[static_cast<std::size_t>(r * cols_ + c)]; }

  IntMatrix transpose() const;
  IntMatrix operator-() const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const;

  /// Block-diagonal sum.
  IntMatrix direct_sum(const IntMatrix& o) const;

  Integer det() const;  // fraction-free Bareiss; requires square

  uint64_t hash() const;

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<Integer> e_;
};

/// Dense rational matrix used for exact inverses and powers.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(long rows, long cols);
  explicit RatMatrix(const IntMatrix& m);
  static RatMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  Rational& at(long r, long c) { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& at(long r, long c) const { return e_[static_cast<std::size_t>(r * cols_ + c)]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const;

  Rational det() const;       // requires square
  RatMatrix inverse() const;  // throws Singular

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

/// Exact M^k by repeated squaring; M^0 = I, negative k inverts first.
/// Throws NotSquare / Singular.
RatMatrix matrix_power(const RatMatrix& m, long k);
inline RatMatrix matrix_power(const IntMatrix& m, long k) { return matrix_power(RatMatrix(m), k); }

}  // namespace knotcert

#endif
