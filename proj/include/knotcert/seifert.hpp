#ifndef KNOTCERT_SEIFERT_HPP
#define KNOTCERT_SEIFERT_HPP

#include <vector>

#include "knotcert/interval.hpp"
#include "knotcert/laurent.hpp"
#include "knotcert/matrix.hpp"
#include "knotcert/roots.hpp"

namespace knotcert {

/// Square integer matrix of even size 2g with unimodular skew part
/// det(V - V^T) = 1.  Size 0 is the unknot.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;  // unknot
  explicit SeifertMatrix(IntMatrix v);
  static SeifertMatrix unknot() { return SeifertMatrix(); }
  static SeifertMatrix from_rows(const std::vector<std::vector<long>>& rows);

  long size() const { return v_.rows(); }
  long genus() const { return size() / 2; }
  const IntMatrix& matrix() const { return v_; }
  bool operator==(const SeifertMatrix& o) const { return v_ == o.v_; }
  uint64_t hash() const { return v_.hash(); }

 private:
  IntMatrix v_;
};

/// Genus-one Seifert matrix [[m, 0], [-1, -m]] of the twist family member
/// with Alexander polynomial m^2 t^2 - (2m^2+1) t + m^2.  Throws ZeroTwist
/// on m = 0.
SeifertMatrix e_matrix(long m);

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);
SeifertMatrix mirror(const SeifertMatrix& v);   // -V^T
SeifertMatrix reverse(const SeifertMatrix& v);  // V^T

/// normalize(det(V - t V^T)); 1 for the unknot.
LaurentPolynomial alexander(const SeifertMatrix& v);

/// 0 iff |alexander(-1)| is congruent to +-1 mod 8 (determinant criterion).
int arf(const SeifertMatrix& v);

/// Exact rational matrix (V^-1)^T V; throws SingularSeifertMatrix.
RatMatrix t_star(const SeifertMatrix& v);

/// One signature jump candidate: a unit-circle root of the Alexander
/// polynomial recorded through x = 2 cos(theta), plus a certified rational
/// enclosure of theta/pi.
struct SignatureJump {
  AlgebraicReal x;
  Rational theta_over_pi_lo, theta_over_pi_hi;
};

/// Step function omega -> sigma_omega on the upper half circle.
/// arc_values[k] is the signature on the open arc between jump k-1 and
/// jump k (theta ascending, starting at theta = 0+); the value at a jump
/// is defined as the average of the adjacent arc values.
struct SignatureProfile {
  std::vector<SignatureJump> jumps;
  std::vector<long> arc_values;  // jumps.size() + 1 entries
  long classical_signature = 0;

  bool is_identically_zero() const;
  /// Signature at the jump with the given index, doubled to stay integral.
  long twice_value_at_jump(std::size_t k) const;
};

SignatureProfile signature_profile(const SeifertMatrix& v);

SignatureProfile profile_sum(const SignatureProfile& a, const SignatureProfile& b);
SignatureProfile profile_negate(const SignatureProfile& a);

/// Integral of the signature function over the normalized circle.
/// exact value = rational_part + sum of coeff * acos(x/2)/pi terms;
/// the enclosure certifies it to the requested tolerance.
class RhoZero {
 public:
  struct ArccosTerm {
    Rational coeff;
    AlgebraicReal x;
  };

  RhoZero() : rational_part_(0) {}
  RhoZero(Rational rational_part, std::vector<ArccosTerm> terms, const Rational& tol);

  const Rational& rational_part() const { return rational_part_; }
  const std::vector<ArccosTerm>& terms() const { return terms_; }
  const RealInterval& enclosure() const { return enclosure_; }
  const Rational& tolerance() const { return tol_; }

  bool is_exact_rational() const { return terms_.empty(); }
  bool is_exact_zero() const { return terms_.empty() && sgn(rational_part_) == 0; }
  bool exact_equals(const RhoZero& o) const;

  RhoZero operator+(const RhoZero& o) const;
  RhoZero operator-() const;

 private:
  void canonicalize_terms();
  void compute_enclosure();
  Rational rational_part_;
  std::vector<ArccosTerm> terms_;
  Rational tol_ = default_tolerance();
  RealInterval enclosure_;

 public:
  static Rational default_tolerance();  // 1e-9
};

RhoZero rho_zero(const SeifertMatrix& v, const Rational& tol = RhoZero::default_tolerance());
RhoZero rho_zero_of_profile(const SignatureProfile& p,
                            const Rational& tol = RhoZero::default_tolerance());

}  // namespace knotcert

#endif
