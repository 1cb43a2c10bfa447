#pragma once

#include <string>

#include "adm/poly.hpp"

namespace adm {

/// Reduced quotient num/den of polynomials in E.
///
/// Kept canonical at every construction: gcd(num, den) = 1 and den is monic,
/// so equality is structural. Zero is 0/1.
class RationalFn {
public:
  RationalFn() : den_(Scalar(1)) {}
  RationalFn(const Scalar& c) : num_(c), den_(Scalar(1)) {}
  RationalFn(Poly num) : num_(std::move(num)), den_(Scalar(1)) {}
  RationalFn(Poly num, Poly den);

  static RationalFn generator() { return RationalFn(Poly::generator()); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

  /// d/dE by the quotient rule.
  RationalFn derivative() const;
  /// Double-precision value at E = e; throws Errc::pole when the denominator
  /// is within 1e-12 of zero there.
  double eval(double e) const;

  /// `num` when den = 1, else `(num)/(den)`.
  std::string to_string(const std::string& var = "E") const;

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);
  RationalFn& operator*=(const Scalar& c);

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  friend RationalFn operator*(RationalFn a, const Scalar& c) { return a *= c; }
  friend RationalFn operator*(const Scalar& c, RationalFn a) { return a *= c; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) = default;

private:
  struct Reduced {};
  RationalFn(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  Poly num_;
  Poly den_;
};

}  // namespace adm
