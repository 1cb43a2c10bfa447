#pragma once

#include <gmpxx.h>

#include <string>

#include "adm/error.hpp"

namespace adm {

using Rational = mpq_class;

/// Exact element of Q(sqrt(d)): rat + rad * sqrt(d).
///
/// The radicand is square-free and is stored as 0 whenever the radical part
/// vanishes, so two scalars with a zero radical part always compare equal
/// structurally. Mixing two different nonzero radicands is an error.
class Scalar {
public:
  Scalar() = default;
  Scalar(long value) : rat_(value) {}
  Scalar(const Rational& value) : rat_(value) { rat_.canonicalize(); }
  Scalar(Rational rat, Rational rad, long radicand);

  /// sqrt(d) for nonnegative d, simplified to k*sqrt(m) with m square-free.
  static Scalar sqrt_of(long d);

  const Rational& rational_part() const noexcept { return rat_; }
  const Rational& radical_part() const noexcept { return rad_; }
  long radicand() const noexcept { return radicand_; }

  bool is_zero() const noexcept { return sgn(rat_) == 0 && sgn(rad_) == 0; }
  bool is_rational() const noexcept { return sgn(rad_) == 0; }
  bool is_one() const noexcept { return is_rational() && rat_ == 1; }

  Scalar conjugate() const;
  /// rat^2 - d * rad^2, always rational.
  Rational norm() const;
  double to_double() const;

  /// `p/q`, `p/q + r/s*sqrt(d)`, or `r/s*sqrt(d)`.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b)
  {
    return a.radicand_ == b.radicand_ && a.rat_ == b.rat_ && a.rad_ == b.rad_;
  }

private:
  long common_radicand(const Scalar& o) const;
  void normalize();

  Rational rat_{0};
  Rational rad_{0};
  long radicand_ = 0;
};

std::string to_string(const Rational& r);

/// True when the printed form starts with a minus sign, so sums can render
/// it as ` - |c|`.
inline bool prints_negative(const Scalar& c)
{
  return sgn(c.rational_part()) < 0 || (sgn(c.rational_part()) == 0 && sgn(c.radical_part()) < 0);
}

}  // namespace adm
