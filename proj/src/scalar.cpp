#include "adm/scalar.hpp"

#include <cmath>

namespace adm {

const char* errc_name(Errc code) noexcept
{
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::division_by_zero: return "division by zero";
    case Errc::radicand_mismatch: return "radicand mismatch";
    case Errc::rate_mismatch: return "rate mismatch";
    case Errc::pole: return "pole";
    case Errc::degree_cap: return "degree cap exceeded";
    case Errc::no_reference: return "no reference available";
    case Errc::parse: return "parse error";
    case Errc::unbound_parameter: return "unbound parameter";
  }
  return "unknown error";
}

std::string to_string(const Rational& r)
{
  return r.get_str();
}

namespace {

// Splits d into k^2 * m with m square-free.
std::pair<long, long> split_square(long d)
{
  long k = 1;
  for (long p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      k *= p;
    }
  }
  return {k, d};
}

}  // namespace

Scalar::Scalar(Rational rat, Rational rad, long radicand)
    : rat_(std::move(rat)), rad_(std::move(rad)), radicand_(radicand)
{
  if (radicand < 0)
    throw Error(Errc::invalid_argument, "negative radicand " + std::to_string(radicand));
  rat_.canonicalize();
  rad_.canonicalize();
  auto [k, m] = split_square(radicand_);
  rad_ *= k;
  radicand_ = m;
  normalize();
}

Scalar Scalar::sqrt_of(long d)
{
  return Scalar(0, 1, d);
}

void Scalar::normalize()
{
  if (radicand_ == 1) {
    rat_ += rad_;
    rad_ = 0;
  }
  if (radicand_ == 0)
    rad_ = 0;
  if (sgn(rad_) == 0)
    radicand_ = 0;
}

long Scalar::common_radicand(const Scalar& o) const
{
  if (radicand_ == 0)
    return o.radicand_;
  if (o.radicand_ == 0 || o.radicand_ == radicand_)
    return radicand_;
  throw Error(Errc::radicand_mismatch, "cannot combine sqrt(" + std::to_string(radicand_) +
                                           ") with sqrt(" + std::to_string(o.radicand_) + ")");
}

Scalar Scalar::conjugate() const
{
  Scalar r = *this;
  r.rad_ = -r.rad_;
  return r;
}

Rational Scalar::norm() const
{
  Rational n = rat_ * rat_ - Rational(radicand_) * rad_ * rad_;
  return n;
}

double Scalar::to_double() const
{
  double v = rat_.get_d();
  if (radicand_ != 0)
    v += rad_.get_d() * std::sqrt(static_cast<double>(radicand_));
  return v;
}

std::string Scalar::to_string() const
{
  if (radicand_ == 0)
    return rat_.get_str();
  std::string rad = abs(rad_) == 1 ? std::string() : Rational(abs(rad_)).get_str() + "*";
  rad += "sqrt(" + std::to_string(radicand_) + ")";
  if (sgn(rat_) == 0)
    return (sgn(rad_) < 0 ? "-" : "") + rad;
  return rat_.get_str() + (sgn(rad_) < 0 ? " - " : " + ") + rad;
}

Scalar Scalar::operator-() const
{
  Scalar r = *this;
  r.rat_ = -r.rat_;
  r.rad_ = -r.rad_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
  radicand_ = common_radicand(o);
  rat_ += o.rat_;
  rad_ += o.rad_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
  radicand_ = common_radicand(o);
  rat_ -= o.rat_;
  rad_ -= o.rad_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
  long d = common_radicand(o);
  if (is_rational() && o.is_rational()) {
    rat_ *= o.rat_;
    return *this;
  }
  Rational rat = rat_ * o.rat_ + Rational(d) * rad_ * o.rad_;
  Rational rad = rat_ * o.rad_ + rad_ * o.rat_;
  rat_ = std::move(rat);
  rad_ = std::move(rad);
  radicand_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
  if (o.is_zero())
    throw Error(Errc::division_by_zero, "scalar division by zero");
  if (o.is_rational()) {
    rat_ /= o.rat_;
    rad_ /= o.rat_;
    normalize();
    return *this;
  }
  common_radicand(o);
  // Norm is nonzero because the radicand is square-free and o != 0.
  Rational n = o.norm();
  *this *= o.conjugate();
  rat_ /= n;
  rad_ /= n;
  normalize();
  return *this;
}

}  // namespace adm
