#include "adm/ratfn.hpp"

#include <cmath>

namespace adm {

namespace {

constexpr double kPoleTolerance = 1e-12;

// Horner on the reversed coefficients: p(e) / e^deg, evaluated at w = 1/e.
long double eval_reversed(const Poly& p, long double w)
{
  long double acc = 0;
  for (const auto& c : p.coeffs())
    acc = acc * w + c.to_double();
  return acc;
}

long double eval_forward(const Poly& p, long double e)
{
  long double acc = 0;
  auto cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it)
    acc = acc * e + it->to_double();
  return acc;
}

}  // namespace

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
  if (den_.is_zero())
    throw Error(Errc::division_by_zero, "rational function with zero denominator");
  reduce();
}

void RationalFn::reduce()
{
  if (num_.is_zero()) {
    den_ = Poly(Scalar(1));
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (!den_.lead().is_one()) {
    Scalar inv = Scalar(1) / den_.lead();
    num_ *= inv;
    den_ = den_.monic();
  }
}

RationalFn RationalFn::derivative() const
{
  if (den_.degree() == 0)
    return RationalFn(num_.derivative(), Poly(Scalar(1)), Reduced{});
  return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

double RationalFn::eval(double e) const
{
  long double n;
  long double d;
  long double scale = 1;
  if (std::fabs(e) <= 1.0) {
    n = eval_forward(num_, e);
    d = eval_forward(den_, e);
  } else {
    long double w = 1.0L / e;
    n = eval_reversed(num_, w);
    d = eval_reversed(den_, w);
    scale = std::pow(static_cast<long double>(e), num_.degree() - den_.degree());
  }
  if (std::fabs(static_cast<double>(d)) < kPoleTolerance)
    throw Error(Errc::pole, "denominator vanishes at E = " + std::to_string(e));
  if (num_.is_zero())
    return 0.0;
  return static_cast<double>(scale * n / d);
}

std::string RationalFn::to_string(const std::string& var) const
{
  if (den_.degree() == 0)
    return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFn RationalFn::operator-() const
{
  return RationalFn(-num_, den_, Reduced{});
}

RationalFn& RationalFn::operator+=(const RationalFn& o)
{
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly left = exact_div(o.den_, g);
  Poly right = exact_div(den_, g);
  num_ = num_ * left + o.num_ * right;
  den_ = den_ * left;
  reduce();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o)
{
  return *this += -o;
}

RationalFn& RationalFn::operator*=(const RationalFn& o)
{
  if (is_zero() || o.is_zero()) {
    *this = RationalFn();
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  Poly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (!den_.lead().is_one()) {
    Scalar inv = Scalar(1) / den_.lead();
    num_ *= inv;
    den_ = den_.monic();
  }
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o)
{
  if (o.is_zero())
    throw Error(Errc::division_by_zero, "division by the zero rational function");
  return *this *= RationalFn(o.den_, o.num_);
}

RationalFn& RationalFn::operator*=(const Scalar& c)
{
  num_ *= c;
  if (num_.is_zero())
    den_ = Poly(Scalar(1));
  return *this;
}

}  // namespace adm
