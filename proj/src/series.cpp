#include "adm/series.hpp"

#include <cmath>
#include <numeric>

namespace adm {

// ---------------------------------------------------------------- Rate

Rate::Rate(Rational m, long b) : mult(std::move(m)), base_sq(b)
{
  if (base_sq < 1)
    throw Error(Errc::invalid_argument, "rate base must be sqrt of a positive integer");
  mult.canonicalize();
  for (long p = 2; p * p <= base_sq; ++p) {
    while (base_sq % (p * p) == 0) {
      base_sq /= p * p;
      mult *= p;
    }
  }
}

Rate Rate::parameter()
{
  Rate r;
  r.parametric = true;
  return r;
}

Rate Rate::unit_for(std::span<const Rational> multipliers, long base_sq)
{
  mpz_class num = 0;
  mpz_class den = 1;
  for (const auto& m : multipliers) {
    Rational c = m;
    c.canonicalize();
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  return Rate(Rational(num, den), base_sq);
}

long Rate::exponent_of(const Rational& multiplier) const
{
  if (sgn(mult) == 0)
    throw Error(Errc::invalid_argument, "zero rate has no exponents");
  Rational k = multiplier / mult;
  k.canonicalize();
  if (k.get_den() != 1 || !k.get_num().fits_slong_p())
    throw Error(Errc::invalid_argument,
                "multiplier " + multiplier.get_str() + " is not an integer multiple of " + mult.get_str());
  return k.get_num().get_si();
}

double Rate::mu() const
{
  if (parametric)
    return 0.0;
  return mult.get_d() * std::sqrt(static_cast<double>(base_sq));
}

double Rate::generator_at(double x) const
{
  if (parametric)
    throw Error(Errc::unbound_parameter, "generator is a formal parameter; bind it before evaluating");
  return std::exp(mu() * x);
}

std::string Rate::to_string() const
{
  if (parametric)
    return "alpha";
  if (sgn(mult) == 0)
    return "1";
  std::string m = mult == 1 ? "" : (mult == -1 ? "-" : mult.get_str() + "*");
  if (base_sq == 1)
    return "exp(" + m + "x)";
  return "exp(" + m + "sqrt(" + std::to_string(base_sq) + ")*x)";
}

// ---------------------------------------------------------------- SpatialCoeff

SpatialCoeff::SpatialCoeff(Rate rate, RationalFn even, RationalFn odd)
    : rate_(std::move(rate)), even_(std::move(even)), odd_(std::move(odd))
{
  if (rate_.base_sq == 1 && !odd_.is_zero()) {
    even_ += odd_;
    odd_ = RationalFn();
  }
}

void SpatialCoeff::check_rate(const Rate& o) const
{
  if (!(rate_ == o))
    throw Error(Errc::rate_mismatch, "coefficients use different generators: " + rate_.to_string() +
                                         " vs " + o.to_string());
}

SpatialCoeff SpatialCoeff::ddx() const
{
  if (rate_.x_independent())
    return SpatialCoeff(rate_, RationalFn());
  // mu = m*rho, rho^2 = B:
  //   d/dx (even + rho*odd) = m*B*E*odd' + rho * (m*E*even')
  RationalFn e = RationalFn::generator();
  Scalar m(rate_.mult);
  RationalFn new_even = e * odd_.derivative() * (m * Scalar(rate_.base_sq));
  RationalFn new_odd = e * even_.derivative() * m;
  if (rate_.base_sq == 1)
    return SpatialCoeff(rate_, new_even + new_odd);
  return SpatialCoeff(rate_, std::move(new_even), std::move(new_odd));
}

double SpatialCoeff::eval_at_generator(double e) const
{
  double v = even_.eval(e);
  if (!odd_.is_zero())
    v += std::sqrt(static_cast<double>(rate_.base_sq)) * odd_.eval(e);
  return v;
}

std::string SpatialCoeff::to_string() const
{
  if (odd_.is_zero())
    return even_.to_string();
  std::string odd = "sqrt(" + std::to_string(rate_.base_sq) + ")*(" + odd_.to_string() + ")";
  if (even_.is_zero())
    return odd;
  return even_.to_string() + " + " + odd;
}

SpatialCoeff SpatialCoeff::operator-() const
{
  return SpatialCoeff(rate_, -even_, -odd_);
}

SpatialCoeff& SpatialCoeff::operator+=(const SpatialCoeff& o)
{
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  check_rate(o.rate_);
  even_ += o.even_;
  odd_ += o.odd_;
  return *this;
}

SpatialCoeff& SpatialCoeff::operator-=(const SpatialCoeff& o)
{
  return *this += -o;
}

SpatialCoeff& SpatialCoeff::operator*=(const SpatialCoeff& o)
{
  if (is_zero() || o.is_zero()) {
    if (is_zero() && !o.is_zero())
      rate_ = o.rate_;
    even_ = RationalFn();
    odd_ = RationalFn();
    return *this;
  }
  check_rate(o.rate_);
  if (odd_.is_zero() && o.odd_.is_zero()) {
    even_ *= o.even_;
    return *this;
  }
  RationalFn even = even_ * o.even_ + odd_ * o.odd_ * Scalar(rate_.base_sq);
  RationalFn odd = even_ * o.odd_ + odd_ * o.even_;
  even_ = std::move(even);
  odd_ = std::move(odd);
  return *this;
}

SpatialCoeff& SpatialCoeff::operator*=(const Scalar& c)
{
  even_ *= c;
  odd_ *= c;
  return *this;
}

// ---------------------------------------------------------------- SeriesTerm

SeriesTerm SeriesTerm::constant(const Rate& rate, const RationalFn& c)
{
  return monomial(rate, c, 0);
}

SeriesTerm SeriesTerm::monomial(const Rate& rate, const RationalFn& c, unsigned t_degree)
{
  return monomial(SpatialCoeff(rate, c), t_degree);
}

SeriesTerm SeriesTerm::monomial(const SpatialCoeff& c, unsigned t_degree)
{
  SeriesTerm s(c.rate());
  s.put(t_degree, c);
  return s;
}

void SeriesTerm::put(unsigned k, SpatialCoeff c)
{
  if (c.is_zero())
    terms_.erase(k);
  else
    terms_.insert_or_assign(k, std::move(c));
}

void SeriesTerm::check_rate(const Rate& o) const
{
  if (!(rate_ == o))
    throw Error(Errc::rate_mismatch, "series terms use different generators: " + rate_.to_string() +
                                         " vs " + o.to_string());
}

SpatialCoeff SeriesTerm::coefficient(unsigned k) const
{
  auto it = terms_.find(k);
  return it == terms_.end() ? SpatialCoeff(rate_, RationalFn()) : it->second;
}

SeriesTerm SeriesTerm::ddx() const
{
  SeriesTerm r(rate_);
  if (rate_.x_independent())
    return r;
  for (const auto& [k, c] : terms_)
    r.put(k, c.ddx());
  return r;
}

SeriesTerm SeriesTerm::ddt() const
{
  SeriesTerm r(rate_);
  for (const auto& [k, c] : terms_)
    if (k > 0)
      r.put(k - 1, c * Scalar(static_cast<long>(k)));
  return r;
}

SeriesTerm SeriesTerm::integrate_t(unsigned cap) const
{
  if (degree() + 1 > static_cast<int>(cap))
    throw Error(Errc::degree_cap, "t-degree " + std::to_string(degree() + 1) + " exceeds cap " +
                                      std::to_string(cap));
  SeriesTerm r(rate_);
  for (const auto& [k, c] : terms_)
    r.put(k + 1, c * Scalar(Rational(1, k + 1)));
  return r;
}

double SeriesTerm::eval(double x, double t) const
{
  if (rate_.parametric) {
    // Coefficients free of the parameter evaluate anywhere.
    for (const auto& [k, c] : terms_)
      if (!c.even().is_constant() || !c.odd().is_constant())
        throw Error(Errc::unbound_parameter, "series depends on the formal parameter; bind it first");
    return eval_at_generator(1.0, t);
  }
  return eval_at_generator(rate_.generator_at(x), t);
}

double SeriesTerm::eval_at_generator(double e, double t) const
{
  long double acc = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    long double tk = 1;
    for (unsigned i = 0; i < it->first; ++i)
      tk *= t;
    acc += static_cast<long double>(it->second.eval_at_generator(e)) * tk;
  }
  return static_cast<double>(acc);
}

std::string SeriesTerm::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty())
      out += '\n';
    out += "t^" + std::to_string(k) + ": " + c.to_string();
  }
  return out;
}

SeriesTerm SeriesTerm::operator-() const
{
  SeriesTerm r(rate_);
  for (const auto& [k, c] : terms_)
    r.terms_.emplace(k, -c);
  return r;
}

SeriesTerm& SeriesTerm::operator+=(const SeriesTerm& o)
{
  if (o.is_zero())
    return *this;
  if (is_zero()) {
    rate_ = o.rate_;
  } else {
    check_rate(o.rate_);
  }
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end())
      terms_.emplace(k, c);
    else
      put(k, it->second + c);
  }
  return *this;
}

SeriesTerm& SeriesTerm::operator-=(const SeriesTerm& o)
{
  return *this += -o;
}

SeriesTerm& SeriesTerm::operator*=(const Scalar& c)
{
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_)
    v *= c;
  return *this;
}

SeriesTerm operator*(const SeriesTerm& a, const SeriesTerm& b)
{
  return mul(a, b);
}

SeriesTerm mul(const SeriesTerm& a, const SeriesTerm& b, unsigned cap)
{
  if (a.is_zero() || b.is_zero())
    return SeriesTerm(a.is_zero() ? b.rate() : a.rate());
  if (!(a.rate() == b.rate()))
    throw Error(Errc::rate_mismatch, "series terms use different generators: " + a.rate().to_string() +
                                         " vs " + b.rate().to_string());
  if (a.degree() + b.degree() > static_cast<int>(cap))
    throw Error(Errc::degree_cap, "t-degree " + std::to_string(a.degree() + b.degree()) +
                                      " exceeds cap " + std::to_string(cap));
  std::map<unsigned, SpatialCoeff> acc;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) {
      auto [it, fresh] = acc.try_emplace(i + j, ci * cj);
      if (!fresh)
        it->second += ci * cj;
    }
  SeriesTerm r(a.rate());
  for (auto& [k, c] : acc)
    if (!c.is_zero())
      r += SeriesTerm::monomial(c, k);
  return r;
}

SeriesTerm pow(const SeriesTerm& u, unsigned n, unsigned cap)
{
  SeriesTerm r = SeriesTerm::constant(u.rate(), RationalFn(Scalar(1)));
  for (unsigned i = 0; i < n; ++i)
    r = mul(r, u, cap);
  return r;
}

}  // namespace adm
