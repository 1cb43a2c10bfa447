#include "adm/poly.hpp"

#include <algorithm>

namespace adm {

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
{
  trim();
}

Poly::Poly(const Scalar& constant)
{
  if (!constant.is_zero())
    coeffs_.push_back(constant);
}

Poly Poly::monomial(const Scalar& c, unsigned degree)
{
  if (c.is_zero())
    return {};
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim()
{
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

Scalar Poly::operator[](std::size_t i) const
{
  return i < coeffs_.size() ? coeffs_[i] : Scalar();
}

const Scalar& Poly::lead() const
{
  if (coeffs_.empty())
    throw Error(Errc::invalid_argument, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const
{
  if (is_zero() || lead().is_one())
    return *this;
  Scalar inv = Scalar(1) / lead();
  Poly r = *this;
  for (auto& c : r.coeffs_)
    c *= inv;
  r.coeffs_.back() = Scalar(1);
  return r;
}

Poly Poly::derivative() const
{
  if (coeffs_.size() <= 1)
    return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * Scalar(static_cast<long>(i));
  return Poly(std::move(d));
}

double Poly::eval(double e) const
{
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * e + it->to_double();
  return static_cast<double>(acc);
}

std::string Poly::to_string(const std::string& var) const
{
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero())
      continue;
    bool negative = prints_negative(c);
    Scalar mag = negative ? -c : c;
    std::string body;
    std::string power = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string coeff = mag.is_rational() || sgn(mag.rational_part()) == 0 ? mag.to_string() : "(" + mag.to_string() + ")";
    if (i == 0)
      body = coeff;
    else if (mag.is_one())
      body = power;
    else
      body = coeff + "*" + power;
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

Poly Poly::operator-() const
{
  Poly r = *this;
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o)
{
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& c)
{
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_)
    x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (!b.coeffs_[j].is_zero())
        r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
  if (b.is_zero())
    throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree())
    return {Poly(), a};
  Scalar inv = Scalar(1) / b.lead();
  std::vector<Scalar> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Scalar> quot(a.degree() - b.degree() + 1);
  auto bc = b.coeffs();
  int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Scalar& top = rem[k + db];
    if (top.is_zero())
      continue;
    Scalar q = top * inv;
    for (int j = 0; j < db; ++j)
      if (!bc[j].is_zero())
        rem[k + j] -= q * bc[j];
    rem[k + db] = Scalar();
    quot[k] = std::move(q);
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b)
{
  if (b.degree() == 0) {
    return a * (Scalar(1) / b.lead());
  }
  return divmod(a, b).first;
}

Poly gcd(const Poly& a, const Poly& b)
{
  Poly x = a.monic();
  Poly y = b.monic();
  if (x.degree() < y.degree())
    std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0)
      return Poly(Scalar(1));
    Poly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Poly pow(const Poly& p, unsigned n)
{
  Poly result(Scalar(1));
  Poly base = p;
  while (n) {
    if (n & 1u)
      result = result * base;
    n >>= 1;
    if (n)
      base = base * base;
  }
  return result;
}

}  // namespace adm
