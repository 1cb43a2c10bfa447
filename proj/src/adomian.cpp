#include "adm/adomian.hpp"

#include <algorithm>

namespace adm {

Nonlinearity::Nonlinearity(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
{
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
  if (coeffs_.size() < 2)
    throw Error(Errc::invalid_argument, "nonlinearity must have degree >= 1");
}

std::vector<Scalar> Nonlinearity::derivative_coeffs(unsigned order) const
{
  std::vector<Scalar> c(coeffs_.begin(), coeffs_.end());
  for (unsigned r = 0; r < order; ++r) {
    if (c.size() <= 1)
      return {};
    std::vector<Scalar> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
      d[i - 1] = c[i] * Scalar(static_cast<long>(i));
    c = std::move(d);
  }
  return c;
}

std::string Nonlinearity::to_string() const
{
  std::vector<Scalar> c(coeffs_.begin(), coeffs_.end());
  return Poly(std::move(c)).to_string("u");
}

Nonlinearity operator+(const Nonlinearity& f, const Nonlinearity& g)
{
  std::vector<Scalar> c(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
    c[i] += f.coeffs_[i];
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i)
    c[i] += g.coeffs_[i];
  return Nonlinearity(std::move(c));
}

std::vector<SeriesTerm> adomian_polys(const Nonlinearity& f, std::span<const SeriesTerm> u)
{
  if (u.empty())
    throw Error(Errc::invalid_argument, "Adomian polynomials need at least u_0");
  Rate rate = u.front().rate();
  for (const auto& term : u)
    if (!term.is_zero() && !(term.rate() == rate))
      throw Error(Errc::rate_mismatch, "Adomian inputs use different generators");
  return compose_truncated<SeriesTerm>(f, u, [&rate](const Scalar& c) {
    return SeriesTerm::constant(rate, RationalFn(c));
  });
}

SeriesTerm evaluate(std::span<const Scalar> coeffs, const SeriesTerm& u)
{
  SeriesTerm acc(u.rate());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * u;
    acc += SeriesTerm::constant(u.rate(), RationalFn(*it));
  }
  return acc;
}

SeriesTerm adomian_closed_form(const Nonlinearity& f, std::span<const SeriesTerm> u, unsigned n)
{
  if (n > 3)
    throw Error(Errc::invalid_argument, "explicit Adomian formulas are listed only up to A_3");
  if (u.size() <= n)
    throw Error(Errc::invalid_argument, "A_" + std::to_string(n) + " needs u_0..u_" + std::to_string(n));
  auto d = [&](unsigned order) { return evaluate(f.derivative_coeffs(order), u[0]); };
  switch (n) {
    case 0:
      return d(0);
    case 1:
      return u[1] * d(1);
    case 2:
      return u[2] * d(1) + u[1] * u[1] * d(2) * Scalar(Rational(1, 2));
    default:
      return u[3] * d(1) + u[1] * u[2] * d(2) + u[1] * u[1] * u[1] * d(3) * Scalar(Rational(1, 6));
  }
}

// ---------------------------------------------------------------- placeholders

PlaceholderPoly PlaceholderPoly::constant(const Scalar& c)
{
  PlaceholderPoly p;
  p.add({}, c);
  return p;
}

PlaceholderPoly PlaceholderPoly::variable(unsigned index)
{
  PlaceholderPoly p;
  Exponents e(index + 1, 0);
  e[index] = 1;
  p.add(std::move(e), Scalar(1));
  return p;
}

void PlaceholderPoly::add(Exponents e, const Scalar& c)
{
  while (!e.empty() && e.back() == 0)
    e.pop_back();
  if (c.is_zero())
    return;
  auto [it, fresh] = terms_.try_emplace(std::move(e), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

PlaceholderPoly& PlaceholderPoly::operator+=(const PlaceholderPoly& o)
{
  for (const auto& [e, c] : o.terms_)
    add(e, c);
  return *this;
}

PlaceholderPoly operator*(const PlaceholderPoly& a, const PlaceholderPoly& b)
{
  PlaceholderPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      PlaceholderPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i)
        e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i)
        e[i] += eb[i];
      r.add(std::move(e), ca * cb);
    }
  return r;
}

PlaceholderPoly operator*(PlaceholderPoly a, const Scalar& c)
{
  if (c.is_zero())
    return {};
  for (auto& [e, v] : a.terms_)
    v *= c;
  return a;
}

std::string PlaceholderPoly::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (!mono.empty())
        mono += "*";
      mono += "u" + std::to_string(i);
      if (e[i] > 1)
        mono += "^" + std::to_string(e[i]);
    }
    bool negative = prints_negative(c);
    Scalar mag = negative ? -c : c;
    std::string coeff = mag.is_rational() || sgn(mag.rational_part()) == 0 ? mag.to_string() : "(" + mag.to_string() + ")";
    std::string body = mono.empty() ? coeff : (mag.is_one() ? mono : coeff + "*" + mono);
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

std::vector<PlaceholderPoly> adomian_symbolic(const Nonlinearity& f, unsigned order)
{
  std::vector<PlaceholderPoly> u;
  for (unsigned i = 0; i <= order; ++i)
    u.push_back(PlaceholderPoly::variable(i));
  return compose_truncated<PlaceholderPoly>(
      f, u, [](const Scalar& c) { return PlaceholderPoly::constant(c); });
}

}  // namespace adm
