#pragma once

#include <map>
#include <span>
#include <string>

#include "adm/ratfn.hpp"

namespace adm {

/// Default bound on the t-degree of any SeriesTerm.
inline constexpr unsigned kDefaultDegreeCap = 64;

/// Exponential rate mu = mult * sqrt(base_sq) of the spatial generator
/// E = exp(mu * x).
///
/// A parametric rate marks problems whose generator is a formal parameter
/// (the constant initial value of Fisher's equation) rather than an
/// exponential in x; derivatives in x vanish and numeric evaluation needs an
/// explicit generator value.
struct Rate {
  Rational mult{0};
  long base_sq = 1;
  bool parametric = false;

  Rate() = default;
  Rate(Rational mult, long base_sq);

  static Rate constant() { return Rate(); }
  static Rate parameter();
  /// Largest rate mu0 = g * sqrt(base_sq) such that every multiplier is an
  /// integer multiple of g.
  static Rate unit_for(std::span<const Rational> multipliers, long base_sq);

  bool x_independent() const noexcept { return parametric || sgn(mult) == 0; }
  /// Integer k with multiplier = k * mult.
  long exponent_of(const Rational& multiplier) const;
  double mu() const;
  /// mu^2, exact.
  Rational mu_squared() const { return mult * mult * base_sq; }
  /// Value of E at x; throws Errc::unbound_parameter for parametric rates.
  double generator_at(double x) const;

  std::string to_string() const;

  friend bool operator==(const Rate& a, const Rate& b)
  {
    return a.parametric == b.parametric && a.mult == b.mult && a.base_sq == b.base_sq;
  }
};

/// x-dependent coefficient even(E) + sqrt(base_sq) * odd(E).
///
/// The odd part only appears after an odd number of x-derivatives, since
/// mu itself need not lie in the scalar field (mu = 1/sqrt(6) for Case 2).
class SpatialCoeff {
public:
  SpatialCoeff() = default;
  SpatialCoeff(Rate rate, RationalFn even, RationalFn odd = {});

  const Rate& rate() const noexcept { return rate_; }
  const RationalFn& even() const noexcept { return even_; }
  const RationalFn& odd() const noexcept { return odd_; }
  bool is_zero() const noexcept { return even_.is_zero() && odd_.is_zero(); }

  /// d/dx = mu * E * d/dE.
  SpatialCoeff ddx() const;
  double eval_at_generator(double e) const;

  std::string to_string() const;

  SpatialCoeff operator-() const;
  SpatialCoeff& operator+=(const SpatialCoeff& o);
  SpatialCoeff& operator-=(const SpatialCoeff& o);
  SpatialCoeff& operator*=(const SpatialCoeff& o);
  SpatialCoeff& operator*=(const Scalar& c);

  friend SpatialCoeff operator+(SpatialCoeff a, const SpatialCoeff& b) { return a += b; }
  friend SpatialCoeff operator-(SpatialCoeff a, const SpatialCoeff& b) { return a -= b; }
  friend SpatialCoeff operator*(SpatialCoeff a, const SpatialCoeff& b) { return a *= b; }
  friend SpatialCoeff operator*(SpatialCoeff a, const Scalar& c) { return a *= c; }
  friend bool operator==(const SpatialCoeff& a, const SpatialCoeff& b) = default;

private:
  void check_rate(const Rate& o) const;

  Rate rate_;
  RationalFn even_;
  RationalFn odd_;
};

/// Finite sum over k of c_k(x) * t^k. Zero coefficients are never stored.
class SeriesTerm {
public:
  using Terms = std::map<unsigned, SpatialCoeff>;

  SeriesTerm() = default;
  explicit SeriesTerm(Rate rate) : rate_(std::move(rate)) {}

  static SeriesTerm constant(const Rate& rate, const RationalFn& c);
  static SeriesTerm monomial(const Rate& rate, const RationalFn& c, unsigned t_degree);
  static SeriesTerm monomial(const SpatialCoeff& c, unsigned t_degree);

  const Rate& rate() const noexcept { return rate_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for zero.
  int degree() const noexcept { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }
  /// Exactly one stored t-power.
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  SpatialCoeff coefficient(unsigned k) const;

  SeriesTerm ddx() const;
  SeriesTerm ddt() const;
  /// Integral from 0 to t: c*t^k -> c*t^(k+1)/(k+1).
  SeriesTerm integrate_t(unsigned cap = kDefaultDegreeCap) const;

  /// Value at (x, t) with E = exp(mu*x).
  double eval(double x, double t) const;
  double eval_at_generator(double e, double t) const;

  /// One line per t-power: `t^k: <coefficient>`.
  std::string to_string() const;

  SeriesTerm operator-() const;
  SeriesTerm& operator+=(const SeriesTerm& o);
  SeriesTerm& operator-=(const SeriesTerm& o);
  SeriesTerm& operator*=(const Scalar& c);

  friend SeriesTerm operator+(SeriesTerm a, const SeriesTerm& b) { return a += b; }
  friend SeriesTerm operator-(SeriesTerm a, const SeriesTerm& b) { return a -= b; }
  friend SeriesTerm operator*(SeriesTerm a, const Scalar& c) { return a *= c; }
  friend SeriesTerm operator*(const Scalar& c, SeriesTerm a) { return a *= c; }
  friend SeriesTerm operator*(const SeriesTerm& a, const SeriesTerm& b);
  friend bool operator==(const SeriesTerm& a, const SeriesTerm& b) = default;

private:
  void check_rate(const Rate& o) const;
  void put(unsigned k, SpatialCoeff c);

  Rate rate_;
  Terms terms_;
};

/// Cauchy product in t; throws Errc::degree_cap when the result would
/// exceed `cap`.
SeriesTerm mul(const SeriesTerm& a, const SeriesTerm& b, unsigned cap = kDefaultDegreeCap);
SeriesTerm pow(const SeriesTerm& u, unsigned n, unsigned cap = kDefaultDegreeCap);

}  // namespace adm
