#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "adm/series.hpp"

namespace adm {

/// Polynomial nonlinearity f(u) = sum_j c_j * u^j with degree >= 1.
class Nonlinearity {
public:
  explicit Nonlinearity(std::vector<Scalar> coeffs);

  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
  unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  /// f' as a polynomial; may be constant, so returned as raw coefficients.
  std::vector<Scalar> derivative_coeffs(unsigned order) const;
  std::string to_string() const;

  friend Nonlinearity operator+(const Nonlinearity& f, const Nonlinearity& g);

private:
  std::vector<Scalar> coeffs_;
};

/// Coefficients of lambda^0..lambda^(n-1) in f(sum_k u_k lambda^k), computed by
/// accumulating truncated powers of the lambda-series. `make_constant` lifts a
/// Scalar into Ring. Ring needs +=, *, and Ring * Scalar.
template <class Ring, class MakeConstant>
std::vector<Ring> compose_truncated(const Nonlinearity& f, std::span<const Ring> u,
                                    MakeConstant make_constant)
{
  const std::size_t n = u.size();
  if (n == 0)
    throw Error(Errc::invalid_argument, "Adomian polynomials need at least u_0");
  auto c = f.coeffs();
  std::vector<Ring> out(n, make_constant(Scalar()));
  out[0] = make_constant(c[0]);
  std::vector<Ring> power(u.begin(), u.end());
  for (std::size_t j = 1; j < c.size(); ++j) {
    if (j > 1) {
      std::vector<Ring> next(n, make_constant(Scalar()));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= i; ++k)
          next[i] += power[k] * u[i - k];
      power = std::move(next);
    }
    if (c[j].is_zero())
      continue;
    for (std::size_t i = 0; i < n; ++i)
      out[i] += power[i] * c[j];
  }
  return out;
}

/// A_0..A_N for u_0..u_N (all terms must share one rate).
std::vector<SeriesTerm> adomian_polys(const Nonlinearity& f, std::span<const SeriesTerm> u);

/// A_n for n <= 3 from the derivative formulas
///   A_3 = u_3 f'(u_0) + u_1 u_2 f''(u_0) + u_1^3/3! f'''(u_0).
/// Needs u_0..u_n.
SeriesTerm adomian_closed_form(const Nonlinearity& f, std::span<const SeriesTerm> u, unsigned n);

/// f evaluated at a SeriesTerm by Horner's rule.
SeriesTerm evaluate(std::span<const Scalar> coeffs, const SeriesTerm& u);

/// Sparse polynomial in placeholder symbols u_0, u_1, ... used to print the
/// Adomian polynomials in symbolic form.
class PlaceholderPoly {
public:
  using Exponents = std::vector<unsigned>;

  PlaceholderPoly() = default;
  static PlaceholderPoly constant(const Scalar& c);
  static PlaceholderPoly variable(unsigned index);

  const std::map<Exponents, Scalar, std::greater<>>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::string to_string() const;

  PlaceholderPoly& operator+=(const PlaceholderPoly& o);
  friend PlaceholderPoly operator+(PlaceholderPoly a, const PlaceholderPoly& b) { return a += b; }
  friend PlaceholderPoly operator*(const PlaceholderPoly& a, const PlaceholderPoly& b);
  friend PlaceholderPoly operator*(PlaceholderPoly a, const Scalar& c);
  friend bool operator==(const PlaceholderPoly& a, const PlaceholderPoly& b) = default;

private:
  void add(Exponents e, const Scalar& c);

  std::map<Exponents, Scalar, std::greater<>> terms_;
};

/// A_0..A_order with u_0..u_order left symbolic.
std::vector<PlaceholderPoly> adomian_symbolic(const Nonlinearity& f, unsigned order);

}  // namespace adm
