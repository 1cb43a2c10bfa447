#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adm/scalar.hpp"

namespace adm {

/// Dense univariate polynomial in the generator E over Q(sqrt(d)).
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  Poly(const Scalar& constant);

  static Poly monomial(const Scalar& c, unsigned degree);
  /// The generator E itself.
  static Poly generator() { return monomial(Scalar(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of E^i; zero beyond the degree.
  Scalar operator[](std::size_t i) const;
  const Scalar& lead() const;

  Poly monic() const;
  Poly derivative() const;
  double eval(double e) const;

  std::string to_string(const std::string& var = "E") const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

private:
  void trim();

  std::vector<Scalar> coeffs_;
};

/// Euclidean division over the field; throws on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; the caller guarantees b divides a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, unsigned n);

}  // namespace adm
