#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "adm/ratfn.hpp"
#include "test_support.hpp"

using namespace adm;
using adm::testing::Gen;

namespace {

RationalFn E()
{
  return RationalFn::generator();
}

RationalFn c(long p, long q = 1)
{
  return RationalFn(Scalar(Rational(p, q)));
}

RationalFn one_plus_e_pow(unsigned n)
{
  return RationalFn(Poly(Scalar(1)), pow(Poly(Scalar(1)) + Poly::generator(), n));
}

}  // namespace

TEST_CASE("scalar arithmetic examples")
{
  CHECK(Scalar(Rational(1, 2)) + Scalar(Rational(1, 3)) == Scalar(Rational(5, 6)));

  Scalar half_sqrt3(0, Rational(1, 2), 3);
  CHECK(half_sqrt3 * half_sqrt3 == Scalar(Rational(3, 4)));
  CHECK((half_sqrt3 * half_sqrt3).is_rational());

  Scalar one_plus_sqrt3(1, 1, 3);
  CHECK(one_plus_sqrt3 / one_plus_sqrt3 == Scalar(1));
  CHECK((Scalar(1) / one_plus_sqrt3) * one_plus_sqrt3 == Scalar(1));
}

TEST_CASE("scalar normalization")
{
  // sqrt(12) = 2 sqrt(3); sqrt(4) = 2; sqrt(0) = 0.
  CHECK(Scalar::sqrt_of(12) == Scalar(0, 2, 3));
  CHECK(Scalar::sqrt_of(4) == Scalar(2));
  CHECK(Scalar::sqrt_of(0).is_zero());
  CHECK(Scalar(Rational(2, 4)).rational_part() == Rational(1, 2));
  CHECK(Scalar(5, 0, 3).radicand() == 0);
  CHECK((Scalar(1, 1, 3) - Scalar(0, 1, 3)).radicand() == 0);
  CHECK_THROWS_AS(Scalar(0, 1, -2), Error);
}

TEST_CASE("scalar errors")
{
  try {
    (void)(Scalar(1) / Scalar());
    FAIL("expected division error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::division_by_zero);
  }
  try {
    (void)(Scalar::sqrt_of(2) + Scalar::sqrt_of(3));
    FAIL("expected radicand mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::radicand_mismatch);
  }
  // A rational scalar mixes with any radicand.
  CHECK_NOTHROW((void)(Scalar(3) * Scalar::sqrt_of(3) + Scalar::sqrt_of(3)));
}

TEST_CASE("scalar rendering")
{
  CHECK(Scalar(Rational(3, 4)).to_string() == "3/4");
  CHECK(Scalar(Rational(1, 2), Rational(3, 4), 3).to_string() == "1/2 + 3/4*sqrt(3)");
  CHECK(Scalar(Rational(1, 2), Rational(-3, 4), 3).to_string() == "1/2 - 3/4*sqrt(3)");
  CHECK(Scalar(0, 1, 6).to_string() == "sqrt(6)");
  CHECK(Scalar(0, Rational(-9, 2), 3).to_string() == "-9/2*sqrt(3)");
}

TEST_CASE("rational function canonical form")
{
  // (E^2 - 1)/(E - 1) -> E + 1
  RationalFn f(Poly({Scalar(-1), Scalar(0), Scalar(1)}), Poly({Scalar(-1), Scalar(1)}));
  CHECK(f == E() + c(1));
  CHECK(f.den() == Poly(Scalar(1)));

  // Denominator is made monic: 2/(2E) = 1/E
  RationalFn g(Poly(Scalar(2)), Poly::monomial(Scalar(2), 1));
  CHECK(g.den() == Poly::generator());
  CHECK(g.num() == Poly(Scalar(1)));

  CHECK(RationalFn(Poly(), Poly::generator()) == RationalFn());
  CHECK_THROWS_AS(RationalFn(Poly(Scalar(1)), Poly()), Error);
}

TEST_CASE("rational function arithmetic examples")
{
  CHECK(one_plus_e_pow(2) * one_plus_e_pow(2) == one_plus_e_pow(4));

  // 1/(1+E)^2 - 1/(1+E)^4 = (2E + E^2)/(1+E)^4
  RationalFn diff = one_plus_e_pow(2) - one_plus_e_pow(4);
  RationalFn expected = (E() * c(2) + E() * E()) * one_plus_e_pow(4);
  CHECK(diff == expected);
  CHECK(diff.num() == Poly({Scalar(0), Scalar(2), Scalar(1)}));

  try {
    (void)(E() / RationalFn());
    FAIL("expected division error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::division_by_zero);
  }
}

TEST_CASE("rational function derivative examples")
{
  CHECK(E().derivative() == c(1));
  CHECK(one_plus_e_pow(2).derivative() == one_plus_e_pow(3) * c(-2));
  // d/dE [E/(1+E)^3] = (1 - 2E)/(1+E)^4
  CHECK((E() * one_plus_e_pow(3)).derivative() == (c(1) - E() * c(2)) * one_plus_e_pow(4));
}

TEST_CASE("rational function evaluation")
{
  RationalFn u1 = E() * one_plus_e_pow(3) * c(5, 3);
  CHECK(u1.eval(1.0) == doctest::Approx(5.0 / 24.0).epsilon(1e-15));
  CHECK(one_plus_e_pow(2).eval(1.0) == doctest::Approx(0.25).epsilon(1e-15));

  RationalFn pole(Poly(Scalar(1)), Poly({Scalar(-1), Scalar(1)}));
  try {
    (void)pole.eval(1.0);
    FAIL("expected pole");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::pole);
  }

  // Large generator values are evaluated in scaled form.
  CHECK(std::fabs(one_plus_e_pow(2).eval(1e100) / 1e-200 - 1.0) <= 1e-12);
  RationalFn ratio = E() * E() * one_plus_e_pow(2);
  CHECK(ratio.eval(1e250) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rational function rendering")
{
  RationalFn u1 = E() * one_plus_e_pow(3) * c(5, 3);
  CHECK(u1.to_string() == "(5/3*E)/(1 + 3*E + 3*E^2 + E^3)");
  CHECK((E() - c(1, 2)).to_string() == "-1/2 + E");
  CHECK(RationalFn().to_string() == "0");
  RationalFn rad = E() * RationalFn(Scalar(1, 1, 3));
  CHECK(rad.to_string() == "(1 + sqrt(3))*E");
}

TEST_CASE("polynomial gcd")
{
  Poly a = pow(Poly::generator() + Poly(Scalar(1)), 3) * (Poly::generator() - Poly(Scalar(2)));
  Poly b = pow(Poly::generator() + Poly(Scalar(1)), 2) * Poly::generator();
  CHECK(gcd(a, b) == pow(Poly::generator() + Poly(Scalar(1)), 2));
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(gcd(a, Poly()) == a.monic());
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
}

TEST_CASE("ring axioms on random inputs")
{
  Gen gen(0xA15EBAu);
  for (int trial = 0; trial < 60; ++trial) {
    long d = trial % 2 ? 3 : 0;
    Scalar x = gen.scalar(d), y = gen.scalar(d), z = gen.scalar(d);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + Scalar() == x);
    CHECK(x * Scalar(1) == x);
    if (!y.is_zero())
      CHECK((x / y) * y == x);

    Poly p = gen.poly(d, 3), q = gen.poly(d, 3), r = gen.poly(d, 3);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);

    RationalFn f = gen.ratfn(d), g = gen.ratfn(d), h = gen.ratfn(d);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + RationalFn() == f);
    CHECK(f * c(1) == f);
    CHECK(f - f == RationalFn());
    if (!g.is_zero())
      CHECK((f / g) * g == f);
  }
}

TEST_CASE("derivative is a derivation")
{
  Gen gen(0xD1FFu);
  for (int trial = 0; trial < 40; ++trial) {
    long d = trial % 2 ? 3 : 0;
    RationalFn f = gen.ratfn(d), g = gen.ratfn(d);
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
  }
}

TEST_CASE("evaluation is a homomorphism up to rounding")
{
  Gen gen(0xE7A1u);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    RationalFn f = gen.smooth_ratfn(3), g = gen.smooth_ratfn(3);
    double e = gen.real(0.1, 5.0);
    double lhs = (f * g).eval(e);
    double rhs = f.eval(e) * g.eval(e);
    if (std::fabs(rhs) < 1e-6)
      continue;
    CHECK(std::fabs(lhs - rhs) <= 1e-10 * std::fabs(rhs));
    ++checked;
  }
  CHECK(checked >= 60);
}
