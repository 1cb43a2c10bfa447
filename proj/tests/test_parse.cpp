#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adm/parse.hpp"

using namespace adm;

namespace {

Errc code_of(auto&& fn)
{
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an adm::Error");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("rationals")
{
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational(" -1/2 ") == Rational(-1, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-.5") == Rational(-1, 2));
  CHECK(parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(parse_rational("1E2") == Rational(100));
  CHECK(parse_rational("+7") == Rational(7));
  for (const char* bad : {"", "abc", "1/", "/2", "1.2.3", "1e", "1/2/3", "0x10"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { parse_rational(bad); }) == Errc::parse);
  }
  CHECK(code_of([] { parse_rational("1/0"); }) == Errc::division_by_zero);
}

TEST_CASE("scalars")
{
  CHECK(parse_scalar("1/2") == Scalar(Rational(1, 2)));
  CHECK(parse_scalar("sqrt(3)") == Scalar(0, 1, 3));
  CHECK(parse_scalar("sqrt(3)/2") == Scalar(0, Rational(1, 2), 3));
  CHECK(parse_scalar("1/2 + 3/4*sqrt(3)") == Scalar(Rational(1, 2), Rational(3, 4), 3));
  CHECK(parse_scalar("1 - sqrt(12)") == Scalar(1, -2, 3));
  CHECK(parse_scalar("-sqrt(4)") == Scalar(-2));
  CHECK(code_of([] { parse_scalar("sqrt(2) + sqrt(3)"); }) == Errc::radicand_mismatch);
  CHECK(code_of([] { parse_scalar("sqrt(x)"); }) == Errc::parse);
  CHECK(code_of([] { parse_scalar("1 +"); }) == Errc::parse);
}

TEST_CASE("coefficient lists and rational functions")
{
  auto c = parse_coeff_list("0, -1, 1");
  REQUIRE(c.size() == 3);
  CHECK(c[1] == Scalar(-1));
  CHECK(code_of([] { parse_coeff_list("1,,2"); }) == Errc::parse);
  CHECK(code_of([] { parse_coeff_list(""); }) == Errc::parse);

  RationalFn e = RationalFn::generator();
  RationalFn one(Scalar(1));
  CHECK(parse_ratfn("[1]/[1,2,1]") == one / ((e + one) * (e + one)));
  CHECK(parse_ratfn("[0,1]") == e);
  CHECK(code_of([] { parse_ratfn("[1]/[0]"); }) == Errc::division_by_zero);
  CHECK(code_of([] { parse_ratfn("1,2"); }) == Errc::parse);
  CHECK(code_of([] { parse_ratfn("[1] [2]"); }) == Errc::parse);
}

TEST_CASE("rates")
{
  CHECK(parse_rate("param") == Rate::parameter());
  CHECK(parse_rate("0") == Rate::constant());
  CHECK(parse_rate("1/6*sqrt(6)") == Rate(Rational(1, 6), 6));
  CHECK(parse_rate("sqrt(6)/2") == Rate(Rational(1, 2), 6));
  CHECK(parse_rate("2") == Rate(Rational(2), 1));
}

TEST_CASE("problems")
{
  CHECK(parse_problem("nws-case2").kind == ProblemKind::nws_case2);
  CHECK(parse_problem(" nws-case3 ").kind == ProblemKind::nws_case3);
  CHECK(parse_problem("fisher:alpha").kind == ProblemKind::fisher_symbolic);
  auto f = parse_problem("fisher:0.5");
  CHECK(f.kind == ProblemKind::fisher);
  CHECK(*f.fisher_alpha == Rational(1, 2));

  auto in = parse_problem("inline:k=1;a=1;b=1;q=2;u0=[1]/[1,2,1];rate=1/6*sqrt(6)");
  CHECK(in.kind == ProblemKind::custom);
  CHECK(in.u0 == nws_case2().u0);
  CHECK(solve(in, 3).terms == solve(nws_case2(), 3).terms);

  auto constant = parse_problem("inline:k=2;a=1;b=1;q=3;u0=[1/3]");
  CHECK(constant.rate == Rate::constant());
  CHECK(constant.q == 3);

  CHECK(code_of([] { parse_problem("heat"); }) == Errc::parse);
  CHECK(code_of([] { parse_problem("fisher:"); }) == Errc::parse);
  CHECK(code_of([] { parse_problem("inline:k=1;a=1;b=1;q=2"); }) == Errc::parse);
  CHECK(code_of([] { parse_problem("inline:k=1;a=1;b=1;q=2;u0=[1];z=3"); }) == Errc::parse);
  CHECK(code_of([] { parse_problem("inline:k=0;a=1;b=1;q=2;u0=[1]"); }) == Errc::invalid_argument);
  CHECK(code_of([] { parse_problem("inline:k=1;a=1;b=1;q=0;u0=[1]"); }) == Errc::invalid_argument);
  CHECK(code_of([] { parse_problem("inline:k=1;a=1;b=1;q=two;u0=[1]"); }) == Errc::parse);
}
