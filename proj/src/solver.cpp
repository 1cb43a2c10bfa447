#include "adm/solver.hpp"

namespace adm {

namespace {

Nonlinearity reaction_nonlinearity(const Scalar& a, const Scalar& b, unsigned q)
{
  std::vector<Scalar> c(q + 1);
  c[1] -= a;
  c[q] += b;
  return Nonlinearity(std::move(c));
}

}  // namespace

NwsProblem make_problem(const Scalar& k, const Scalar& a, const Scalar& b, unsigned q,
                        const SeriesTerm& u0, const Rate& rate)
{
  if (!(k.to_double() > 0.0))
    throw Error(Errc::invalid_argument, "diffusion coefficient k must be positive");
  if (q < 1)
    throw Error(Errc::invalid_argument, "exponent q must be >= 1");
  if (u0.degree() > 0)
    throw Error(Errc::invalid_argument, "initial condition must not depend on t");
  if (!u0.is_zero() && !(u0.rate() == rate))
    throw Error(Errc::rate_mismatch, "initial condition uses a different generator than the problem");

  NwsProblem p{.k = k,
               .a = a,
               .b = b,
               .q = q,
               .u0 = u0.is_zero() ? SeriesTerm(rate) : u0,
               .rate = rate,
               .f = reaction_nonlinearity(a, b, q),
               .linear = q == 1,
               .kind = ProblemKind::custom,
               .name = "custom",
               .fisher_alpha = std::nullopt};
  return p;
}

NwsProblem fisher(const Rational& alpha)
{
  Rate rate = Rate::constant();
  NwsProblem p = make_problem(1, 1, 1, 2, SeriesTerm::constant(rate, RationalFn(Scalar(alpha))), rate);
  p.kind = ProblemKind::fisher;
  p.name = "fisher:" + alpha.get_str();
  p.fisher_alpha = alpha;
  return p;
}

NwsProblem fisher_symbolic()
{
  Rate rate = Rate::parameter();
  NwsProblem p = make_problem(1, 1, 1, 2, SeriesTerm::constant(rate, RationalFn::generator()), rate);
  p.kind = ProblemKind::fisher_symbolic;
  p.name = "fisher:alpha";
  return p;
}

NwsProblem nws_case2()
{
  // e^(x/sqrt6) = e^((1/6) sqrt6 x) is the generator itself.
  const Rational exponents[] = {Rational(1, 6)};
  Rate rate = Rate::unit_for(exponents, 6);
  long p1 = rate.exponent_of(exponents[0]);
  Poly one_plus_e = Poly(Scalar(1)) + Poly::monomial(Scalar(1), static_cast<unsigned>(p1));
  RationalFn u0(Poly(Scalar(1)), pow(one_plus_e, 2));
  NwsProblem p = make_problem(1, 1, 1, 2, SeriesTerm::constant(rate, u0), rate);
  p.kind = ProblemKind::nws_case2;
  p.name = "nws-case2";
  return p;
}

NwsProblem nws_case3()
{
  // e^(sqrt6 x) and e^((sqrt6/2) x) become E^2 and E over E = e^((sqrt6/2) x).
  const Rational exponents[] = {Rational(1), Rational(1, 2)};
  Rate rate = Rate::unit_for(exponents, 6);
  auto full = static_cast<unsigned>(rate.exponent_of(exponents[0]));
  auto half = static_cast<unsigned>(rate.exponent_of(exponents[1]));
  Scalar prefactor(0, Rational(1, 2), 3);  // sqrt(3/4)
  RationalFn u0(Poly::monomial(prefactor, full),
                Poly::monomial(Scalar(1), full) + Poly::monomial(Scalar(1), half));
  NwsProblem p = make_problem(1, 3, 4, 3, SeriesTerm::constant(rate, u0), rate);
  p.kind = ProblemKind::nws_case3;
  p.name = "nws-case3";
  return p;
}

SeriesTerm next_term(const NwsProblem& problem, const SeriesTerm& u_n, const SeriesTerm& a_n,
                     unsigned degree_cap)
{
  if (!u_n.is_zero() && !(u_n.rate() == problem.rate))
    throw Error(Errc::rate_mismatch, "u_n uses a different generator than the problem");
  if (!a_n.is_zero() && !(a_n.rate() == problem.rate))
    throw Error(Errc::rate_mismatch, "A_n uses a different generator than the problem");
  SeriesTerm diffusion = u_n.ddx().ddx() * problem.k;
  SeriesTerm next = (diffusion - a_n).integrate_t(degree_cap);
  if (next.is_zero())
    return SeriesTerm(problem.rate);
  return next;
}

AdmSolution solve(const NwsProblem& problem, unsigned order, const SolveOptions& options)
{
  if (order > options.max_order)
    throw Error(Errc::degree_cap, "order " + std::to_string(order) + " exceeds the cap " +
                                      std::to_string(options.max_order));
  AdmSolution sol{problem, {problem.u0}};
  sol.terms.reserve(order + 1);
  for (unsigned n = 0; n < order; ++n) {
    // A_n needs u_0..u_n only, so it is available as soon as u_n is.
    std::vector<SeriesTerm> a = adomian_polys(problem.f, sol.terms);
    sol.terms.push_back(next_term(problem, sol.terms[n], a[n], options.degree_cap));
  }
  return sol;
}

SeriesTerm partial_sum(const AdmSolution& sol, unsigned order)
{
  if (order > sol.order())
    throw Error(Errc::invalid_argument, "order " + std::to_string(order) + " exceeds the solved order " +
                                            std::to_string(sol.order()));
  SeriesTerm sum(sol.problem.rate);
  for (unsigned n = 0; n <= order; ++n)
    sum += sol.terms[n];
  return sum;
}

double truncated_eval(const AdmSolution& sol, double x, double t, unsigned order)
{
  if (order > sol.order())
    throw Error(Errc::invalid_argument, "order " + std::to_string(order) + " exceeds the solved order " +
                                            std::to_string(sol.order()));
  long double sum = 0;
  for (unsigned n = 0; n <= order; ++n)
    sum += sol.terms[n].eval(x, t);
  return static_cast<double>(sum);
}

double truncated_eval(const AdmSolution& sol, double x, double t)
{
  return truncated_eval(sol, x, t, sol.order());
}

SeriesTerm symbolic_residual(const NwsProblem& problem, const SeriesTerm& u)
{
  SeriesTerm res = u.ddt() - u.ddx().ddx() * problem.k;
  res += evaluate(problem.f.coeffs(), u);
  return res;
}

}  // namespace adm
