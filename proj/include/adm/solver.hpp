#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adm/adomian.hpp"

namespace adm {

enum class ProblemKind { custom, fisher, fisher_symbolic, nws_case2, nws_case3 };

inline constexpr unsigned kDefaultOrder = 4;
inline constexpr unsigned kDefaultMaxOrder = 32;

/// u_t = k u_xx + a u - b u^q with u(x, 0) = u0.
///
/// Split as L = d/dt, R u = -k u_xx, N u = f(u) = -a u + b u^q, so the linear
/// reaction term a*u is carried by the nonlinearity.
struct NwsProblem {
  Scalar k;
  Scalar a;
  Scalar b;
  unsigned q = 2;
  SeriesTerm u0;
  Rate rate;
  Nonlinearity f;
  /// q == 1: the reaction is linear.
  bool linear = false;

  ProblemKind kind = ProblemKind::custom;
  std::string name;
  /// Constant initial value for the numeric Fisher preset.
  std::optional<Rational> fisher_alpha;
};

NwsProblem make_problem(const Scalar& k, const Scalar& a, const Scalar& b, unsigned q,
                        const SeriesTerm& u0, const Rate& rate);

/// Fisher's equation with u(x,0) = alpha.
NwsProblem fisher(const Rational& alpha);
/// Fisher's equation with u(x,0) = alpha kept symbolic; alpha is the generator.
NwsProblem fisher_symbolic();
/// u_t = u_xx + u - u^2, u(x,0) = 1/(1 + e^(x/sqrt 6))^2.
NwsProblem nws_case2();
/// u_t = u_xx + 3u - 4u^3, u(x,0) = sqrt(3/4) e^(sqrt6 x)/(e^(sqrt6 x) + e^(sqrt6 x/2)).
NwsProblem nws_case3();

struct AdmSolution {
  NwsProblem problem;
  std::vector<SeriesTerm> terms;

  unsigned order() const noexcept { return static_cast<unsigned>(terms.size() - 1); }
};

struct SolveOptions {
  unsigned max_order = kDefaultMaxOrder;
  unsigned degree_cap = kDefaultDegreeCap;
};

/// u_{n+1} = k * int_0^t (u_n)_xx dt - int_0^t A_n dt.
SeriesTerm next_term(const NwsProblem& problem, const SeriesTerm& u_n, const SeriesTerm& a_n,
                     unsigned degree_cap = kDefaultDegreeCap);

AdmSolution solve(const NwsProblem& problem, unsigned order, const SolveOptions& options = {});

/// Sum of u_0..u_order as a single SeriesTerm.
SeriesTerm partial_sum(const AdmSolution& sol, unsigned order);

/// Sum over n <= order of u_n(x, t).
double truncated_eval(const AdmSolution& sol, double x, double t, unsigned order);
double truncated_eval(const AdmSolution& sol, double x, double t);

/// u_t - k u_xx - a u + b u^q applied exactly to `u`.
SeriesTerm symbolic_residual(const NwsProblem& problem, const SeriesTerm& u);

}  // namespace adm
