#include "adm/reference.hpp"

#include <cmath>
#include <limits>

namespace adm {

namespace {

const double kSqrt6 = std::sqrt(6.0);
const double kSqrt3Over2 = std::sqrt(3.0) / 2.0;

// 1 / (1 + e^z) without overflow.
double logistic_of_neg(double z)
{
  if (z > 0) {
    double w = std::exp(-z);
    return w / (1.0 + w);
  }
  return 1.0 / (1.0 + std::exp(z));
}

}  // namespace

double exact_fisher(double alpha, double t)
{
  // Divide through by e^t when it dominates.
  double num;
  double den;
  if (t > 0) {
    double w = std::exp(-t);
    num = alpha;
    den = (1.0 - alpha) * w + alpha;
  } else {
    double et = std::exp(t);
    num = alpha * et;
    den = 1.0 - alpha + alpha * et;
  }
  if (den == 0.0 || std::fabs(den) < 1e-300)
    throw Error(Errc::pole, "Fisher solution blows up at t = " + std::to_string(t));
  return num / den;
}

double exact_case2(double x, double t)
{
  double s = logistic_of_neg(x / kSqrt6 - 5.0 * t / 6.0);
  return s * s;
}

double exact_case3(double x, double t)
{
  // Dividing through by e^(sqrt6 x) leaves 1 / (1 + e^(-(sqrt6/2) x - 9t/2)).
  return kSqrt3Over2 * logistic_of_neg(-kSqrt6 / 2.0 * x - 4.5 * t);
}

double ExactSolution::operator()(double x, double t) const
{
  switch (kind) {
    case ExactKind::fisher: return exact_fisher(alpha, t);
    case ExactKind::case2: return exact_case2(x, t);
    case ExactKind::case3: return exact_case3(x, t);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::string ExactSolution::name() const
{
  switch (kind) {
    case ExactKind::fisher: return "fisher";
    case ExactKind::case2: return "nws-case2";
    case ExactKind::case3: return "nws-case3";
  }
  return "unknown";
}

std::optional<ExactSolution> reference_for(const NwsProblem& problem)
{
  switch (problem.kind) {
    case ProblemKind::fisher:
      return ExactSolution{ExactKind::fisher, problem.fisher_alpha->get_d()};
    case ProblemKind::nws_case2:
      return ExactSolution{ExactKind::case2};
    case ProblemKind::nws_case3:
      return ExactSolution{ExactKind::case3};
    default:
      return std::nullopt;
  }
}

double fd_residual(double k, double a, double b, unsigned q, const Field& f, double x, double t,
                   double h_x, double h_t)
{
  if (!(h_x > 0) || !(h_t > 0))
    throw Error(Errc::invalid_argument, "finite-difference steps must be positive");
  double c = f(x, t);
  double u_t = (f(x, t + h_t) - f(x, t - h_t)) / (2.0 * h_t);
  double u_xx = (f(x + h_x, t) - 2.0 * c + f(x - h_x, t)) / (h_x * h_x);
  return u_t - k * u_xx - a * c + b * std::pow(c, static_cast<int>(q));
}

double fd_residual(const NwsProblem& problem, const Field& f, double x, double t, double h_x,
                   double h_t)
{
  return fd_residual(problem.k.to_double(), problem.a.to_double(), problem.b.to_double(), problem.q,
                     f, x, t, h_x, h_t);
}

std::vector<ErrorRow> error_table(const AdmSolution& sol, const ExactSolution& exact,
                                  std::span<const double> xs, std::span<const double> ts,
                                  std::span<const unsigned> orders)
{
  if (xs.empty() || ts.empty() || orders.empty())
    throw Error(Errc::invalid_argument, "error table needs nonempty x, t and order sets");
  for (unsigned n : orders)
    if (n > sol.order())
      throw Error(Errc::invalid_argument, "order " + std::to_string(n) + " exceeds the solved order " +
                                              std::to_string(sol.order()));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<ErrorRow> rows;
  rows.reserve(xs.size() * ts.size() * orders.size());
  for (double x : xs)
    for (double t : ts)
      for (unsigned n : orders) {
        ErrorRow row{.x = x, .t = t, .order = n, .error = {}};
        try {
          row.approx = truncated_eval(sol, x, t, n);
          row.exact = exact(x, t);
          row.abs_err = std::fabs(row.approx - row.exact);
        } catch (const Error& e) {
          row.approx = row.exact = row.abs_err = nan;
          row.flagged = true;
          row.error = e.what();
        }
        rows.push_back(std::move(row));
      }
  return rows;
}

}  // namespace adm
